#include <algorithm>
#include <functional>
#include <numeric>

#include "orthograph/polyspace.hpp"

namespace orthograph {

RatFuncN degree4_inner_product(const Graph& g, const Graph& h) {
  require_max_degree_two(g, h);
  if (!degree_equivalent(g, h)) return RatFuncN(0);
  DartGraph dg = make_darts(g, h);
  auto quad = v4(dg);
  if (quad.size() > 20) throw BudgetError("too many degree-4 vertices");
  // exponent of n -> coefficient
  std::map<int, long long> acc;
  for_each_matching(dg, MatchKind::Cross, [&](const MatchingCollection& m) {
    for (uint32_t mask = 0; mask < (1u << quad.size()); ++mask) {
      std::vector<int> s;
      for (size_t i = 0; i < quad.size(); ++i)
        if (mask >> i & 1) s.push_back(quad[i]);
      int c = count_cycles(dg, rematch(dg, m, s));
      acc[c - static_cast<int>(s.size())] += s.size() % 2 ? -1 : 1;
    }
  });
  RatFuncN total;
  for (auto [e, c] : acc) {
    if (!c) continue;
    RatFuncN t{IntPolyN(c)};
    if (e >= 0) t *= RatFuncN(IntPolyN::n_power(e));
    else t /= RatFuncN(IntPolyN::n_power(-e));
    total += t;
  }
  RatFuncN norm(1);
  for (int d : g.degrees()) norm *= rise2(IntPolyN::n_power(1), -d);
  return total * norm;
}

bool cancellation_applies(const Graph& g, const Graph& h) {
  if (g.vertices() != h.vertices()) throw GraphError("graphs are declared on different vertex sets");
  int nv = static_cast<int>(g.vertex_count());
  struct E {
    int a, b, color;
  };
  std::vector<E> es;
  for (int c = 0; c < 2; ++c)
    for (const auto& e : (c ? h : g).edges()) {
      if (e.size() != 2) throw GraphError("cut-vertex test needs two-endpoint edges");
      es.push_back({g.index_of(e[0]), g.index_of(e[1]), c});
    }
  for (int v = 0; v < nv; ++v) {
    // components of the union with v removed
    std::vector<int> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& e : es)
      if (e.a != v && e.b != v) parent[find(e.a)] = find(e.b);
    std::map<int, int> balance;
    for (const auto& e : es) {
      if ((e.a == v) == (e.b == v)) continue;  // not incident, or a loop
      int w = e.a == v ? e.b : e.a;
      balance[find(w)] += e.color == 0 ? 1 : -1;
    }
    // a single unbalanced component means deg_G(v) != deg_H(v), also a zero
    for (auto [comp, b] : balance)
      if (b != 0) return true;
  }
  return false;
}

}  // namespace orthograph
