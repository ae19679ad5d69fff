#include <algorithm>
#include <functional>

#include "orthograph/polyspace.hpp"

namespace orthograph {

std::map<EdgePartition, BigInt> boolean_lambda(int k) {
  std::vector<EdgePartition> even;
  for_each_partition(k, [&](const EdgePartition& p) {
    std::vector<int> size(block_count(p), 0);
    for (int b : p) ++size[b];
    if (std::all_of(size.begin(), size.end(), [](int s) { return s % 2 == 0; })) even.push_back(p);
  });
  std::stable_sort(even.begin(), even.end(),
                   [](const EdgePartition& a, const EdgePartition& b) { return block_count(a) > block_count(b); });
  std::map<EdgePartition, BigInt> lam;
  for (size_t i = 0; i < even.size(); ++i) {
    BigInt below = 0;
    for (size_t j = 0; j < i; ++j)
      if (block_count(even[j]) > block_count(even[i]) && refines(even[j], even[i])) below += lam[even[j]];
    lam[even[i]] = 1 - below;
  }
  return lam;
}

IsserlisResult isserlis(Setting s, int k, int p) {
  if (k < 0 || p < 0) throw GraphError("Isserlis needs k, p >= 0");
  if (k > 12) throw BudgetError("Isserlis expansion limited to 12 factors");
  std::vector<Vertex> vs;
  for (int i = 1; i <= k; ++i) vs.push_back(i);
  IsserlisResult out{InvariantPoly(s, vs), k % 2 == 1};
  if (out.odd) return out;
  IntPolyN n = IntPolyN::n_power(1);

  if (s == Setting::Boolean) {
    RatFuncN scale(IntPolyN::n_power(p));  // <v,v> = n on the cube
    for (const auto& [part, lam] : boolean_lambda(k)) {
      std::vector<Edge> es(block_count(part));
      for (int i = 0; i < k; ++i) es[part[i]].push_back(i + 1);
      out.poly.add_term(es, scale * RatFuncN(lam));
    }
    return out;
  }

  // Gaussian: ∏_{j=1}^{p} (n + k + 2j - 2); spherical: |v| = 1 and the
  // remaining moments are divided by n(n+2)...(n+k-2).
  RatFuncN scale = s == Setting::Gaussian ? rise2(n + IntPolyN(k), p) : rise2(n, -k / 2);
  std::vector<int> pts(k);
  for (int i = 0; i < k; ++i) pts[i] = i + 1;
  std::vector<Edge> cur;
  std::vector<bool> used(k, false);
  std::function<void()> rec = [&]() {
    int first = -1;
    for (int i = 0; i < k; ++i)
      if (!used[i]) {
        first = i;
        break;
      }
    if (first < 0) {
      out.poly.add_term(cur, scale);
      return;
    }
    used[first] = true;
    for (int j = first + 1; j < k; ++j) {
      if (used[j]) continue;
      used[j] = true;
      cur.push_back({pts[first], pts[j]});
      rec();
      cur.pop_back();
      used[j] = false;
    }
    used[first] = false;
  };
  rec();
  return out;
}

std::vector<Graph> lower_degree_basis(const Graph& g) {
  Setting s = g.setting();
  const auto& vs = g.vertices();
  int nv = static_cast<int>(vs.size());
  std::vector<Edge> types;
  if (s == Setting::Boolean) {
    if (nv > 16) throw BudgetError("basis enumeration limited to 16 vertices");
    for (uint32_t mask = 1; mask < (1u << nv); ++mask) {
      int c = __builtin_popcount(mask);
      if (c < 2 || c % 2) continue;
      Edge e;
      for (int i = 0; i < nv; ++i)
        if (mask >> i & 1) e.push_back(vs[i]);
      types.push_back(e);
    }
    std::sort(types.begin(), types.end());
  } else {
    for (int i = 0; i < nv; ++i)
      for (int j = i; j < nv; ++j) {
        if (i == j && s != Setting::Gaussian) continue;
        types.push_back({vs[i], vs[j]});
      }
  }
  int limit = g.total_degree();
  std::vector<Graph> out;
  std::vector<Edge> cur;
  std::function<void(size_t, int)> rec = [&](size_t from, int used) {
    if (used >= limit) return;
    out.push_back(Graph(s, vs, cur));
    for (size_t t = from; t < types.size(); ++t) {
      int size = static_cast<int>(types[t].size());
      if (used + size >= limit) continue;
      cur.push_back(types[t]);
      rec(t, used + size);
      cur.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

std::vector<GsCheck> gram_schmidt_symbolic_check(const std::vector<Graph>& graphs, int max_degree) {
  std::vector<GsCheck> out;
  for (const Graph& g : graphs) {
    if (max_degree >= 0 && g.total_degree() > max_degree) continue;
    InvariantPoly p = orthopoly(g);
    std::string name = to_string(g.setting()) + " " + monomial_text(g);
    RatFuncN lead = p.coeff(g);
    out.push_back({name + " monic", lead == RatFuncN(1), to_text(lead)});
    bool ok = true;
    std::string detail;
    for (const Graph& h : lower_degree_basis(g)) {
      RatFuncN e = expectation(multiply(p, InvariantPoly::monomial(h)));
      if (!e.is_zero()) {
        ok = false;
        detail = "E[p m_" + monomial_text(h) + "] = " + to_text(e);
        break;
      }
    }
    out.push_back({name + " orthogonal to lower degree", ok, detail});
  }
  return out;
}

}  // namespace orthograph
