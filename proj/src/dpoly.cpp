#include <cmath>
#include <algorithm>
#include <functional>

#include "orthograph/oracle.hpp"

namespace orthograph::oracle {

void CoordPoly::add(Mono m, const Rational& c) {
  if (c == 0) return;
  if (s_ == Setting::Boolean)
    for (auto& e : m) e &= 1;
  auto [it, fresh] = t_.emplace(std::move(m), c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) t_.erase(it);
}

CoordPoly& CoordPoly::operator+=(const CoordPoly& o) {
  for (const auto& [m, c] : o.t_) add(m, c);
  return *this;
}

CoordPoly& CoordPoly::operator-=(const CoordPoly& o) {
  for (const auto& [m, c] : o.t_) add(m, -c);
  return *this;
}

CoordPoly& CoordPoly::operator*=(const Rational& c) {
  if (c == 0) t_.clear();
  for (auto& [m, v] : t_) v *= c;
  return *this;
}

CoordPoly CoordPoly::of_monomial(Setting s, int nv, int n, const std::vector<std::vector<int>>& edges) {
  CoordPoly out(s, nv, n);
  size_t k = edges.size();
  std::vector<int> sigma(k, 0);
  while (true) {
    Mono m(static_cast<size_t>(nv) * n, 0);
    for (size_t e = 0; e < k; ++e)
      for (int v : edges[e]) ++m[v * n + sigma[e]];
    out.add(std::move(m), 1);
    size_t pos = 0;
    while (pos < k && ++sigma[pos] == n) sigma[pos++] = 0;
    if (pos == k) break;
  }
  return out;
}

std::vector<BigInt> hermite(int k) {
  // h_{j+1} = x h_j - j h_{j-1}
  std::vector<BigInt> prev{1}, cur{0, 1};
  if (k == 0) return prev;
  for (int j = 1; j < k; ++j) {
    std::vector<BigInt> next(j + 2, 0);
    for (size_t i = 0; i < cur.size(); ++i) next[i + 1] += cur[i];
    for (size_t i = 0; i < prev.size(); ++i) next[i] -= j * prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

namespace {

using Mono = CoordPoly::Mono;

std::vector<std::vector<int>> edge_indices(const Graph& g) {
  std::vector<std::vector<int>> out;
  for (const auto& e : g.edges()) {
    std::vector<int> idx;
    for (Vertex v : e) idx.push_back(g.index_of(v));
    out.push_back(idx);
  }
  return out;
}

// Per-vertex factor as a list of (exponents over this vertex's coordinates, coeff).
using Local = std::vector<std::pair<std::vector<int>, Rational>>;

// ∏_i h_{α_i}(x_i), optionally with the Maxwell weights on each degree layer.
Local hermite_product(const std::vector<int>& alpha, bool maxwell, int n) {
  Local cur{{std::vector<int>(alpha.size(), 0), Rational(1)}};
  int total = 0;
  for (size_t i = 0; i < alpha.size(); ++i) {
    if (!alpha[i]) continue;
    total += alpha[i];
    auto h = hermite(alpha[i]);
    Local next;
    for (const auto& [m, c] : cur)
      for (size_t j = 0; j < h.size(); ++j) {
        if (h[j] == 0) continue;
        auto m2 = m;
        m2[i] = static_cast<int>(j);
        next.push_back({m2, c * Rational(h[j])});
      }
    cur = std::move(next);
  }
  if (!maxwell) return cur;
  for (auto& [m, c] : cur) {
    int deg = 0;
    for (int e : m) deg += e;
    int k = (total - deg) / 2;
    if (k) c *= fall2(IntPolyN::affine(1, 2 * total - 4), -k).eval(Rational(n));
  }
  return cur;
}

int mono_degree(const Mono& m) {
  int d = 0;
  for (auto e : m) d += e;
  return d;
}

int mono_coords(const Mono& m, int nv, int n) {
  int c = 0;
  for (int i = 0; i < n; ++i)
    for (int v = 0; v < nv; ++v)
      if (m[v * n + i]) {
        ++c;
        break;
      }
  return c;
}

}  // namespace

ConcretePoly recollect(const CoordPoly& c, const std::vector<Vertex>& vertices) {
  int nv = c.vertex_count(), n = c.dim();
  Setting s = c.setting();
  ConcretePoly out{s, vertices, {}};
  CoordPoly rest = c;
  for (int guard = 0; !rest.is_zero(); ++guard) {
    if (guard > 100000) throw OracleError("re-collection did not terminate");
    const Mono* best = nullptr;
    int bd = -1, bc = -1;
    for (const auto& [m, coef] : rest.terms()) {
      int d = mono_degree(m), k = mono_coords(m, nv, n);
      if (d > bd || (d == bd && k > bc)) {
        best = &m;
        bd = d;
        bc = k;
      }
    }
    Mono m = *best;
    Rational coef = rest.terms().at(m);
    std::vector<std::vector<int>> idx;
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
      std::vector<int> sup;
      int mass = 0;
      for (int v = 0; v < nv; ++v) {
        int e = m[v * n + i];
        if (!e) continue;
        mass += e;
        if (e == 2 && s != Setting::Boolean) sup.push_back(v);
        if (e > 2 || (e == 2 && s == Setting::Boolean)) throw OracleError("monomial is not a graph at this n");
        sup.push_back(v);
      }
      if (sup.empty()) continue;
      if (mass != static_cast<int>(sup.size())) throw OracleError("monomial is not a graph at this n");
      if (s != Setting::Boolean && sup.size() != 2) throw OracleError("monomial is not a graph at this n");
      if (s == Setting::Boolean && sup.size() % 2) throw OracleError("odd hyperedge in re-collection");
      idx.push_back(sup);
      Edge e;
      for (int v : sup) e.push_back(vertices[v]);
      edges.push_back(e);
    }
    std::sort(edges.begin(), edges.end());
    BigInt mult = 1;
    for (size_t i = 0, run = 1; i < edges.size(); ++i, ++run) {
      if (i + 1 < edges.size() && edges[i + 1] == edges[i]) continue;
      mult *= factorial(static_cast<long>(run));
      run = 0;
    }
    Rational cH = coef / Rational(mult);
    CoordPoly ex = CoordPoly::of_monomial(s, nv, n, idx);
    ex *= cH;
    rest -= ex;
    out.add(encode_edges(edges), cH);
  }
  return out;
}

ConcretePoly truncation_at_n(const Graph& g, int n) {
  if (n < 1 || n > kMaxN) throw BudgetError("oracle runs need 1 <= n <= " + std::to_string(kMaxN));
  Setting s = g.setting();
  int nv = static_cast<int>(g.vertex_count());
  auto edges = edge_indices(g);
  size_t k = edges.size();
  double count = std::pow(static_cast<double>(n), static_cast<double>(k));
  if (count > static_cast<double>(kMaxLabelings)) throw BudgetError("truncation limited to n^|E| <= 8^6 labelings");
  std::vector<std::vector<int>> inc(nv);  // edges at each vertex, loops twice
  for (size_t e = 0; e < k; ++e)
    for (int v : edges[e]) inc[v].push_back(static_cast<int>(e));

  CoordPoly total(s, nv, n);
  std::vector<int> sigma(k, 0);
  while (true) {
    bool keep = true;
    if (s == Setting::Boolean) {
      for (int v = 0; v < nv && keep; ++v) {
        std::vector<int> used;
        for (int e : inc[v]) used.push_back(sigma[e]);
        std::sort(used.begin(), used.end());
        keep = std::adjacent_find(used.begin(), used.end()) == used.end();
      }
      if (keep) {
        Mono m(static_cast<size_t>(nv) * n, 0);
        for (int v = 0; v < nv; ++v)
          for (int e : inc[v]) ++m[v * n + sigma[e]];
        total.add(std::move(m), 1);
      }
    } else {
      // product over vertices of the local Hermite (or Maxwell) factors
      std::vector<std::pair<Mono, Rational>> acc{{Mono(static_cast<size_t>(nv) * n, 0), Rational(1)}};
      for (int v = 0; v < nv; ++v) {
        std::vector<int> alpha(n, 0);
        for (int e : inc[v]) ++alpha[sigma[e]];
        Local loc = hermite_product(alpha, s == Setting::Spherical, n);
        std::vector<std::pair<Mono, Rational>> next;
        next.reserve(acc.size() * loc.size());
        for (const auto& [m, c] : acc)
          for (const auto& [lm, lc] : loc) {
            Mono m2 = m;
            for (int i = 0; i < n; ++i) m2[v * n + i] = static_cast<uint8_t>(lm[i]);
            next.push_back({std::move(m2), c * lc});
          }
        acc = std::move(next);
      }
      for (auto& [m, c] : acc) total.add(std::move(m), c);
    }
    size_t pos = 0;
    while (pos < k && ++sigma[pos] == n) sigma[pos++] = 0;
    if (pos == k) break;
  }
  return recollect(total, g.vertices());
}

}  // namespace orthograph::oracle
