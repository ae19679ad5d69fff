#include <cmath>
#include <functional>
#include <mutex>
#include <unordered_map>

#include "orthograph/oracle.hpp"

namespace orthograph::oracle {

void ConcretePoly::add(const std::string& key, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms.emplace(key, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) terms.erase(it);
}

ConcretePoly& ConcretePoly::operator-=(const ConcretePoly& o) {
  for (const auto& [k, c] : o.terms) add(k, -c);
  return *this;
}

ConcretePoly eval_at(const InvariantPoly& p, long n) {
  ConcretePoly out{p.setting(), p.vertices(), {}};
  for (const auto& [k, c] : p.terms()) out.add(k, c.eval(Rational(n)));
  return out;
}

std::string to_text(const ConcretePoly& p) {
  if (p.terms.empty()) return "0";
  std::string out;
  for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
    const auto& [k, c] = *it;
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    std::string mono;
    for (const auto& e : decode_edges(k)) mono += (mono.empty() ? "x" : "*x") + edge_label(e);
    std::string body = mono.empty() ? to_string(a) : (a == 1 ? mono : to_string(a) + "*" + mono);
    out += out.empty() ? (neg ? "-" : "") + body : (neg ? " - " : " + ") + body;
  }
  return out;
}

ConcretePoly erase_loops(const ConcretePoly& p) {
  // loop-keeping forms are carried in the Gaussian setting, which admits x_vv
  ConcretePoly out{Setting::Spherical, p.vertices, {}};
  for (const auto& [k, c] : p.terms) {
    std::vector<Edge> kept;
    for (const auto& e : decode_edges(k))
      if (e.size() != 2 || e[0] != e[1]) kept.push_back(e);
    out.add(encode_edges(kept), c);
  }
  return out;
}

namespace {

void check_n(int n) {
  if (n < 1 || n > kMaxN) throw BudgetError("oracle runs need 1 <= n <= " + std::to_string(kMaxN));
}

// Vertex-index form of an edge list.
std::vector<std::vector<int>> indexed(const std::vector<Edge>& edges, int& nv) {
  std::map<Vertex, int> id;
  for (const auto& e : edges)
    for (Vertex v : e) id.emplace(v, 0);
  nv = 0;
  for (auto& [v, i] : id) i = nv++;
  std::vector<std::vector<int>> out;
  for (const auto& e : edges) {
    std::vector<int> x;
    for (Vertex v : e) x.push_back(id[v]);
    out.push_back(x);
  }
  return out;
}

// E[∏_i z_i^{c_i}] for one vector, given the coordinate exponent counts.
Rational vertex_moment(Setting s, const std::vector<int>& counts, int n) {
  int deg = 0;
  for (int c : counts) {
    if (c % 2) return 0;
    deg += c;
  }
  if (s == Setting::Boolean) return 1;
  BigInt num = 1;
  for (int c : counts) num *= double_factorial(c - 1);
  Rational m(num);
  if (s == Setting::Spherical)
    for (int j = 1; j <= deg / 2; ++j) m /= Rational(n + 2 * j - 2);
  return m;
}

Rational labeling_weight(Setting s, const std::vector<std::vector<int>>& edges, const std::vector<int>& sigma,
                         int nv, int coords, int n) {
  std::vector<std::vector<int>> counts(nv, std::vector<int>(coords, 0));
  for (size_t e = 0; e < edges.size(); ++e)
    for (int v : edges[e]) ++counts[v][sigma[e]];
  Rational w = 1;
  for (int v = 0; v < nv && w != 0; ++v) {
    std::vector<int> used;
    for (int c : counts[v])
      if (c) used.push_back(c);
    w *= vertex_moment(s, used, n);
  }
  return w;
}

std::mutex cache_mu;
std::map<std::tuple<int, int, std::string>, Rational> cache;

}  // namespace

Rational exact_expectation_at_n(Setting s, const std::vector<Edge>& edges, int n) {
  check_n(n);
  if (edges.size() > 10) throw BudgetError("exact oracle limited to 10 edges");
  std::string key = encode_edges(edges);
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = cache.find({static_cast<int>(s), n, key});
    if (it != cache.end()) return it->second;
  }
  int nv = 0;
  auto es = indexed(edges, nv);
  size_t k = es.size();
  // σ up to renaming of coordinates: restricted growth strings; a string with
  // b blocks stands for n(n-1)...(n-b+1) labelings.
  Rational total = 0;
  std::vector<int> sigma(k, 0);
  std::function<void(size_t, int)> rec = [&](size_t i, int blocks) {
    if (i == k) {
      Rational w = labeling_weight(s, es, sigma, nv, blocks, n);
      if (w == 0) return;
      BigInt ways = 1;
      for (int j = 0; j < blocks; ++j) ways *= n - j;
      total += w * Rational(ways);
      return;
    }
    for (int b = 0; b <= blocks && b < n; ++b) {
      sigma[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  rec(0, 0);
  std::lock_guard<std::mutex> lock(cache_mu);
  cache[{static_cast<int>(s), n, key}] = total;
  return total;
}

Rational exact_expectation_at_n(const Graph& g, int n) { return exact_expectation_at_n(g.setting(), g.edges(), n); }

Rational exact_expectation_at_n(const ConcretePoly& p, int n) {
  Rational total = 0;
  for (const auto& [k, c] : p.terms) total += c * exact_expectation_at_n(p.setting, decode_edges(k), n);
  return total;
}

Rational literal_expectation_at_n(const Graph& g, int n) {
  check_n(n);
  double count = std::pow(static_cast<double>(n), static_cast<double>(g.edge_count()));
  if (count > static_cast<double>(kMaxLabelings)) throw BudgetError("literal oracle limited to n^|E| <= 8^6");
  int nv = 0;
  auto es = indexed(g.edges(), nv);
  size_t k = es.size();
  std::vector<int> sigma(k, 0);
  Rational total = 0;
  while (true) {
    total += labeling_weight(g.setting(), es, sigma, nv, n, n);
    size_t pos = 0;
    while (pos < k && ++sigma[pos] == n) sigma[pos++] = 0;
    if (pos == k) break;
  }
  return total;
}

Rational hypercube_expectation(const Graph& g, int n) {
  if (g.setting() != Setting::Boolean) throw GraphError("hypercube enumeration is Boolean only");
  int nv = static_cast<int>(g.vertex_count());
  int bits = nv * n;
  if (bits > 20) throw BudgetError("hypercube enumeration limited to n*|V| <= 20");
  std::vector<std::vector<int>> es;
  for (const auto& e : g.edges()) {
    std::vector<int> x;
    for (Vertex v : e) x.push_back(g.index_of(v));
    es.push_back(x);
  }
  BigInt sum = 0;
  for (uint32_t pt = 0; pt < (1u << bits); ++pt) {
    long prod = 1;
    for (const auto& e : es) {
      long ip = 0;
      for (int i = 0; i < n; ++i) {
        int sign = 1;
        for (int v : e)
          if (pt >> (v * n + i) & 1) sign = -sign;
        ip += sign;
      }
      prod *= ip;
    }
    sum += prod;
  }
  Rational avg(sum, BigInt(1) << bits);
  avg.canonicalize();
  return avg;
}

bool equal_as_functions(const ConcretePoly& p, const ConcretePoly& q, int n) {
  ConcretePoly d = p;
  d -= q;
  Rational total = 0;
  for (const auto& [ka, ca] : d.terms) {
    auto ea = decode_edges(ka);
    for (const auto& [kb, cb] : d.terms) {
      auto es = ea;
      auto eb = decode_edges(kb);
      es.insert(es.end(), eb.begin(), eb.end());
      total += ca * cb * exact_expectation_at_n(d.setting, es, n);
    }
  }
  return total == 0;
}

GsResult gram_schmidt_at_n(const Graph& g, int n) {
  check_n(n);
  std::vector<Graph> basis = lower_degree_basis(g);
  size_t m = basis.size();
  auto joint = [&](const Graph& a, const Graph& b) {
    auto es = a.edges();
    es.insert(es.end(), b.edges().begin(), b.edges().end());
    return exact_expectation_at_n(g.setting(), es, n);
  };
  // augmented system [Gram | rhs]
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1));
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = i; j < m; ++j) a[i][j] = a[j][i] = joint(basis[i], basis[j]);
    a[i][m] = joint(basis[i], g);
  }
  // Gauss-Jordan; pivotless columns get coefficient 0
  std::vector<int> pivot_col;
  size_t row = 0;
  for (size_t col = 0; col < m && row < m; ++col) {
    size_t p = row;
    while (p < m && a[p][col] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[row]);
    Rational inv = 1 / a[row][col];
    for (size_t j = col; j <= m; ++j) a[row][j] *= inv;
    for (size_t r = 0; r < m; ++r) {
      if (r == row || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (size_t j = col; j <= m; ++j) a[r][j] -= f * a[row][j];
    }
    pivot_col.push_back(static_cast<int>(col));
    ++row;
  }
  for (size_t r = row; r < m; ++r)
    if (a[r][m] != 0) throw OracleError("inconsistent normal equations");

  GsResult out;
  out.basis_size = static_cast<int>(m);
  out.rank = static_cast<int>(row);
  out.poly = ConcretePoly{g.setting(), g.vertices(), {}};
  out.poly.add(g.key(), 1);
  Rational proj = 0;
  std::vector<Rational> rhs(m);
  for (size_t i = 0; i < m; ++i) rhs[i] = joint(basis[i], g);
  for (size_t r = 0; r < row; ++r) {
    const Rational& c = a[r][m];
    out.poly.add(basis[pivot_col[r]].key(), -c);
    proj += c * rhs[pivot_col[r]];
  }
  out.residual = joint(g, g) - proj;
  out.singular = out.rank < out.basis_size || out.residual == 0;
  return out;
}

std::map<std::string, GsResult> gram_schmidt_at_n(const std::vector<Graph>& graphs, int n) {
  std::map<std::string, GsResult> out;
  for (const auto& g : graphs) out.emplace(g.key(), gram_schmidt_at_n(g, n));
  return out;
}

}  // namespace orthograph::oracle
