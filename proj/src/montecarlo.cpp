#include "orthograph/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "orthograph/parallel.hpp"

namespace orthograph::oracle {

namespace {

struct Compiled {
  std::vector<double> coeff;
  std::vector<Rational> exact;
  std::vector<std::vector<std::vector<int>>> edges;  // term -> edge -> columns
};

Compiled compile(const InvariantPoly& p, const std::vector<Vertex>& vertices, int n) {
  Compiled c;
  for (const auto& [key, f] : p.terms()) {
    Rational v = f.eval(Rational(n));
    c.exact.push_back(v);
    c.coeff.push_back(v.get_d());
    std::vector<std::vector<int>> es;
    for (const auto& e : decode_edges(key)) {
      std::vector<int> cols;
      for (Vertex x : e) {
        auto it = std::lower_bound(vertices.begin(), vertices.end(), x);
        if (it == vertices.end() || *it != x) throw GraphError("polynomial uses a vertex outside the sample");
        cols.push_back(static_cast<int>(it - vertices.begin()));
      }
      es.push_back(cols);
    }
    c.edges.push_back(es);
  }
  return c;
}

template <class M>
auto edge_value(const M& d, const std::vector<int>& cols) {
  using T = std::decay_t<decltype(d(0, 0))>;
  T s = 0;
  for (Eigen::Index i = 0; i < d.rows(); ++i) {
    T prod = 1;
    for (int c : cols) prod *= d(i, c);
    s += prod;
  }
  return s;
}

// value and the sum of absolute term values (the scale for relative errors)
std::pair<double, double> eval_compiled(const Compiled& c, const Sample& d) {
  double total = 0, scale = 0;
  for (size_t t = 0; t < c.coeff.size(); ++t) {
    double m = 1;
    for (const auto& e : c.edges[t]) m *= edge_value(d, e);
    total += c.coeff[t] * m;
    scale += std::abs(c.coeff[t] * m);
  }
  return {total, scale};
}

Rational eval_exact(const Compiled& c, const Eigen::MatrixXi& d) {
  Rational total = 0;
  for (size_t t = 0; t < c.exact.size(); ++t) {
    BigInt m = 1;
    for (const auto& e : c.edges[t]) m *= static_cast<long>(edge_value(d, e));
    total += c.exact[t] * Rational(m);
  }
  return total;
}

std::vector<Vertex> union_vertices(const std::vector<InvariantPoly>& ps) {
  std::vector<Vertex> vs;
  for (const auto& p : ps) vs.insert(vs.end(), p.vertices().begin(), p.vertices().end());
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

}  // namespace

Sample draw(Setting s, int n, int vertex_count, uint64_t seed) {
  std::mt19937_64 rng(seed);
  Sample d(n, vertex_count);
  if (s == Setting::Boolean) {
    for (int v = 0; v < vertex_count; ++v)
      for (int i = 0; i < n; ++i) d(i, v) = (rng() >> 63) ? 1.0 : -1.0;
    return d;
  }
  std::normal_distribution<double> normal;
  for (int v = 0; v < vertex_count; ++v)
    for (int i = 0; i < n; ++i) d(i, v) = normal(rng);
  if (s == Setting::Spherical) d.colwise().normalize();
  return d;
}

double evaluate(const InvariantPoly& p, const std::vector<Vertex>& vertices, const Sample& d) {
  return eval_compiled(compile(p, vertices, static_cast<int>(d.rows())), d).first;
}

Estimate monte_carlo_expectation(const std::vector<InvariantPoly>& factors, const SampleConfig& cfg) {
  if (factors.empty()) throw GraphError("nothing to estimate");
  if (cfg.sample_count < 2) throw GraphError("need at least two samples");
  Setting s = factors.front().setting();
  auto vs = union_vertices(factors);
  std::vector<Compiled> cs;
  for (const auto& f : factors) cs.push_back(compile(f, vs, cfg.n));
  std::vector<double> vals(cfg.sample_count);
  const long chunk = 1000;
  long chunks = (cfg.sample_count + chunk - 1) / chunk;
  parallel_for(chunks, cfg.jobs, [&](size_t c) {
    long lo = static_cast<long>(c) * chunk, hi = std::min(cfg.sample_count, lo + chunk);
    for (long t = lo; t < hi; ++t) {
      Sample d = draw(s, cfg.n, static_cast<int>(vs.size()), derive_seed(cfg.rng_seed, t));
      double prod = 1;
      for (const auto& comp : cs) prod *= eval_compiled(comp, d).first;
      vals[t] = prod;
    }
  });
  double mean = std::accumulate(vals.begin(), vals.end(), 0.0) / vals.size();
  double ss = 0;
  for (double v : vals) ss += (v - mean) * (v - mean);
  double var = ss / (vals.size() - 1);
  return {mean, std::sqrt(var / vals.size()), cfg.sample_count};
}

InvarianceReport invariance_check(const InvariantPoly& p, const SampleConfig& cfg, int trials) {
  InvarianceReport rep;
  const auto& vs = p.vertices();
  int nv = static_cast<int>(vs.size()), n = cfg.n;
  Compiled c = compile(p, vs, n);

  if (p.setting() == Setting::Boolean) {
    rep.exact = true;
    rep.passed = true;
    std::mt19937_64 rng(derive_seed(cfg.rng_seed, 0));
    auto point = [&] {
      Eigen::MatrixXi d(n, nv);
      for (int v = 0; v < nv; ++v)
        for (int i = 0; i < n; ++i) d(i, v) = (rng() >> 63) ? 1 : -1;
      return d;
    };
    auto apply = [&](const Eigen::MatrixXi& d, const std::vector<int>& perm, uint32_t signs) {
      Eigen::MatrixXi out(n, nv);
      for (int i = 0; i < n; ++i) out.row(i) = d.row(perm[i]) * ((signs >> i & 1) ? -1 : 1);
      return out;
    };
    int points = n <= 4 ? 4 : trials;
    for (int k = 0; k < points && rep.passed; ++k) {
      Eigen::MatrixXi d = point();
      Rational base = eval_exact(c, d);
      if (n <= 4) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
          for (uint32_t signs = 0; signs < (1u << n) && rep.passed; ++signs) {
            ++rep.trials;
            if (eval_exact(c, apply(d, perm, signs)) != base) rep.passed = false;
          }
        } while (rep.passed && std::next_permutation(perm.begin(), perm.end()));
      } else {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        ++rep.trials;
        if (eval_exact(c, apply(d, perm, static_cast<uint32_t>(rng()))) != base) rep.passed = false;
      }
    }
    return rep;
  }

  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 rng(derive_seed(cfg.rng_seed, t));
    std::normal_distribution<double> normal;
    Eigen::MatrixXd g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = normal(rng);
    Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(g).householderQ();
    Sample d = draw(p.setting(), n, nv, rng());
    auto [a, sa] = eval_compiled(c, d);
    auto [b, sb] = eval_compiled(c, q * d);
    double dev = std::abs(a - b) / std::max({1.0, sa, sb});
    rep.max_deviation = std::max(rep.max_deviation, dev);
    ++rep.trials;
  }
  rep.passed = rep.max_deviation < 1e-9;
  return rep;
}

}  // namespace orthograph::oracle
