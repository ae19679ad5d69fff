#include <algorithm>
#include <mutex>
#include <unordered_map>

#include "orthograph/polyspace.hpp"

namespace orthograph {

// ---------------------------------------------------------------- InvariantPoly

InvariantPoly InvariantPoly::monomial(const Graph& g) {
  InvariantPoly p(g.setting(), g.vertices());
  p.add_term(g.edges(), RatFuncN(1));
  return p;
}

InvariantPoly InvariantPoly::constant(Setting s, std::vector<Vertex> vertices, const RatFuncN& c) {
  InvariantPoly p(s, std::move(vertices));
  p.add_key("", c);
  return p;
}

void InvariantPoly::add_key(const std::string& key, const RatFuncN& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void InvariantPoly::add_term(std::vector<Edge> edges, const RatFuncN& c) {
  for (auto& e : edges) {
    std::sort(e.begin(), e.end());
    validate_edge(setting_, e);
    for (Vertex v : e)
      if (!std::binary_search(vertices_.begin(), vertices_.end(), v))
        throw GraphError("term uses a vertex outside the polynomial's vertex set");
  }
  add_key(encode_edges(std::move(edges)), c);
}

RatFuncN InvariantPoly::coeff(const Graph& g) const {
  auto it = terms_.find(g.key());
  return it == terms_.end() ? RatFuncN(0) : it->second;
}

Graph InvariantPoly::term_graph(const std::string& key) const {
  return Graph(setting_, vertices_, decode_edges(key));
}

int InvariantPoly::degree() const {
  int d = -1;
  for (const auto& [key, c] : terms_) {
    int t = 0;
    for (const auto& e : decode_edges(key)) t += static_cast<int>(e.size());
    d = std::max(d, t);
  }
  return d;
}

void InvariantPoly::require_compatible(const InvariantPoly& o) const {
  if (setting_ != o.setting_) throw GraphError("polynomials belong to different settings");
  if (vertices_ != o.vertices_) throw GraphError("polynomials live on different vertex sets");
}

InvariantPoly& InvariantPoly::operator+=(const InvariantPoly& o) {
  require_compatible(o);
  for (const auto& [k, c] : o.terms_) add_key(k, c);
  return *this;
}

InvariantPoly& InvariantPoly::operator-=(const InvariantPoly& o) {
  require_compatible(o);
  for (const auto& [k, c] : o.terms_) add_key(k, -c);
  return *this;
}

InvariantPoly& InvariantPoly::operator*=(const RatFuncN& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

InvariantPoly multiply(const InvariantPoly& p, const InvariantPoly& q) {
  if (p.setting() != q.setting()) throw GraphError("polynomials belong to different settings");
  if (p.vertices() != q.vertices()) throw GraphError("polynomials live on different vertex sets");
  InvariantPoly out(p.setting(), p.vertices());
  for (const auto& [ka, ca] : p.terms()) {
    auto ea = decode_edges(ka);
    for (const auto& [kb, cb] : q.terms()) {
      auto es = ea;
      auto eb = decode_edges(kb);
      es.insert(es.end(), eb.begin(), eb.end());
      out.add_key(encode_edges(std::move(es)), ca * cb);
    }
  }
  return out;
}

// ---------------------------------------------------------------- expectations

namespace {

IntPolyN from_histogram(const std::vector<unsigned long long>& hist) {
  std::vector<BigInt> c;
  for (auto x : hist) {
    BigInt b;
    mpz_import(b.get_mpz_t(), 1, 1, sizeof(x), 0, 0, &x);
    c.push_back(b);
  }
  return IntPolyN(c);
}

// Σ_{M ∈ PM} n^cycles(M) over a dart view.
IntPolyN perfect_cycle_sum(const DartGraph& dg, MatchKind kind) {
  std::vector<unsigned long long> hist(dg.edge_count() + 1, 0);
  for_each_matching(dg, kind, [&](const MatchingCollection& m) { ++hist[count_cycles(dg, m)]; });
  return from_histogram(hist);
}

Graph loose_graph(const std::vector<Edge>& edges) {
  // Gaussian tag: the only setting that admits loops in the container
  return Graph::from_edges(Setting::Gaussian, edges);
}

RatFuncN boolean_expectation(const Graph& g) {
  HyperView hv = make_hyper(g);
  int m = hv.edge_count();
  if (m > 14) throw BudgetError("Boolean expectation limited to 14 hyperedges");
  std::vector<unsigned long long> hist(m + 1, 0);
  // assign edges to blocks, tracking per-block vertex parity as a bitmask
  std::vector<std::vector<uint8_t>> par;
  int nv = hv.vertex_count();
  std::function<void(int)> rec = [&](int e) {
    if (e == m) {
      for (auto& b : par)
        for (auto x : b)
          if (x) return;
      ++hist[par.size()];
      return;
    }
    for (size_t b = 0; b <= par.size(); ++b) {
      bool fresh = b == par.size();
      if (fresh) par.emplace_back(nv, 0);
      for (int v : hv.edges[e]) par[b][v] ^= 1;
      rec(e + 1);
      for (int v : hv.edges[e]) par[b][v] ^= 1;
      if (fresh) par.pop_back();
    }
  };
  rec(0);
  RatFuncN total;
  for (int k = 0; k <= m; ++k)
    if (hist[k]) total += RatFuncN(from_histogram({hist[k]})) * fall1(IntPolyN::n_power(1), k);
  return total;
}

RatFuncN compute_expectation(Setting s, const std::vector<Edge>& edges) {
  if (s == Setting::Boolean) return boolean_expectation(Graph::from_edges(Setting::Boolean, edges));
  Graph g = loose_graph(edges);
  auto deg = g.degrees();
  for (int d : deg)
    if (d % 2) return RatFuncN(0);
  RatFuncN r(perfect_cycle_sum(make_darts(g), MatchKind::Perfect));
  if (s == Setting::Spherical)
    for (int d : deg) r *= rise2(IntPolyN::n_power(1), -d / 2);
  return r;
}

std::mutex cache_mu;
std::unordered_map<std::string, RatFuncN> expectation_cache;
std::unordered_map<std::string, InvariantPoly> orthopoly_cache;

}  // namespace

RatFuncN expectation_of_edges(Setting s, const std::vector<Edge>& edges) {
  Graph g = s == Setting::Boolean ? Graph::from_edges(s, edges) : loose_graph(edges);
  std::string key = std::to_string(static_cast<int>(s)) + iso_key(g);
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = expectation_cache.find(key);
    if (it != expectation_cache.end()) return it->second;
  }
  RatFuncN r = compute_expectation(s, edges);
  std::lock_guard<std::mutex> lock(cache_mu);
  expectation_cache.emplace(key, r);
  return r;
}

RatFuncN expectation(const Graph& g) { return expectation_of_edges(g.setting(), g.edges()); }

RatFuncN expectation(const InvariantPoly& p) {
  RatFuncN total;
  for (const auto& [key, c] : p.terms()) total += c * expectation_of_edges(p.setting(), decode_edges(key));
  return total;
}

// ---------------------------------------------------------------- p_G

namespace {

InvariantPoly orthopoly_matching(const Graph& g, bool keep_loops) {
  bool spherical = g.setting() == Setting::Spherical;
  DartGraph dg = make_darts(g);
  auto deg = g.degrees();
  int nv = dg.vertex_count();
  // key -> signature (cycles, |M_v|...) -> signed count
  std::map<std::string, std::map<std::vector<int>, long long>> acc;
  for_each_matching(dg, MatchKind::Partial, [&](const MatchingCollection& m) {
    RoutingResult r = route(dg, m);
    std::vector<Edge> es;
    for (auto [a, b] : r.routed) {
      if (spherical && a == b && !keep_loops) continue;
      es.push_back({dg.labels[a], dg.labels[b]});
    }
    std::vector<int> sig{r.cycles};
    if (spherical)
      for (int v = 0; v < nv; ++v) {
        int k = 0;
        for (int d : dg.at[v]) k += m.mate[d] > d;
        sig.push_back(k);
      }
    acc[encode_edges(std::move(es))][sig] += m.pairs % 2 ? -1 : 1;
  });
  InvariantPoly p(g.setting(), g.vertices());
  if (spherical && keep_loops) p = InvariantPoly(Setting::Gaussian, g.vertices());
  IntPolyN n = IntPolyN::n_power(1);
  for (const auto& [key, sigs] : acc) {
    RatFuncN c;
    for (const auto& [sig, count] : sigs) {
      if (!count) continue;
      RatFuncN t(IntPolyN::n_power(sig[0]) * IntPolyN(count));
      if (spherical)
        for (int v = 0; v < nv; ++v)
          if (sig[v + 1]) t *= fall2(n + IntPolyN(2 * deg[v] - 4), -sig[v + 1]);
      c += t;
    }
    p.add_key(key, c);
  }
  return p;
}

InvariantPoly orthopoly_boolean(const Graph& g) {
  HyperView hv = make_hyper(g);
  if (hv.edge_count() > 9) throw BudgetError("Boolean p_G limited to 9 hyperedges");
  std::map<std::string, std::map<int, BigInt>> acc;
  for (const auto& [part, mu] : mobius_lambda_c(hv)) {
    HyperRouting r = route_partition(hv, part);
    acc[encode_edges(routed_edges(hv, r))][r.cycles] += mu;
  }
  InvariantPoly p(g.setting(), g.vertices());
  for (const auto& [key, byc] : acc) {
    RatFuncN c;
    for (const auto& [cyc, mu] : byc) c += RatFuncN(IntPolyN::n_power(cyc) * IntPolyN(mu));
    p.add_key(key, c);
  }
  return p;
}

}  // namespace

InvariantPoly orthopoly(const Graph& g, bool keep_loops) {
  if (g.setting() != Setting::Spherical) keep_loops = false;
  std::string key = std::to_string(static_cast<int>(g.setting())) + (keep_loops ? "L" : "-") +
                    encode_edges({g.vertices()}) + "|" + g.key();
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = orthopoly_cache.find(key);
    if (it != orthopoly_cache.end()) return it->second;
  }
  InvariantPoly p = g.setting() == Setting::Boolean ? orthopoly_boolean(g) : orthopoly_matching(g, keep_loops);
  std::lock_guard<std::mutex> lock(cache_mu);
  orthopoly_cache.emplace(key, p);
  return p;
}

// ---------------------------------------------------------------- inner products

RatFuncN cM(const DartGraph& dg, const MatchingCollection& m) {
  IntPolyN n = IntPolyN::n_power(1);
  RatFuncN c(IntPolyN::n_power(count_cycles(dg, m)));
  auto gp = g_pairs(dg, m);
  for (int v = 0; v < dg.vertex_count(); ++v) {
    if (!gp[v]) continue;
    int d = 0;
    for (int x : dg.at[v]) d += dg.dart_color(x) == 0;
    c *= fall2(IntPolyN(-2), gp[v]) * fall2(n + IntPolyN(2 * d - 4), -gp[v]);
  }
  return c;
}

static RatFuncN sphere_normalizer(const Graph& g) {
  RatFuncN r(1);
  for (int d : g.degrees()) r *= rise2(IntPolyN::n_power(1), -d);
  return r;
}

RatFuncN inner_product(const Graph& g, const Graph& h) {
  if (g.setting() != h.setting()) throw GraphError("graphs belong to different settings");
  if (!degree_equivalent(g, h)) return RatFuncN(0);
  switch (g.setting()) {
    case Setting::Gaussian:
      return RatFuncN(perfect_cycle_sum(make_darts(g, h), MatchKind::Cross));
    case Setting::Boolean: {
      HyperView hv = make_hyper(g, h);
      RatFuncN total;
      for (const auto& p : pm_bool_cross(g, h))
        if (is_simple_partition(hv, p)) total += fall1(IntPolyN::n_power(1), block_count(p));
      return total;
    }
    case Setting::Spherical: {
      DartGraph dg = make_darts(g, h);
      auto deg = g.degrees();
      int nv = dg.vertex_count();
      std::map<std::vector<int>, long long> acc;
      for_each_matching(dg, MatchKind::Perfect, [&](const MatchingCollection& m) {
        std::vector<int> sig{count_cycles(dg, m)};
        auto gp = g_pairs(dg, m);
        sig.insert(sig.end(), gp.begin(), gp.end());
        ++acc[sig];
      });
      IntPolyN n = IntPolyN::n_power(1);
      RatFuncN total;
      for (const auto& [sig, count] : acc) {
        RatFuncN t(IntPolyN::n_power(sig[0]) * IntPolyN(count));
        for (int v = 0; v < nv; ++v)
          if (sig[v + 1]) t *= fall2(IntPolyN(-2), sig[v + 1]) * fall2(n + IntPolyN(2 * deg[v] - 4), -sig[v + 1]);
        total += t;
      }
      return total * sphere_normalizer(g);
    }
  }
  return RatFuncN(0);
}

RatFuncN inner_product_via_expectation(const Graph& g, const Graph& h) {
  return expectation(multiply(orthopoly(g), orthopoly(h)));
}

IntPolyN cross_matching_sum(const Graph& g, const Graph& h) {
  if (!degree_equivalent(g, h)) return IntPolyN();
  return perfect_cycle_sum(make_darts(g, h), MatchKind::Cross);
}

RatFuncN inner_product_upper_bound(const Graph& g, const Graph& h) {
  if (!degree_equivalent(g, h)) return RatFuncN(0);
  return RatFuncN(cross_matching_sum(g, h)) * sphere_normalizer(g);
}

IntPolyN simple_matching_sum(const Graph& g, const Graph& h) {
  if (!degree_equivalent(g, h)) return IntPolyN();
  DartGraph dg = make_darts(g, h);
  std::vector<unsigned long long> hist(dg.edge_count() + 1, 0);
  for_each_matching(dg, MatchKind::Cross, [&](const MatchingCollection& m) {
    if (is_simple(dg, m)) ++hist[count_cycles(dg, m)];
  });
  return from_histogram(hist);
}

}  // namespace orthograph
