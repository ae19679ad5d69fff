#include "orthograph/scan.hpp"

#include <algorithm>

#include "orthograph/parallel.hpp"

namespace orthograph {

std::string to_string(ConjectureStatus s) {
  switch (s) {
    case ConjectureStatus::Consistent: return "consistent";
    case ConjectureStatus::Counterexample: return "counterexample";
    case ConjectureStatus::Vacuous: return "vacuous";
  }
  return "?";
}

namespace {

// ip · n^{|E(G)|+|E(H)|} / simple_sum tends to 1.
bool leading_match(const RatFuncN& ip, const IntPolyN& simple, int edges) {
  if (simple.is_zero()) return ip.is_zero();
  if (ip.is_zero()) return false;
  RatFuncN r = ip * RatFuncN(IntPolyN::n_power(edges)) / RatFuncN(simple);
  return r.num().degree() == r.den().degree() && r.num().lead() == r.den().lead();
}

bool max_degree_two(const Graph& g) {
  auto d = g.degrees();
  return std::all_of(d.begin(), d.end(), [](int x) { return x <= 2; });
}

}  // namespace

ScanRecord scan_pair(const Graph& g0, const Graph& h0) {
  auto [g, h] = on_common_vertices(g0, h0);
  ScanRecord r;
  r.g = g;
  r.h = h;
  r.key = colored_iso_key(g, h, true);
  Graph u = disjoint_union(g, h);
  r.union_planar = is_planar(u, 16);
  r.k5_minor = !r.union_planar && u.vertex_count() <= 16 && has_k5_minor(u);
  r.inner_product = inner_product(g, h);
  r.sign_at_large_n = r.inner_product.sign_at_infinity();
  r.simple_matching_sum = simple_matching_sum(g, h);
  int edges = static_cast<int>(g.edge_count() + h.edge_count());
  if (r.union_planar) {
    r.leading_order_match = leading_match(r.inner_product, r.simple_matching_sum, edges);
    r.conjecture_status = r.sign_at_large_n >= 0 && r.leading_order_match ? ConjectureStatus::Consistent
                                                                           : ConjectureStatus::Counterexample;
  }
  if (max_degree_two(g) && max_degree_two(h)) {
    r.dominance_checked = true;
    DartGraph dg = make_darts(g, h);
    int best_simple = -1;
    std::vector<std::pair<int, long>> terms;
    for_each_matching(dg, MatchKind::Cross, [&](const MatchingCollection& m) {
      int c = count_cycles(dg, m);
      if (is_simple(dg, m)) best_simple = std::max(best_simple, c);
      long s = s_coefficient(dg, m);
      if (s != 0) terms.push_back({c, s});
    });
    for (auto [c, s] : terms)
      if (c > best_simple) r.dominance_holds = false;
    // the combinatorial statement is only conjectured for planar unions
    if (!r.union_planar) r.dominance_holds = true;
    std::sort(terms.begin(), terms.end());
    r.s_terms = std::move(terms);
  }
  return r;
}

std::vector<ScanRecord> scan(const ScanConfig& cfg) {
  if (cfg.budget < 1 || cfg.budget > 10) throw BudgetError("scan budget must be between 1 and 10 union edges");
  PairSpec ps;
  ps.setting = Setting::Spherical;
  ps.max_union_edges = cfg.budget;
  ps.even_union = true;
  ps.degree_equivalent = true;
  ps.loopless = true;
  auto pairs = enumerate_pairs(ps);
  std::vector<ScanRecord> out(pairs.size());
  parallel_for(pairs.size(), cfg.jobs, [&](size_t i) { out[i] = scan_pair(pairs[i].g, pairs[i].h); });
  std::sort(out.begin(), out.end(), [](const ScanRecord& a, const ScanRecord& b) { return a.key < b.key; });
  return out;
}

nlohmann::json to_json(const ScanRecord& r) {
  nlohmann::json j;
  j["g"] = to_json(r.g);
  j["h"] = to_json(r.h);
  j["union_planar"] = r.union_planar;
  j["k5_minor"] = r.k5_minor;
  j["inner_product"] = to_text(r.inner_product);
  j["sign_at_large_n"] = r.sign_at_large_n;
  j["simple_matching_sum"] = to_text(r.simple_matching_sum);
  j["leading_order_match"] = r.leading_order_match;
  j["conjecture_status"] = to_string(r.conjecture_status);
  if (r.dominance_checked) {
    j["dominance_holds"] = r.dominance_holds;
    nlohmann::json s = nlohmann::json::array();
    for (auto [c, v] : r.s_terms) s.push_back({{"cycles", c}, {"s", v}});
    j["s_terms"] = s;
  }
  return j;
}

}  // namespace orthograph
