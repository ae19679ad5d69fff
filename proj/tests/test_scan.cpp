#include <algorithm>
#include <set>

#include "doctest.h"
#include "orthograph/scan.hpp"

using namespace orthograph;

TEST_CASE("pair enumeration") {
  PairSpec spec;
  spec.setting = Setting::Spherical;
  spec.max_union_edges = 4;
  auto pairs = enumerate_pairs(spec);
  std::set<std::string> keys;
  for (const auto& p : pairs) {
    keys.insert(p.key);
    CHECK(p.key == colored_iso_key(p.g, p.h, true));
    CHECK(p.g.vertices() == p.h.vertices());
    CHECK(p.g.edge_count() + p.h.edge_count() <= 4);
  }
  CHECK(keys.size() == pairs.size());
  CHECK(std::is_sorted(pairs.begin(), pairs.end(), [](const GraphPair& a, const GraphPair& b) { return a.key < b.key; }));
  // G = H = single edge, and G = {12}, H = {} are both in
  CHECK(std::any_of(pairs.begin(), pairs.end(), [](const GraphPair& p) {
    return p.g.edges() == std::vector<Edge>{{1, 2}} && p.h.edges() == std::vector<Edge>{{1, 2}};
  }));
  spec.max_union_edges = 11;
  CHECK_THROWS_AS(enumerate_pairs(spec), BudgetError);
}

TEST_CASE("pair counts at six union edges") {
  for (auto [s, want] : {std::pair{Setting::Gaussian, 7020}, std::pair{Setting::Spherical, 1929}}) {
    PairSpec spec;
    spec.setting = s;
    CHECK(enumerate_pairs(spec).size() == static_cast<size_t>(want));
  }
  PairSpec b;
  b.setting = Setting::Boolean;
  b.max_vertices = 6;
  b.max_union_degree = 12;
  CHECK(enumerate_pairs(b).size() == 3866);
}

TEST_CASE("scan records") {
  ScanRecord k5 = scan_pair(*named_graph("k5-inner"), *named_graph("k5-outer"));
  CHECK_FALSE(k5.union_planar);
  CHECK(k5.k5_minor);
  CHECK(k5.sign_at_large_n == -1);
  ScanRecord f4 = scan_pair(*named_graph("fig4-g"), *named_graph("fig4-h"));
  CHECK(f4.union_planar);
  CHECK(f4.sign_at_large_n == 1);
  CHECK(f4.inner_product == parse_ratfunc("8(n-1)/(n^4(n+2)^3)"));
  CHECK(f4.leading_order_match);
  CHECK(f4.conjecture_status == ConjectureStatus::Consistent);
  CHECK(f4.dominance_checked);
  CHECK(f4.dominance_holds);
  ScanRecord f3 = scan_pair(*named_graph("fig3a-red"), *named_graph("fig3a-blue"));
  CHECK(f3.sign_at_large_n == -1);
  CHECK(f3.inner_product == parse_ratfunc("-16(n-1)(n-2)(n-4)/(n^11(n+2)^5)"));
  auto j = to_json(f4);
  for (const char* k : {"g", "h", "union_planar", "inner_product", "sign_at_large_n", "simple_matching_sum",
                        "conjecture_status"})
    CHECK(j.contains(k));
}

TEST_CASE("scan is independent of the thread count") {
  ScanConfig one;
  one.budget = 6;
  ScanConfig two = one;
  two.jobs = 2;
  auto a = scan(one), b = scan(two);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].key == b[i].key);
    CHECK(to_json(a[i]) == to_json(b[i]));
  }
  for (const auto& r : a) {
    CHECK(r.union_planar);
    CHECK(r.conjecture_status != ConjectureStatus::Counterexample);
  }
  ScanConfig big;
  big.budget = 11;
  CHECK_THROWS_AS(scan(big), BudgetError);
}
