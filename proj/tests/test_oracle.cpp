#include <cmath>

#include "doctest.h"
#include "orthograph/montecarlo.hpp"
#include "orthograph/oracle.hpp"

using namespace orthograph;
namespace O = orthograph::oracle;

namespace {
Graph gau(std::vector<Edge> es) { return Graph::from_edges(Setting::Gaussian, std::move(es)); }
Graph sph(std::vector<Edge> es) { return Graph::from_edges(Setting::Spherical, std::move(es)); }
Graph boo(std::vector<Edge> es) { return Graph::from_edges(Setting::Boolean, std::move(es)); }

O::ConcretePoly concrete(Setting s, std::vector<Vertex> vs, std::vector<std::pair<std::vector<Edge>, Rational>> ts) {
  O::ConcretePoly p{s, std::move(vs), {}};
  for (auto& [es, c] : ts) p.add(encode_edges(es), c);
  return p;
}
}  // namespace

TEST_CASE("coordinate-moment expectations") {
  CHECK(O::exact_expectation_at_n(gau({{1, 2}, {2, 3}, {3, 4}, {1, 4}}), 3) == 3);
  CHECK(O::literal_expectation_at_n(gau({{1, 2}, {2, 3}, {3, 4}, {1, 4}}), 3) == 3);
  CHECK(O::hypercube_expectation(boo({{1, 2}, {1, 2}}), 2) == 2);
  CHECK(O::exact_expectation_at_n(boo({{1, 2}, {1, 2}}), 2) == 2);
  // grouped and literal sums agree
  for (const Graph& g : {gau({{1, 1}, {1, 2}, {1, 2}}), sph({{1, 2}, {2, 3}, {1, 3}, {1, 3}}),
                         boo({{1, 2, 3, 4}, {1, 2}, {3, 4}}), sph({{1, 2}, {1, 2}, {1, 2}, {1, 2}})})
    for (int k : {2, 3, 5}) CHECK(O::exact_expectation_at_n(g, k) == O::literal_expectation_at_n(g, k));
  CHECK(O::hypercube_expectation(boo({{1, 2, 3, 4}, {1, 2}, {3, 4}}), 3) ==
        O::exact_expectation_at_n(boo({{1, 2, 3, 4}, {1, 2}, {3, 4}}), 3));
  CHECK_THROWS_AS(O::exact_expectation_at_n(gau({{1, 2}}), 9), BudgetError);
}

TEST_CASE("Gram-Schmidt at fixed n") {
  auto loop = O::gram_schmidt_at_n(gau({{1, 1}}), 4);
  CHECK_FALSE(loop.singular);
  CHECK(loop.poly == concrete(Setting::Gaussian, {1}, {{{{1, 1}}, 1}, {{}, -4}}));
  auto path = O::gram_schmidt_at_n(sph({{1, 2}, {2, 3}}), 5);
  CHECK(path.poly == concrete(Setting::Spherical, {1, 2, 3}, {{{{1, 2}, {2, 3}}, 1}, {{{1, 3}}, Rational(-1, 5)}}));
  auto hyp = O::gram_schmidt_at_n(boo({{1, 2, 3, 4}, {1, 5}}), 6);
  CHECK(hyp.poly == concrete(Setting::Boolean, {1, 2, 3, 4, 5}, {{{{1, 2, 3, 4}, {1, 5}}, 1}, {{{2, 3, 4, 5}}, -1}}));
}

TEST_CASE("truncation definitions") {
  auto star = O::truncation_at_n(gau({{1, 2}, {1, 3}, {1, 4}}), 4);
  CHECK(star == concrete(Setting::Gaussian, {1, 2, 3, 4},
                         {{{{1, 2}, {1, 3}, {1, 4}}, 1},
                          {{{1, 4}, {2, 3}}, -1},
                          {{{1, 3}, {2, 4}}, -1},
                          {{{1, 2}, {3, 4}}, -1}}));
  auto dbl = O::erase_loops(O::truncation_at_n(sph({{1, 2}, {1, 2}}), 4));
  CHECK(dbl == concrete(Setting::Spherical, {1, 2}, {{{{1, 2}, {1, 2}}, 1}, {{}, Rational(-1, 4)}}));
  auto cube = O::truncation_at_n(boo({{1, 2}, {1, 2}, {1, 2}}), 5);
  CHECK(cube == concrete(Setting::Boolean, {1, 2}, {{{{1, 2}, {1, 2}, {1, 2}}, 1}, {{{1, 2}}, -13}}));
}

TEST_CASE("Hermite polynomials") {
  CHECK(O::hermite(4) == std::vector<BigInt>{3, 0, -6, 0, 1});
  CHECK(O::hermite(1) == std::vector<BigInt>{0, 1});
}

TEST_CASE("equality as functions") {
  // at n = 2 a spherical triangle polynomial vanishes identically
  auto p = O::eval_at(orthopoly(sph({{1, 2}, {2, 3}, {1, 3}})), 2);
  O::ConcretePoly zero{Setting::Spherical, p.vertices, {}};
  CHECK(p != zero);
  CHECK(O::equal_as_functions(p, zero, 2));
  CHECK_FALSE(O::equal_as_functions(p, zero, 3));
}

TEST_CASE("Monte Carlo") {
  O::SampleConfig cfg;
  cfg.sample_count = 20000;
  for (Setting s : {Setting::Gaussian, Setting::Spherical, Setting::Boolean}) {
    auto e = O::monte_carlo_expectation({InvariantPoly::monomial(Graph::from_edges(s, {{1, 2}}))}, cfg);
    CHECK(std::abs(e.mean) <= cfg.tolerance_sigmas * e.stderr_);
  }
  auto c4 = O::monte_carlo_expectation({InvariantPoly::monomial(gau({{1, 2}, {2, 3}, {3, 4}, {1, 4}}))}, cfg);
  CHECK(std::abs(c4.mean - 10) <= cfg.tolerance_sigmas * c4.stderr_);
  Graph a = *named_graph("fig4-g"), b = *named_graph("fig4-h");
  auto ip = O::monte_carlo_expectation({orthopoly(a), orthopoly(b)}, cfg);
  double want = 8.0 * 9 / (1e4 * 1728);
  CHECK(std::abs(ip.mean - want) <= cfg.tolerance_sigmas * ip.stderr_);
}

TEST_CASE("Monte Carlo does not depend on the thread count") {
  O::SampleConfig one;
  one.sample_count = 5000;
  O::SampleConfig two = one;
  two.jobs = 2;
  auto p = InvariantPoly::monomial(sph({{1, 2}, {2, 3}, {1, 3}}));
  CHECK(O::monte_carlo_expectation({p}, one).mean == O::monte_carlo_expectation({p}, two).mean);
}

TEST_CASE("orthogonal invariance") {
  O::SampleConfig cfg;
  cfg.n = 6;
  auto tri = O::invariance_check(orthopoly(gau({{1, 2}, {2, 3}, {1, 3}})), cfg, 20);
  CHECK(tri.passed);
  CHECK(tri.trials == 20);
  CHECK(tri.max_deviation < 1e-9);
  cfg.n = 4;
  auto cube = O::invariance_check(orthopoly(boo({{1, 2, 3, 4}})), cfg);
  CHECK(cube.exact);
  CHECK(cube.passed);
  CHECK(cube.trials == 4 * 24 * 16);
  cfg.n = 7;
  auto k5 = O::invariance_check(orthopoly(*named_graph("k5-inner")), cfg);
  CHECK(k5.passed);
}
