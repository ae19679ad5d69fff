#include "doctest.h"
#include "orthograph/oracle.hpp"
#include "orthograph/polyspace.hpp"

using namespace orthograph;
namespace O = orthograph::oracle;

namespace {
const RatFuncN n = RatFuncN::n();
Graph gau(std::vector<Edge> es) { return Graph::from_edges(Setting::Gaussian, std::move(es)); }
Graph sph(std::vector<Edge> es) { return Graph::from_edges(Setting::Spherical, std::move(es)); }
Graph boo(std::vector<Edge> es) { return Graph::from_edges(Setting::Boolean, std::move(es)); }
}  // namespace

TEST_CASE("expectations") {
  CHECK(expectation(gau({{1, 2}, {2, 3}, {3, 4}, {1, 4}})) == n);
  CHECK(expectation(sph({{1, 2}, {1, 2}})) == 1 / n);
  CHECK(expectation(boo({{1, 2}, {1, 2}})) == n);
  for (int k : {2, 3}) CHECK(O::hypercube_expectation(boo({{1, 2}, {1, 2}}), k) == k);
  // E[x12^4] on the sphere: 3/(n(n+2)), and 1/5 at n = 3 by coordinate moments
  RatFuncN e4 = expectation(sph({{1, 2}, {1, 2}, {1, 2}, {1, 2}}));
  CHECK(e4 == 3 / (n * (n + 2)));
  CHECK(O::exact_expectation_at_n(sph({{1, 2}, {1, 2}, {1, 2}, {1, 2}}), 3) == Rational(1, 5));
  CHECK(expectation(gau({{1, 1}, {1, 1}})) == n * (n + 2));
  CHECK(expectation(gau({{1, 2}})) == RatFuncN(0));
}

TEST_CASE("orthogonal polynomials") {
  Graph star = gau({{1, 2}, {1, 3}, {1, 4}});
  CHECK(orthopoly(star) == parse_poly(Setting::Gaussian, "x12 x13 x14 - x14 x23 - x13 x24 - x12 x34", star.vertices()));
  Graph tri = sph({{1, 2}, {2, 3}, {1, 3}});
  CHECK(orthopoly(tri) ==
        parse_poly(Setting::Spherical, "x12 x13 x23 - (1/n)(x12^2 + x13^2 + x23^2) + 2/n^2", tri.vertices()));
  Graph four = boo({{1, 2}, {1, 2}, {1, 2}, {1, 2}});
  CHECK(orthopoly(four) == parse_poly(Setting::Boolean, "x12^4 - (6n-8)x12^2 + 3n^2 - 6n", four.vertices()));
  Graph loop = gau({{1, 1}});
  CHECK(orthopoly(loop) == parse_poly(Setting::Gaussian, "x11 - n", loop.vertices()));
  CHECK(orthopoly(boo({{1, 2, 3, 4}})) == InvariantPoly::monomial(boo({{1, 2, 3, 4}})));
}

TEST_CASE("spherical loop-keeping form agrees once loops are set to 1") {
  Graph g = sph({{1, 2}, {1, 2}, {2, 3}});
  InvariantPoly kept = orthopoly(g, true), reduced = orthopoly(g);
  for (int k : {4, 5, 7}) CHECK(O::erase_loops(O::eval_at(kept, k)) == O::eval_at(reduced, k));
}

TEST_CASE("inner products") {
  Graph a = *named_graph("k5-inner"), b = *named_graph("k5-outer");
  RatFuncN k5 = inner_product(a, b);
  CHECK(k5 == parse_ratfunc("-8(n-1)(n-2)(n-4)/(n^8(n+2)^4)"));
  CHECK(k5.order() == -9);
  CHECK(inner_product(*named_graph("fig4-g"), *named_graph("fig4-h")) == parse_ratfunc("8(n-1)/(n^4(n+2)^3)"));
  CHECK(inner_product(gau({{1, 2}}), gau({{1, 2}})) == n);
  CHECK(inner_product(gau({{1, 2}}), gau({{1, 2}})) == inner_product_via_expectation(gau({{1, 2}}), gau({{1, 2}})));
}

TEST_CASE("c_M on cross matchings is n^cycles") {
  Graph a = *named_graph("fig4-g"), b = *named_graph("fig4-h");
  DartGraph dg = make_darts(a, b);
  for (const auto& m : enumerate_pm_cross(a, b)) {
    RatFuncN want(IntPolyN::n_power(count_cycles(dg, m)));
    CHECK(cM(dg, m) == want);
  }
}

TEST_CASE("upper bound") {
  CHECK(inner_product_upper_bound(sph({{1, 2}}), sph({{1, 2}})) == 1 / n);
  Graph a = *named_graph("k5-inner"), b = *named_graph("k5-outer");
  CHECK(inner_product_upper_bound(a, b).order() == -8);
  Graph x = sph({{1, 2}}), y = sph({{1, 3}});
  auto [x2, y2] = on_common_vertices(x, y);
  CHECK(inner_product_upper_bound(x2, y2).is_zero());
}

TEST_CASE("degree-4 formula") {
  CHECK(degree4_inner_product(*named_graph("fig4-g"), *named_graph("fig4-h")) ==
        parse_ratfunc("8(n-1)/(n^4(n+2)^3)"));
  Graph a = *named_graph("k5-inner"), b = *named_graph("k5-outer");
  CHECK(degree4_inner_product(a, b) == inner_product(a, b));
  Graph d = sph({{1, 2}, {1, 2}});
  CHECK(degree4_inner_product(d, d) == inner_product(d, d));
  CHECK_THROWS_AS(degree4_inner_product(sph({{1, 2}, {1, 3}, {1, 4}}), sph({{1, 2}, {1, 3}, {1, 4}})), DegreeError);
}

TEST_CASE("cancellation") {
  Graph g = *named_graph("cut-g"), h = *named_graph("cut-h");
  CHECK(cancellation_applies(g, h));
  CHECK(inner_product(g, h).is_zero());
  CHECK_FALSE(cancellation_applies(*named_graph("k5-inner"), *named_graph("k5-outer")));
  Graph p = sph({{1, 2}, {2, 3}, {2, 4}, {2, 5}});
  CHECK_FALSE(cancellation_applies(p, p));
}

TEST_CASE("Isserlis expansions") {
  auto g2 = isserlis(Setting::Gaussian, 2, 0);
  CHECK(g2.poly == InvariantPoly::monomial(gau({{1, 2}})));
  auto g0 = isserlis(Setting::Gaussian, 0, 2);
  CHECK(g0.poly == InvariantPoly::constant(Setting::Gaussian, {}, n * (n + 2)));
  CHECK(isserlis(Setting::Gaussian, 3, 0).odd);
  auto b4 = isserlis(Setting::Boolean, 4, 0);
  CHECK(b4.poly == parse_poly(Setting::Boolean, "x12 x34 + x13 x24 + x14 x23 - 2 x1234", {1, 2, 3, 4}));
  // E[<v,v><v,d1><v,d2>] = (n+2) <d1,d2>
  CHECK(isserlis(Setting::Gaussian, 2, 1).poly.coeff(gau({{1, 2}})) == n + 2);
}

TEST_CASE("Boolean lambda") {
  auto l6 = boolean_lambda(6);
  BigInt sum = 0;
  for (const auto& [p, v] : l6) sum += v;
  CHECK(sum == 1);
  CHECK(l6.at({0, 0, 0, 0, 0, 0}) == 16);
  CHECK(l6.at({0, 0, 1, 1, 1, 1}) == -2);
  CHECK(boolean_lambda(8).at({0, 0, 0, 0, 0, 0, 0, 0}) == -272);
}

TEST_CASE("Gram-Schmidt symbolic check") {
  std::vector<Graph> gs{gau({{1, 1}}), gau({{1, 2}, {1, 2}}), sph({{1, 2}, {2, 3}}), boo({{1, 2}, {1, 2}, {1, 2}})};
  for (const auto& c : gram_schmidt_symbolic_check(gs, -1)) {
    INFO(c.name << " " << c.detail);
    CHECK(c.ok);
  }
}

TEST_CASE("polynomial arithmetic and text") {
  Graph e = gau({{1, 2}});
  InvariantPoly p = InvariantPoly::monomial(e);
  InvariantPoly sq = multiply(p, p);
  CHECK(sq == InvariantPoly::monomial(gau({{1, 2}, {1, 2}})));
  CHECK(parse_poly(Setting::Gaussian, to_text(orthopoly(gau({{1, 1}, {1, 2}})))) == orthopoly(gau({{1, 1}, {1, 2}})));
  CHECK(poly_from_json(to_json(orthopoly(sph({{1, 2}, {2, 3}, {1, 3}})))) == orthopoly(sph({{1, 2}, {2, 3}, {1, 3}})));
  CHECK_THROWS(parse_poly(Setting::Gaussian, "x12 +"));
  CHECK_THROWS(parse_poly(Setting::Gaussian, "x12 / x13"));
  CHECK(parse_poly(Setting::Boolean, "x{10,11,12,13}").terms().begin()->first == encode_edges({{10, 11, 12, 13}}));
}
