#include "doctest.h"
#include "orthograph/inversion.hpp"

using namespace orthograph;

namespace {
Graph on(Setting s, std::vector<Vertex> vs, std::vector<Edge> es) { return Graph(s, std::move(vs), std::move(es)); }
}  // namespace

TEST_CASE("blocks follow degree maps") {
  auto two = build_blocks({on(Setting::Gaussian, {1, 2, 3}, {{1, 2}}), on(Setting::Gaussian, {1, 2, 3}, {{1, 3}})});
  CHECK(two.size() == 2);
  auto dp = build_blocks(
      {on(Setting::Spherical, {1, 2, 3}, {{1, 2}, {1, 2}}), on(Setting::Spherical, {1, 2, 3}, {{1, 3}, {2, 3}})});
  CHECK(dp.size() == 2);
  auto k5 = build_blocks({*named_graph("k5-inner"), *named_graph("k5-outer")});
  REQUIRE(k5.size() == 1);
  REQUIRE(k5[0].graphs.size() == 2);
  CHECK(k5[0].q[0][1] == parse_ratfunc("-8(n-1)(n-2)(n-4)/(n^8(n+2)^4)"));
  CHECK(k5[0].q[0][1] == k5[0].q[1][0]);
}

TEST_CASE("Gram matrix symmetry and off-block zeros") {
  std::vector<Vertex> vs{1, 2, 3, 4};
  std::vector<Graph> gs{on(Setting::Spherical, vs, {{1, 2}, {3, 4}}), on(Setting::Spherical, vs, {{1, 3}, {2, 4}}),
                        on(Setting::Spherical, vs, {{1, 4}, {2, 3}}), on(Setting::Spherical, vs, {{1, 2}, {2, 3}})};
  auto blocks = build_blocks(gs);
  CHECK(blocks.size() == 2);
  for (const auto& b : blocks)
    for (size_t i = 0; i < b.graphs.size(); ++i)
      for (size_t j = 0; j < b.graphs.size(); ++j) CHECK(b.q[i][j] == b.q[j][i]);
  CHECK(inner_product(gs[0], gs[3]).is_zero());
}

TEST_CASE("single edge") {
  Graph e = Graph::from_edges(Setting::Gaussian, {{1, 2}});
  FourierTarget t;
  t.graphs = {e};
  t.targets = {{e.key(), Rational(1)}};
  t.n = 7;
  Reconstruction r = invert_and_reconstruct(build_blocks({e}), t);
  CHECK(r.residual_zero);
  CHECK(r.coeff.at(e.key()) == Rational(1, 7));
  InvariantPoly want = orthopoly(e);
  want *= RatFuncN(Rational(1, 7));
  CHECK(r.f == want);
}

TEST_CASE("K5 block by hand") {
  Graph a = *named_graph("k5-inner"), b = *named_graph("k5-outer");
  auto blocks = build_blocks({a, b});
  for (long n : {6L, 10L}) {
    auto q = eval_block(blocks[0], n);
    FourierTarget t;
    t.graphs = {a, b};
    t.targets = {{a.key(), Rational(2)}, {b.key(), Rational(5)}};
    t.n = n;
    Reconstruction r = invert_and_reconstruct(blocks, t);
    CHECK(r.residual_zero);
    // Cramer's rule
    Rational det = q[0][0] * q[1][1] - q[0][1] * q[1][0];
    Rational ca = (2 * q[1][1] - 5 * q[0][1]) / det, cb = (5 * q[0][0] - 2 * q[1][0]) / det;
    CHECK(r.coeff.at(a.key()) == ca);
    CHECK(r.coeff.at(b.key()) == cb);
  }
}

TEST_CASE("singular block") {
  Graph tri = Graph::from_edges(Setting::Spherical, {{1, 2}, {2, 3}, {1, 3}});
  FourierTarget t;
  t.graphs = {tri};
  t.targets = {{tri.key(), Rational(1)}};
  t.n = 2;
  CHECK_THROWS_AS(invert_and_reconstruct(build_blocks({tri}), t), SingularBlockError);
  try {
    invert_and_reconstruct(build_blocks({tri}), t);
  } catch (const SingularBlockError& e) {
    CHECK(e.n == 2);
    CHECK(e.block.size() == 1);
  }
}

TEST_CASE("diagonality") {
  auto k5 = build_blocks({*named_graph("k5-inner"), *named_graph("k5-outer")});
  auto rows = diagonality_report(k5[0], {10, 100, 1000});
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].ratio > rows[1].ratio);
  CHECK(rows[1].ratio > rows[2].ratio);
  auto fig4 = build_blocks({*named_graph("fig4-g"), *named_graph("fig4-h")});
  REQUIRE(fig4.size() == 1);
  CHECK(diagonality_report(fig4[0], {100})[0].ratio < 0.01);
  auto single = build_blocks({Graph::from_edges(Setting::Gaussian, {{1, 2}})});
  CHECK(diagonality_report(single[0], {10})[0].ratio == 0);
}

TEST_CASE("target JSON") {
  auto j = nlohmann::json::parse(R"({"setting":"spherical","n":6,
    "targets":[{"graph":[[1,2],[2,3],[3,4],[4,5],[1,5]],"value":"1/3"},
               {"graph":[[1,3],[1,4],[2,4],[2,5],[3,5]],"value":-2}]})");
  FourierTarget t = target_from_json(j);
  CHECK(t.n == 6);
  CHECK(t.graphs.size() == 2);
  CHECK(t.targets.at(t.graphs[0].key()) == Rational(1, 3));
  CHECK(t.targets.at(t.graphs[1].key()) == -2);
  j["targets"][0]["value"] = "1/0";
  CHECK_THROWS(target_from_json(j));
}
