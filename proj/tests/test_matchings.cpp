#include <algorithm>

#include "doctest.h"
#include "orthograph/matchings.hpp"

using namespace orthograph;

namespace {
Graph gau(std::vector<Edge> es) { return Graph::from_edges(Setting::Gaussian, std::move(es)); }
Graph sph(std::vector<Edge> es) { return Graph::from_edges(Setting::Spherical, std::move(es)); }

// number of partial matchings on d points (telephone numbers)
long telephone(int d) {
  long a = 1, b = 1;
  for (int i = 2; i <= d; ++i) {
    long c = b + (i - 1) * a;
    a = b;
    b = c;
  }
  return d == 0 ? 1 : b;
}

std::vector<Edge> sorted(std::vector<Edge> es) {
  std::sort(es.begin(), es.end());
  return es;
}
}  // namespace

TEST_CASE("perfect matching collections") {
  CHECK(enumerate_pm(gau({{1, 2}, {2, 3}, {3, 4}, {1, 4}})).size() == 1);
  CHECK(enumerate_pm(gau({{1, 2}, {2, 3}})).empty());
  Graph k5 = gau({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}});
  CHECK(enumerate_pm(k5).size() == 243);
  CHECK(count_matchings(make_darts(k5), MatchKind::Perfect) == 243);
}

TEST_CASE("partial matching collections") {
  CHECK(enumerate_partial(gau({{1, 2}})).size() == 1);
  CHECK(enumerate_partial(gau({{1, 2}, {1, 3}, {1, 4}})).size() == 4);
  CHECK(enumerate_partial(gau({{1, 2}, {1, 2}})).size() == 4);
  // product of telephone numbers over the vertices
  Graph g = gau({{1, 2}, {1, 2}, {1, 3}, {2, 3}, {3, 3}, {3, 4}});
  long want = 1;
  for (int d : g.degrees()) want *= telephone(d);
  CHECK(static_cast<long>(enumerate_partial(g).size()) == want);
  CHECK(count_matchings(make_darts(g), MatchKind::Partial) == want);
}

TEST_CASE("cross matchings") {
  Graph a = *named_graph("k5-inner"), b = *named_graph("k5-outer");
  DartGraph dg = make_darts(a, b);
  CHECK(enumerate_pm_cross(a, b).size() == 32);
  CHECK(count_matchings(dg, MatchKind::Cross) == 32);
  for (const auto& m : enumerate_pm_cross(a, b))
    for (int c : g_pairs(dg, m)) CHECK(c == 0);
  CHECK(enumerate_pm_cross(sph({{1, 2}, {2, 3}}), sph({{1, 2}, {1, 3}})).empty());
}

TEST_CASE("routing") {
  Graph c4 = gau({{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  DartGraph dg = make_darts(c4);
  auto r = route(dg, enumerate_pm(c4).front());
  CHECK(r.cycles == 1);
  CHECK(r.routed.empty());

  Graph star = gau({{1, 2}, {1, 3}, {1, 4}});
  DartGraph ds = make_darts(star);
  MatchingCollection m;
  m.mate.assign(ds.dart_count(), -1);
  const auto& at_u = ds.at[star.index_of(1)];
  // pair the darts of {1,2} and {1,3} at the centre
  int d2 = -1, d3 = -1;
  for (int d : at_u) {
    Vertex other = ds.labels[ds.vertex[d ^ 1]];
    if (other == 2) d2 = d;
    if (other == 3) d3 = d;
  }
  m.mate[d2] = d3;
  m.mate[d3] = d2;
  m.pairs = 1;
  auto rs = route(ds, m);
  CHECK(rs.cycles == 0);
  CHECK(sorted(routed_edges(ds, rs)) == std::vector<Edge>{{1, 4}, {2, 3}});

  MatchingCollection empty;
  empty.mate.assign(ds.dart_count(), -1);
  auto re = route(ds, empty);
  CHECK(sorted(routed_edges(ds, re)) == star.edges());
  CHECK(re.cycles == 0);
}

TEST_CASE("g-pairs") {
  Graph g = sph({{1, 2}, {1, 2}}), h = sph({{1, 2}, {1, 2}});
  DartGraph dg = make_darts(g, h);
  MatchingCollection m;
  m.mate.assign(dg.dart_count(), -1);
  std::vector<int> gd, hd;
  for (int d : dg.at[0]) (dg.dart_color(d) == 0 ? gd : hd).push_back(d);
  m.mate[gd[0]] = gd[1];
  m.mate[gd[1]] = gd[0];
  m.mate[hd[0]] = hd[1];
  m.mate[hd[1]] = hd[0];
  m.pairs = 2;
  CHECK(g_pairs(dg, m)[0] == 1);

  Graph a = *named_graph("k5-inner"), b = *named_graph("k5-outer");
  DartGraph dk = make_darts(a, b);
  MatchingCollection all;
  all.mate.assign(dk.dart_count(), -1);
  for (int v = 0; v < dk.vertex_count(); ++v) {
    std::vector<int> gs, hs;
    for (int d : dk.at[v]) (dk.dart_color(d) == 0 ? gs : hs).push_back(d);
    all.mate[gs[0]] = gs[1];
    all.mate[gs[1]] = gs[0];
    all.mate[hs[0]] = hs[1];
    all.mate[hs[1]] = hs[0];
  }
  all.pairs = 10;
  for (int c : g_pairs(dk, all)) CHECK(c == 1);
}

TEST_CASE("simple cross matchings have empty gloop") {
  Graph a = *named_graph("fig4-g"), b = *named_graph("fig4-h");
  DartGraph dg = make_darts(a, b);
  int simple = 0;
  for (const auto& m : enumerate_pm_cross(a, b)) {
    CHECK(is_dominant(dg, m, {}));
    if (!is_simple(dg, m)) continue;
    ++simple;
    CHECK(gloop(dg, m).empty());
    CHECK(s_coefficient(dg, m) == 1);
  }
  CHECK(simple > 0);
}

TEST_CASE("rematching never gains more than one cycle per vertex") {
  Graph a = *named_graph("k5-inner"), b = *named_graph("k5-outer");
  DartGraph dg = make_darts(a, b);
  auto quad = v4(dg);
  CHECK(quad.size() == 5);
  for (const auto& m : enumerate_pm_cross(a, b)) {
    int c = count_cycles(dg, m);
    for (uint32_t mask = 0; mask < 32; ++mask) {
      std::vector<int> s;
      for (int i = 0; i < 5; ++i)
        if (mask >> i & 1) s.push_back(quad[i]);
      CHECK(count_cycles(dg, rematch(dg, m, s)) <= c + static_cast<int>(s.size()));
    }
  }
}

TEST_CASE("closed blocks and routing of partitions") {
  Graph tri = Graph::from_edges(Setting::Boolean, {{1, 2}, {2, 3}, {1, 3}});
  HyperView hv = make_hyper(tri);
  CHECK(is_closed_block(hv, 0b111));
  CHECK_FALSE(is_closed_block(hv, 0b011));
  auto r = route_partition(hv, {0, 0, 0});
  CHECK(r.cycles == 1);
  CHECK(r.routed.empty());
  auto r2 = route_partition(hv, {0, 0, 1});
  CHECK(r2.cycles == 0);
  CHECK(r2.routed.size() == 2);
}

TEST_CASE("Mobius function on Lambda^c") {
  Graph four = Graph::from_edges(Setting::Boolean, {{1, 2}, {1, 2}, {1, 2}, {1, 2}});
  HyperView hv = make_hyper(four);
  CHECK(mobius_lambda_c(hv, {0, 0, 0, 0}) == -6);
  CHECK(mobius_lambda_c(hv, {0, 0, 1, 1}) == 1);
  CHECK(mobius_lambda_c(hv, {0, 1, 2, 3}) == 1);
  // μ sums to zero over every nonempty interval [0, p]
  for (const auto& e : mobius_lambda_c(hv)) {
    if (block_count(e.partition) == 4) continue;
    BigInt sum = 0;
    for (const auto& f : mobius_lambda_c(hv))
      if (refines(f.partition, e.partition)) sum += f.mu;
    CHECK(sum == 0);
  }
  Graph path = Graph::from_edges(Setting::Boolean, {{1, 2}, {3, 4}});
  CHECK_THROWS_AS(mobius_lambda_c(make_hyper(path), {0, 0}), GraphError);
}

TEST_CASE("Boolean cross partitions") {
  Graph g = Graph::from_edges(Setting::Boolean, {{1, 2}, {2, 3}}), h = g;
  auto ps = pm_bool_cross(g, h);
  CHECK(ps.size() == 2);
  HyperView hv = make_hyper(g, h);
  int simple = 0;
  for (const auto& p : ps) simple += is_simple_partition(hv, p);
  CHECK(simple == 1);
  // vertex 2 has odd total degree in G ∪ H
  CHECK(pm_bool_cross(Graph::from_edges(Setting::Boolean, {{1, 2}, {1, 3}}),
                      Graph::from_edges(Setting::Boolean, {{2, 3}, {2, 3}}).with_vertices({1, 2, 3}))
            .empty());
}
