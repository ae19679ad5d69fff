#include <algorithm>
#include <functional>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "orthograph/graphs.hpp"

namespace orthograph {

namespace {

// Simple graph on vertex indices; loops and parallel edges dropped.
struct Simple {
  int nv = 0;
  std::vector<std::vector<bool>> adj;
};

Simple simplify(const Graph& g) {
  Simple s;
  s.nv = static_cast<int>(g.vertex_count());
  s.adj.assign(s.nv, std::vector<bool>(s.nv, false));
  for (const auto& e : g.edges()) {
    if (e.size() != 2) throw GraphError("planarity is defined for multigraphs only");
    int a = g.index_of(e[0]), b = g.index_of(e[1]);
    if (a == b) continue;
    s.adj[a][b] = s.adj[b][a] = true;
  }
  return s;
}

// Can the required branch-vertex pairs be joined by internally disjoint paths
// whose interior avoids every branch vertex?
bool route_pairs(const Simple& s, const std::vector<std::pair<int, int>>& pairs, size_t k,
                 std::vector<bool>& blocked) {
  if (k == pairs.size()) return true;
  auto [a, b] = pairs[k];
  if (s.adj[a][b]) {
    // using the direct edge never hurts: it consumes no interior vertex
    if (route_pairs(s, pairs, k + 1, blocked)) return true;
  }
  std::vector<int> path;
  std::function<bool(int)> dfs = [&](int u) -> bool {
    for (int w = 0; w < s.nv; ++w) {
      if (!s.adj[u][w]) continue;
      if (w == b && u != a) {
        if (route_pairs(s, pairs, k + 1, blocked)) return true;
        continue;
      }
      if (blocked[w]) continue;
      blocked[w] = true;
      path.push_back(w);
      if (dfs(w)) return true;
      path.pop_back();
      blocked[w] = false;
    }
    return false;
  };
  return dfs(a);
}

}  // namespace

bool is_planar(const Graph& g, size_t max_vertices) {
  if (g.vertex_count() > max_vertices)
    throw BudgetError("planarity test limited to " + std::to_string(max_vertices) + " vertices");
  Simple s = simplify(g);
  using BG = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BG bg(s.nv);
  for (int a = 0; a < s.nv; ++a)
    for (int b = a + 1; b < s.nv; ++b)
      if (s.adj[a][b]) boost::add_edge(a, b, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

bool has_kuratowski_subdivision(const Graph& g) {
  Simple s = simplify(g);
  std::vector<int> deg(s.nv, 0);
  for (int a = 0; a < s.nv; ++a)
    for (int b = 0; b < s.nv; ++b) deg[a] += s.adj[a][b];
  std::vector<bool> blocked(s.nv, false);

  // K5: five branch vertices of degree >= 4
  std::vector<int> cand;
  for (int v = 0; v < s.nv; ++v)
    if (deg[v] >= 4) cand.push_back(v);
  int m = static_cast<int>(cand.size());
  for (int mask = 0; mask < (1 << m); ++mask) {
    if (__builtin_popcount(mask) != 5) continue;
    std::vector<int> br;
    for (int i = 0; i < m; ++i)
      if (mask & (1 << i)) br.push_back(cand[i]);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) pairs.push_back({br[i], br[j]});
    std::fill(blocked.begin(), blocked.end(), false);
    for (int v : br) blocked[v] = true;
    if (route_pairs(s, pairs, 0, blocked)) return true;
  }

  // K3,3: two sides of three branch vertices of degree >= 3
  cand.clear();
  for (int v = 0; v < s.nv; ++v)
    if (deg[v] >= 3) cand.push_back(v);
  m = static_cast<int>(cand.size());
  for (int mask = 0; mask < (1 << m); ++mask) {
    if (__builtin_popcount(mask) != 6) continue;
    std::vector<int> br;
    for (int i = 0; i < m; ++i)
      if (mask & (1 << i)) br.push_back(cand[i]);
    // choose side A containing br[0]
    for (int sm = 0; sm < 32; ++sm) {
      if (__builtin_popcount(sm) != 2) continue;
      std::vector<int> A{br[0]}, B;
      for (int i = 1; i < 6; ++i) ((sm >> (i - 1)) & 1 ? A : B).push_back(br[i]);
      std::vector<std::pair<int, int>> pairs;
      for (int a : A)
        for (int b : B) pairs.push_back({a, b});
      std::fill(blocked.begin(), blocked.end(), false);
      for (int v : br) blocked[v] = true;
      if (route_pairs(s, pairs, 0, blocked)) return true;
    }
  }
  return false;
}

bool has_k5_minor(const Graph& g) {
  Simple s0 = simplify(g);
  if (s0.nv > 16) throw BudgetError("K5-minor search limited to 16 vertices");
  using Adj = std::vector<uint32_t>;
  Adj adj0(s0.nv, 0);
  for (int a = 0; a < s0.nv; ++a)
    for (int b = 0; b < s0.nv; ++b)
      if (s0.adj[a][b]) adj0[a] |= 1u << b;
  std::set<Adj> seen;
  std::function<bool(const Adj&)> rec = [&](const Adj& adj) -> bool {
    int nv = static_cast<int>(adj.size());
    if (nv < 5) return false;
    int edges = 0;
    for (auto x : adj) edges += __builtin_popcount(x);
    if (edges / 2 < 10) return false;
    if (!seen.insert(adj).second) return false;
    std::vector<int> cand;
    for (int v = 0; v < nv; ++v)
      if (__builtin_popcount(adj[v]) >= 4) cand.push_back(v);
    int m = static_cast<int>(cand.size());
    if (m >= 5) {
      std::vector<int> pick;
      std::function<bool(int)> choose = [&](int from) -> bool {
        if (pick.size() == 5) return true;
        for (int i = from; i < m; ++i) {
          int v = cand[i];
          bool ok = true;
          for (int u : pick)
            if (!(adj[u] >> v & 1)) ok = false;
          if (!ok) continue;
          pick.push_back(v);
          if (choose(i + 1)) return true;
          pick.pop_back();
        }
        return false;
      };
      if (choose(0)) return true;
    }
    for (int a = 0; a < nv; ++a)
      for (int b = a + 1; b < nv; ++b) {
        if (!(adj[a] >> b & 1)) continue;
        // contract b into a, then drop b
        Adj c;
        for (int v = 0; v < nv; ++v) {
          if (v == b) continue;
          uint32_t row = adj[v];
          if (v == a) row |= adj[b];
          if (row >> b & 1) row |= 1u << a;
          row &= ~(1u << b);
          row &= ~(1u << v);
          // squeeze bit b out
          uint32_t low = row & ((1u << b) - 1), high = row >> (b + 1);
          c.push_back(low | (high << b));
        }
        int a2 = a;  // a < b keeps its index
        c[a2] &= ~(1u << a2);
        if (rec(c)) return true;
      }
    return false;
  };
  return rec(adj0);
}

}  // namespace orthograph
