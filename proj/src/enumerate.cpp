#include <algorithm>
#include <map>
#include <set>

#include "orthograph/graphs.hpp"

namespace orthograph {

namespace {

// candidate edges over existing vertices 1..nv plus up to `fresh` new ones
std::vector<Edge> candidate_edges(const EnumSpec& spec, int nv) {
  std::vector<Edge> out;
  int room = std::max(0, spec.max_vertices - nv);
  if (spec.setting != Setting::Boolean) {
    int top = nv + std::min(room, 2);
    for (int a = 1; a <= std::min(top, nv + 1); ++a)
      for (int b = a; b <= top; ++b) {
        if (a == b && spec.setting != Setting::Gaussian) continue;
        // fresh vertices are taken in order
        if (b > nv + 1 && !(a == nv + 1 && b == nv + 2)) continue;
        if (a == b && a > nv && spec.connected && nv > 0) continue;
        if (spec.connected && nv > 0 && a > nv) continue;
        out.push_back({a, b});
      }
    return out;
  }
  int hmax = spec.max_hyperedge < 0 ? spec.max_vertices : spec.max_hyperedge;
  for (int fresh = 0; fresh <= room; ++fresh) {
    int total = nv + fresh;
    if (total > 24) break;
    // subsets of the old vertices, completed by all `fresh` new vertices
    for (unsigned mask = 0; mask < (1u << nv); ++mask) {
      int size = __builtin_popcount(mask) + fresh;
      if (size < 2 || size % 2 || size > hmax) continue;
      if (spec.connected && nv > 0 && mask == 0) continue;
      Edge e;
      for (int v = 0; v < nv; ++v)
        if (mask & (1u << v)) e.push_back(v + 1);
      for (int k = 1; k <= fresh; ++k) e.push_back(nv + k);
      out.push_back(e);
    }
  }
  return out;
}

}  // namespace

std::vector<Graph> enumerate_graphs(const EnumSpec& spec) {
  if (spec.max_vertices < 0 || spec.max_edges < 0) throw GraphError("negative enumeration budget");
  if (spec.max_vertices > 24) throw BudgetError("enumeration vertex budget above 24");
  std::vector<Graph> out;
  std::vector<Graph> level{Graph(spec.setting, {}, {})};
  if (spec.include_empty) out.push_back(level[0]);
  for (int k = 1; k <= spec.max_edges; ++k) {
    std::map<std::string, Graph> next;
    for (const Graph& g : level) {
      int nv = static_cast<int>(g.vertex_count());
      for (const Edge& e : candidate_edges(spec, nv)) {
        int vmax = nv;
        for (Vertex v : e) vmax = std::max(vmax, v);
        if (vmax > spec.max_vertices) continue;
        if (spec.max_degree >= 0 && g.total_degree() + static_cast<int>(e.size()) > spec.max_degree) continue;
        std::vector<Vertex> vs;
        for (int v = 1; v <= vmax; ++v) vs.push_back(v);
        auto es = g.edges();
        es.push_back(e);
        Graph h(spec.setting, vs, es);
        std::string key = iso_key(h);
        if (next.count(key)) continue;
        next.emplace(key, canonical_form(h));
      }
    }
    level.clear();
    std::vector<Graph> sorted;
    for (auto& [key, g] : next) sorted.push_back(g);
    std::sort(sorted.begin(), sorted.end(), [](const Graph& a, const Graph& b) {
      if (a.vertex_count() != b.vertex_count()) return a.vertex_count() < b.vertex_count();
      return a.key() < b.key();
    });
    for (auto& g : sorted) {
      level.push_back(g);
      if (!spec.connected || is_connected(g)) out.push_back(g);
    }
  }
  return out;
}

}  // namespace orthograph
