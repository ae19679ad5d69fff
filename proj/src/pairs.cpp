#include "orthograph/pairs.hpp"

#include <algorithm>
#include <map>

namespace orthograph {

namespace {

bool all_even(const Graph& g) {
  auto d = g.degrees();
  return std::all_of(d.begin(), d.end(), [](int x) { return x % 2 == 0; });
}

bool degree_at_most_two(const Graph& g) {
  auto d = g.degrees();
  return std::all_of(d.begin(), d.end(), [](int x) { return x <= 2; });
}

}  // namespace

std::vector<GraphPair> enumerate_pairs(const PairSpec& spec) {
  if (spec.max_union_edges > 10) throw BudgetError("pair enumeration limited to 10 union edges");
  EnumSpec es;
  es.setting = spec.setting;
  es.max_edges = spec.max_union_edges;
  es.max_vertices = spec.max_vertices < 0 ? spec.max_union_edges + 1 : spec.max_vertices;
  if (spec.setting == Setting::Boolean && spec.max_vertices < 0) es.max_vertices = 6;
  es.max_degree = spec.max_union_degree;
  es.connected = true;
  es.include_empty = false;

  std::map<std::string, GraphPair> found;
  for (const Graph& u : enumerate_graphs(es)) {
    if (spec.loopless && u.has_loops()) continue;
    if (spec.even_union && !all_even(u)) continue;
    // parallel classes; a colouring only needs the count sent to G in each
    std::vector<std::pair<Edge, int>> groups;
    for (const auto& e : u.edges()) {
      if (!groups.empty() && groups.back().first == e) ++groups.back().second;
      else groups.push_back({e, 1});
    }
    std::vector<int> take(groups.size(), 0);
    while (true) {
      std::vector<Edge> ge, he;
      for (size_t i = 0; i < groups.size(); ++i) {
        for (int k = 0; k < take[i]; ++k) ge.push_back(groups[i].first);
        for (int k = take[i]; k < groups[i].second; ++k) he.push_back(groups[i].first);
      }
      Graph g(spec.setting, u.vertices(), ge), h(spec.setting, u.vertices(), he);
      bool ok = (!spec.degree_equivalent || degree_equivalent(g, h)) &&
                (!spec.max_degree_two || (degree_at_most_two(g) && degree_at_most_two(h)));
      if (ok) {
        std::string key = colored_iso_key(g, h, true);
        if (!found.count(key)) found.emplace(key, GraphPair{g, h, key});
      }
      size_t pos = 0;
      while (pos < take.size() && ++take[pos] > groups[pos].second) take[pos++] = 0;
      if (pos == take.size()) break;
    }
  }
  std::vector<GraphPair> out;
  for (auto& [k, p] : found) out.push_back(std::move(p));
  return out;
}

}  // namespace orthograph
