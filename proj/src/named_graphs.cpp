#include <map>

#include "orthograph/graphs.hpp"

namespace orthograph {

namespace {

struct Named {
  std::vector<Edge> edges;
  std::vector<Vertex> vertices;  // shared vertex set of the pair
};

const std::map<std::string, Named>& table() {
  static const std::map<std::string, Named> t = [] {
    std::map<std::string, Named> m;
    std::vector<Vertex> v5{1, 2, 3, 4, 5}, v4{1, 2, 3, 4};
    // K5 split into two Hamiltonian 5-cycles
    m["k5-inner"] = {{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}}, v5};
    m["k5-outer"] = {{{1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}}, v5};
    // two doubled 4-cycles
    m["fig4-g"] = {{{1, 2}, {1, 2}, {3, 4}, {3, 4}}, v4};
    m["fig4-h"] = {{{2, 3}, {2, 3}, {1, 4}, {1, 4}}, v4};
    // cut-vertex pair with a vanishing inner product
    m["cut-g"] = {{{1, 2}, {1, 3}, {4, 5}}, v5};
    m["cut-h"] = {{{1, 4}, {1, 5}, {2, 3}}, v5};
    // K5-minor pairs (red = G, blue = H). No edge lists are printed for these;
    // they were recovered by searching balanced 2-colourings of nonplanar unions
    // with degrees in {2, 4} and are pinned by their exact inner products (see
    // tests/test_fixtures.cpp). 3a: 8 vertices, simple union. 3b: 7 vertices,
    // 4-regular union with one doubled red edge.
    std::vector<Vertex> v8{1, 2, 3, 4, 5, 6, 7, 8}, v7{1, 2, 3, 4, 5, 6, 7};
    m["fig3a-red"] = {{{1, 2}, {1, 4}, {2, 3}, {3, 6}, {4, 6}, {5, 7}, {5, 8}}, v8};
    m["fig3a-blue"] = {{{1, 3}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {6, 7}, {6, 8}}, v8};
    m["fig3b-red"] = {{{1, 2}, {1, 2}, {3, 6}, {3, 7}, {4, 5}, {4, 6}, {5, 7}}, v7};
    m["fig3b-blue"] = {{{1, 3}, {1, 4}, {2, 3}, {2, 5}, {4, 7}, {5, 6}, {6, 7}}, v7};
    return m;
  }();
  return t;
}

}  // namespace

std::optional<Graph> named_graph(const std::string& name, Setting s) {
  auto it = table().find(name);
  if (it == table().end()) return std::nullopt;
  return Graph(s, it->second.vertices, it->second.edges);
}

std::vector<std::string> named_graph_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : table()) out.push_back(k);
  return out;
}

}  // namespace orthograph
