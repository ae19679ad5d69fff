#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "orthograph/graphs.hpp"

namespace orthograph {

std::string to_string(Setting s) {
  switch (s) {
    case Setting::Gaussian: return "gaussian";
    case Setting::Spherical: return "spherical";
    case Setting::Boolean: return "boolean";
  }
  return "?";
}

Setting parse_setting(const std::string& s) {
  if (s == "gaussian") return Setting::Gaussian;
  if (s == "spherical") return Setting::Spherical;
  if (s == "boolean") return Setting::Boolean;
  throw GraphError("unknown setting '" + s + "' (expected gaussian|spherical|boolean)");
}

void validate_edge(Setting s, const Edge& e) {
  for (Vertex v : e)
    if (v < 0 || v > kMaxVertexLabel)
      throw GraphError("vertex label " + std::to_string(v) + " outside 0.." +
                       std::to_string(kMaxVertexLabel));
  if (s == Setting::Boolean) {
    if (e.size() < 2 || e.size() % 2 != 0)
      throw GraphError("Boolean hyperedge " + edge_label(e) + " must have even size >= 2");
    for (size_t i = 1; i < e.size(); ++i)
      if (e[i] == e[i - 1])
        throw GraphError("Boolean hyperedge " + edge_label(e) + " repeats a vertex");
    return;
  }
  if (e.size() != 2) throw GraphError("edge " + edge_label(e) + " must have two endpoints");
  if (s == Setting::Spherical && e[0] == e[1])
    throw GraphError("self-loop " + edge_label(e) + " not allowed in the spherical setting");
}

Graph::Graph(Setting s, std::vector<Vertex> vertices, std::vector<Edge> edges)
    : setting_(s), vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw GraphError("duplicate vertex label");
  for (auto& e : edges_) {
    std::sort(e.begin(), e.end());
    validate_edge(s, e);
    for (Vertex v : e)
      if (!std::binary_search(vertices_.begin(), vertices_.end(), v))
        throw GraphError("edge " + edge_label(e) + " uses undeclared vertex " + std::to_string(v));
  }
  for (Vertex v : vertices_)
    if (v < 0 || v > kMaxVertexLabel) throw GraphError("vertex label out of range");
  std::sort(edges_.begin(), edges_.end());
}

Graph Graph::from_edges(Setting s, std::vector<Edge> edges) {
  std::set<Vertex> vs;
  for (const auto& e : edges) vs.insert(e.begin(), e.end());
  return Graph(s, std::vector<Vertex>(vs.begin(), vs.end()), std::move(edges));
}

int Graph::index_of(Vertex v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return -1;
  return static_cast<int>(it - vertices_.begin());
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(vertices_.size(), 0);
  for (const auto& e : edges_)
    for (Vertex v : e) ++d[index_of(v)];
  return d;
}

std::map<Vertex, int> Graph::degree_map() const {
  std::map<Vertex, int> m;
  auto d = degrees();
  for (size_t i = 0; i < vertices_.size(); ++i) m[vertices_[i]] = d[i];
  return m;
}

int Graph::total_degree() const {
  int t = 0;
  for (const auto& e : edges_) t += static_cast<int>(e.size());
  return t;
}

bool Graph::has_loops() const {
  for (const auto& e : edges_)
    if (e.size() == 2 && e[0] == e[1]) return true;
  return false;
}

std::string Graph::key() const { return encode_edges(edges_); }

Graph Graph::with_vertices(std::vector<Vertex> vs) const { return Graph(setting_, std::move(vs), edges_); }

Graph Graph::with_edges(std::vector<Edge> es) const { return Graph(setting_, vertices_, std::move(es)); }

Graph Graph::relabeled(const std::map<Vertex, Vertex>& map) const {
  auto f = [&](Vertex v) {
    auto it = map.find(v);
    return it == map.end() ? v : it->second;
  };
  std::vector<Vertex> vs;
  for (Vertex v : vertices_) vs.push_back(f(v));
  std::vector<Edge> es;
  for (const auto& e : edges_) {
    Edge x;
    for (Vertex v : e) x.push_back(f(v));
    es.push_back(x);
  }
  return Graph(setting_, vs, es);
}

std::string encode_edges(std::vector<Edge> edges) {
  for (auto& e : edges) std::sort(e.begin(), e.end());
  std::sort(edges.begin(), edges.end());
  std::string s;
  for (const auto& e : edges) {
    for (Vertex v : e) s.push_back(static_cast<char>(v));
    s.push_back(static_cast<char>(0xFF));
  }
  return s;
}

std::vector<Edge> decode_edges(const std::string& key) {
  std::vector<Edge> out;
  Edge cur;
  for (char c : key) {
    auto u = static_cast<unsigned char>(c);
    if (u == 0xFF) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(u);
    }
  }
  return out;
}

std::map<Vertex, int> degree_map(const Graph& g) { return g.degree_map(); }

static void require_same_vertices(const Graph& g, const Graph& h) {
  if (g.vertices() != h.vertices()) throw GraphError("graphs are declared on different vertex sets");
  if (g.setting() != h.setting()) throw GraphError("graphs belong to different settings");
}

bool degree_equivalent(const Graph& g, const Graph& h) {
  require_same_vertices(g, h);
  return g.degrees() == h.degrees();
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  require_same_vertices(g, h);
  std::vector<Edge> es = g.edges();
  es.insert(es.end(), h.edges().begin(), h.edges().end());
  return Graph(g.setting(), g.vertices(), es);
}

std::pair<Graph, Graph> on_common_vertices(const Graph& g, const Graph& h) {
  if (g.setting() != h.setting()) throw GraphError("graphs belong to different settings");
  std::set<Vertex> vs(g.vertices().begin(), g.vertices().end());
  vs.insert(h.vertices().begin(), h.vertices().end());
  std::vector<Vertex> v(vs.begin(), vs.end());
  return {g.with_vertices(v), h.with_vertices(v)};
}

bool is_connected(const Graph& g) {
  std::vector<Vertex> used;
  for (const auto& e : g.edges()) used.insert(used.end(), e.begin(), e.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  if (used.size() <= 1) return true;
  std::map<Vertex, Vertex> parent;
  for (Vertex v : used) parent[v] = v;
  std::function<Vertex(Vertex)> find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : g.edges())
    for (size_t i = 1; i < e.size(); ++i) parent[find(e[i])] = find(e[0]);
  Vertex r = find(used[0]);
  for (Vertex v : used)
    if (find(v) != r) return false;
  return true;
}

std::string edge_label(const Edge& e) {
  bool small = std::all_of(e.begin(), e.end(), [](Vertex v) { return v >= 0 && v <= 9; });
  std::string s;
  if (small) {
    for (Vertex v : e) s += std::to_string(v);
    return s;
  }
  s = "{";
  for (size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + "}";
}

// ---------------------------------------------------------------- JSON

nlohmann::json to_json(const Graph& g) {
  nlohmann::json j;
  j["setting"] = to_string(g.setting());
  j["vertices"] = g.vertices();
  j["edges"] = nlohmann::json::array();
  for (const auto& e : g.edges()) j["edges"].push_back(e);
  return j;
}

std::vector<Edge> edges_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw GraphError("edge list must be a JSON array");
  std::vector<Edge> es;
  for (const auto& e : j) {
    if (!e.is_array()) throw GraphError("each edge must be an array of vertex labels");
    Edge x;
    for (const auto& v : e) {
      if (!v.is_number_integer()) throw GraphError("vertex labels must be integers");
      x.push_back(v.get<int>());
    }
    es.push_back(x);
  }
  return es;
}

Graph graph_from_json(const nlohmann::json& j, std::optional<Setting> setting) {
  if (j.is_array()) {
    if (!setting) throw GraphError("a bare edge list needs an explicit setting");
    return Graph::from_edges(*setting, edges_from_json(j));
  }
  if (!j.is_object()) throw GraphError("graph JSON must be an object or an edge list");
  Setting s = setting.value_or(Setting::Gaussian);
  if (j.contains("setting")) {
    Setting js = parse_setting(j.at("setting").get<std::string>());
    if (setting && *setting != js) throw GraphError("graph setting does not match --setting");
    s = js;
  } else if (!setting) {
    throw GraphError("graph JSON lacks a setting");
  }
  auto es = edges_from_json(j.at("edges"));
  if (j.contains("vertices")) return Graph(s, j.at("vertices").get<std::vector<Vertex>>(), es);
  return Graph::from_edges(s, es);
}

}  // namespace orthograph
