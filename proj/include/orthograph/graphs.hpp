#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace orthograph {

enum class Setting { Gaussian, Spherical, Boolean };

std::string to_string(Setting s);
Setting parse_setting(const std::string& s);

using Vertex = int;
using Edge = std::vector<Vertex>;  // sorted; {u,u} is a self-loop

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr Vertex kMaxVertexLabel = 250;

// A multigraph (Gaussian, spherical) or even hypergraph (Boolean) on a declared
// vertex set. Immutable after construction; edges are kept sorted.
class Graph {
 public:
  Graph() = default;
  Graph(Setting s, std::vector<Vertex> vertices, std::vector<Edge> edges);
  static Graph from_edges(Setting s, std::vector<Edge> edges);

  Setting setting() const { return setting_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  size_t edge_count() const { return edges_.size(); }
  size_t vertex_count() const { return vertices_.size(); }

  int index_of(Vertex v) const;
  // degrees aligned with vertices(); a loop counts twice
  std::vector<int> degrees() const;
  std::map<Vertex, int> degree_map() const;
  int total_degree() const;  // degree of m_G as a polynomial in the d vectors
  bool has_loops() const;

  // Labeled key: the sorted edge multiset (vertex set not included).
  std::string key() const;
  Graph with_vertices(std::vector<Vertex> vs) const;
  Graph with_edges(std::vector<Edge> es) const;
  Graph relabeled(const std::map<Vertex, Vertex>& map) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.setting_ == b.setting_ && a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }
  friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

 private:
  Setting setting_ = Setting::Gaussian;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
};

void validate_edge(Setting s, const Edge& e);

std::string encode_edges(std::vector<Edge> edges);  // sorts
std::vector<Edge> decode_edges(const std::string& key);

std::map<Vertex, int> degree_map(const Graph& g);
bool degree_equivalent(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);
// Same graphs re-declared on the union of both vertex sets.
std::pair<Graph, Graph> on_common_vertices(const Graph& g, const Graph& h);
bool is_connected(const Graph& g);  // ignores isolated vertices

// Isomorphism keys (enumeration dedup only).
std::string iso_key(const Graph& g);
// Relabels g onto 1..k following the canonical labeling.
Graph canonical_form(const Graph& g);
// Key of the union with G-edges and H-edges colored; if swap_symmetric, (G,H)
// and (H,G) get the same key.
std::string colored_iso_key(const Graph& g, const Graph& h, bool swap_symmetric);
// Canonical relabeling of a colored pair onto 1..k.
std::pair<Graph, Graph> canonical_pair(const Graph& g, const Graph& h);

struct CanonInput {
  int nv = 0;
  std::vector<std::pair<std::vector<int>, int>> edges;  // vertex indices, color
};
struct CanonResult {
  std::vector<int> relabel;  // old index -> new index
  std::string key;
};
CanonResult canonical_labeling(const CanonInput& in);

// Planarity of the underlying simple graph (loops and parallel edges dropped).
bool is_planar(const Graph& g, size_t max_vertices = 12);
// Brute-force Kuratowski subdivision search; used as an independent check.
bool has_kuratowski_subdivision(const Graph& g);
bool has_k5_minor(const Graph& g);

struct EnumSpec {
  Setting setting = Setting::Gaussian;
  int max_vertices = 6;
  int max_edges = 3;
  int max_degree = -1;     // cap on total degree (sum of edge sizes); -1 = none
  int max_hyperedge = -1;  // Boolean only; -1 = max_vertices
  bool connected = true;
  bool include_empty = true;
};
// One representative per isomorphism class, labeled 1..k, in a deterministic order
// (edge count, then key).
std::vector<Graph> enumerate_graphs(const EnumSpec& spec);

// JSON graph format.
nlohmann::json to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j, std::optional<Setting> setting = std::nullopt);
std::vector<Edge> edges_from_json(const nlohmann::json& j);

// Built-in named graphs.
std::optional<Graph> named_graph(const std::string& name, Setting s = Setting::Spherical);
std::vector<std::string> named_graph_names();

std::string edge_label(const Edge& e);  // "12", "1234", "{10,11}"

}  // namespace orthograph
