#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "orthograph/graphs.hpp"
#include "orthograph/symnum.hpp"

namespace orthograph {

// Half-edge view of a multigraph (or of G ∪ H). Dart 2e and 2e+1 are the two
// ends of edge e, so the other end of dart d is d ^ 1.
struct DartGraph {
  std::vector<Vertex> labels;           // vertex index -> label
  std::vector<int> vertex;              // dart -> vertex index
  std::vector<std::vector<int>> at;     // vertex index -> darts, ascending
  std::vector<int> color;               // edge -> 0 for G, 1 for H

  int edge_count() const { return static_cast<int>(color.size()); }
  int dart_count() const { return static_cast<int>(vertex.size()); }
  int vertex_count() const { return static_cast<int>(at.size()); }
  int dart_color(int d) const { return color[d >> 1]; }
};

DartGraph make_darts(const Graph& g);
// G-edges first, then H-edges; the two must share a vertex set.
DartGraph make_darts(const Graph& g, const Graph& h);

// mate[d] is the dart matched with d at its vertex, or -1.
struct MatchingCollection {
  std::vector<int> mate;
  int pairs = 0;  // |M|

  std::vector<std::pair<int, int>> pairs_at(const DartGraph& dg, int vertex_index) const;
  // Per-vertex pairs of darts, "v:(a b)(c d) ...".
  std::string dump(const DartGraph& dg) const;
};

enum class MatchKind { Perfect, Partial, Cross };

// Streams every matching collection of the requested kind in a fixed order:
// the last vertex varies fastest, per-vertex matchings in lexicographic order.
// Perfect is empty when some degree is odd; Cross pairs only a G-dart with an
// H-dart and is empty when the per-vertex colour counts differ.
void for_each_matching(const DartGraph& dg, MatchKind kind,
                       const std::function<void(const MatchingCollection&)>& fn);
std::vector<MatchingCollection> enumerate_pm(const Graph& g);
std::vector<MatchingCollection> enumerate_partial(const Graph& g);
std::vector<MatchingCollection> enumerate_pm_cross(const Graph& g, const Graph& h);

// Number of collections of the given kind without enumerating.
BigInt count_matchings(const DartGraph& dg, MatchKind kind);

struct Visit {
  int vertex;  // vertex index
  int in;      // dart entering the vertex
  int out;     // dart leaving it (mate of in)
};

struct RoutingResult {
  std::vector<std::pair<int, int>> routed;  // vertex-index pairs, may be loops
  int cycles = 0;
  std::vector<std::vector<Visit>> traces;   // filled only on request
};

RoutingResult route(const DartGraph& dg, const MatchingCollection& m, bool want_traces = false);
int count_cycles(const DartGraph& dg, const MatchingCollection& m);
// Routed edges as labeled edges (loops kept).
std::vector<Edge> routed_edges(const DartGraph& dg, const RoutingResult& r);

// Per-vertex number of pairs with both darts from G.
std::vector<int> g_pairs(const DartGraph& dg, const MatchingCollection& m);

// ---------------------------------------------------------------- degree-4 analysis
// These require max degree 2 in G and in H; dg must come from make_darts(g, h).

class DegreeError : public GraphError {
 public:
  using GraphError::GraphError;
};

void require_max_degree_two(const Graph& g, const Graph& h);
// Vertex indices with deg_G = deg_H = 2.
std::vector<int> v4(const DartGraph& dg);
std::vector<int> gloop(const DartGraph& dg, const MatchingCollection& m);
// Same construction with the roles of G and H exchanged.
std::vector<int> hloop(const DartGraph& dg, const MatchingCollection& m);
MatchingCollection rematch(const DartGraph& dg, const MatchingCollection& m, const std::vector<int>& s);
bool is_dominant(const DartGraph& dg, const MatchingCollection& m, const std::vector<int>& s);
bool is_noncrossing(const DartGraph& dg, const MatchingCollection& m, const std::vector<int>& s);
// All non-crossing subsets of the candidates, as sorted index lists.
std::vector<std::vector<int>> noncrossing_subsets(const DartGraph& dg, const MatchingCollection& m,
                                                  const std::vector<int>& candidates);
long s_coefficient(const DartGraph& dg, const MatchingCollection& m);
// Every cycle visits each vertex at most once.
bool is_simple(const DartGraph& dg, const MatchingCollection& m);

// ---------------------------------------------------------------- edge partitions

// Hyperedges as vertex-index lists, with an optional G/H colour.
struct HyperView {
  std::vector<Vertex> labels;
  std::vector<std::vector<int>> edges;
  std::vector<int> color;
  int vertex_count() const { return static_cast<int>(labels.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
};

HyperView make_hyper(const Graph& g);
HyperView make_hyper(const Graph& g, const Graph& h);

// Restricted growth string: block[e] in 0..k-1, first occurrences in order.
using EdgePartition = std::vector<int>;

int block_count(const EdgePartition& p);
std::vector<uint32_t> block_masks(const EdgePartition& p);
void for_each_partition(int m, const std::function<void(const EdgePartition&)>& fn);
std::vector<EdgePartition> enumerate_partitions(const Graph& g);
bool refines(const EdgePartition& fine, const EdgePartition& coarse);

struct HyperRouting {
  std::vector<std::vector<int>> routed;  // vertex-index sets of the open blocks
  int cycles = 0;                        // number of closed blocks
};

bool is_closed_block(const HyperView& hv, uint32_t block);
HyperRouting route_partition(const HyperView& hv, const EdgePartition& p);
std::vector<Edge> routed_edges(const HyperView& hv, const HyperRouting& r);

// Membership in Λ^c: the discrete partition, or some block has two edges
// sharing a vertex.
bool in_lambda_c(const HyperView& hv, const EdgePartition& p);
struct MobiusEntry {
  EdgePartition partition;
  BigInt mu;  // μ(∅, partition) on Λ^c
};
std::vector<MobiusEntry> mobius_lambda_c(const HyperView& hv);
// μ(∅, p); throws GraphError when p is not in Λ^c.
BigInt mobius_lambda_c(const HyperView& hv, const EdgePartition& p);

// Partitions of E(G) ∪ E(H) (G-edges first) where, in every block, each vertex
// lies in as many G-edges as H-edges.
std::vector<EdgePartition> pm_bool_cross(const Graph& g, const Graph& h);
bool is_simple_partition(const HyperView& hv, const EdgePartition& p);

}  // namespace orthograph
