#pragma once

#include <string>
#include <vector>

#include "orthograph/graphs.hpp"

namespace orthograph {

struct PairSpec {
  Setting setting = Setting::Gaussian;
  int max_union_edges = 6;
  int max_vertices = -1;      // -1: max_union_edges + 1
  int max_union_degree = -1;  // Boolean: cap on the total degree of G ∪ H
  bool even_union = false;    // every vertex has even degree in G ∪ H
  bool degree_equivalent = false;
  bool max_degree_two = false;  // deg_G, deg_H <= 2 everywhere
  bool loopless = false;
};

// G and H on the vertex set of their (connected) union.
struct GraphPair {
  Graph g, h;
  std::string key;  // colored isomorphism key, symmetric in G and H
};

// One pair per class of (G, H) up to joint relabeling and swapping G with H;
// sorted by key.
std::vector<GraphPair> enumerate_pairs(const PairSpec& spec);

}  // namespace orthograph
