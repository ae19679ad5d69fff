#pragma once

#include <map>
#include <string>
#include <vector>

#include "orthograph/graphs.hpp"
#include "orthograph/matchings.hpp"
#include "orthograph/symnum.hpp"

namespace orthograph {

// Linear combination of monomials m_G on a fixed vertex set. Terms are keyed by
// the labeled edge multiset (encode_edges), never quotiented by isomorphism.
class InvariantPoly {
 public:
  InvariantPoly() = default;
  InvariantPoly(Setting s, std::vector<Vertex> vertices) : setting_(s), vertices_(std::move(vertices)) {}

  static InvariantPoly monomial(const Graph& g);
  static InvariantPoly constant(Setting s, std::vector<Vertex> vertices, const RatFuncN& c);

  Setting setting() const { return setting_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::map<std::string, RatFuncN>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  // Adds c·m_E; edges need not be sorted. Zero results are dropped.
  void add_term(std::vector<Edge> edges, const RatFuncN& c);
  void add_key(const std::string& key, const RatFuncN& c);
  RatFuncN coeff(const Graph& g) const;
  Graph term_graph(const std::string& key) const;
  // Largest total degree among terms (sum of edge sizes); -1 for zero.
  int degree() const;

  InvariantPoly& operator+=(const InvariantPoly& o);
  InvariantPoly& operator-=(const InvariantPoly& o);
  InvariantPoly& operator*=(const RatFuncN& c);
  friend InvariantPoly operator+(InvariantPoly a, const InvariantPoly& b) { return a += b; }
  friend InvariantPoly operator-(InvariantPoly a, const InvariantPoly& b) { return a -= b; }
  friend bool operator==(const InvariantPoly& a, const InvariantPoly& b) {
    return a.setting_ == b.setting_ && a.vertices_ == b.vertices_ && a.terms_ == b.terms_;
  }

 private:
  void require_compatible(const InvariantPoly& o) const;
  Setting setting_ = Setting::Gaussian;
  std::vector<Vertex> vertices_;
  std::map<std::string, RatFuncN> terms_;
};

InvariantPoly multiply(const InvariantPoly& p, const InvariantPoly& q);

// E[m_G]; the spherical formula also accepts self-loops, passed as edges.
RatFuncN expectation_of_edges(Setting s, const std::vector<Edge>& edges);
RatFuncN expectation(const Graph& g);
RatFuncN expectation(const InvariantPoly& p);

// p_G. For the spherical setting keep_loops retains routed self-loop terms
// instead of erasing them (an equivalent form used by cross-checks).
InvariantPoly orthopoly(const Graph& g, bool keep_loops = false);

RatFuncN inner_product(const Graph& g, const Graph& h);
RatFuncN inner_product_via_expectation(const Graph& g, const Graph& h);
RatFuncN cM(const DartGraph& dg, const MatchingCollection& m);
RatFuncN inner_product_upper_bound(const Graph& g, const Graph& h);
RatFuncN degree4_inner_product(const Graph& g, const Graph& h);
bool cancellation_applies(const Graph& g, const Graph& h);
// Σ over simple M ∈ PM(G,H) of n^cycles(M).
IntPolyN simple_matching_sum(const Graph& g, const Graph& h);
// Σ over M ∈ PM(G,H) of n^cycles(M).
IntPolyN cross_matching_sum(const Graph& g, const Graph& h);

// Expectation of ⟨v,v⟩^p ∏_{i≤k} ⟨v,d_i⟩ with the d_i as vertices 1..k.
struct IsserlisResult {
  InvariantPoly poly;
  bool odd = false;  // k odd: the expectation vanishes
};
IsserlisResult isserlis(Setting s, int k, int p);
// λ on even partitions of [k]; keyed by restricted growth string.
std::map<EdgePartition, BigInt> boolean_lambda(int k);

struct GsCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};
// Monicity of p_G, and E[p_G m_H] = 0 for every H on V(G) of lower degree.
std::vector<GsCheck> gram_schmidt_symbolic_check(const std::vector<Graph>& graphs, int max_degree);

// Basis of lower-degree monomials on the vertex set of g used by the
// orthogonality checks: all graphs on V(g) of smaller degree (loops only for
// Gaussian, even hyperedges for Boolean).
std::vector<Graph> lower_degree_basis(const Graph& g);

// Rendering.
std::string monomial_text(const Graph& g);
std::string to_text(const InvariantPoly& p);
std::string to_latex(const InvariantPoly& p);
nlohmann::json to_json(const InvariantPoly& p);
nlohmann::json to_json(const RatFuncN& f);
RatFuncN ratfunc_from_json(const nlohmann::json& j);
InvariantPoly poly_from_json(const nlohmann::json& j);
// Reads the text form ("x12^2 - (n+2)*x11 + 1/n"). Variables are x followed by
// the edge label; '*' is optional. Vertices default to those mentioned.
InvariantPoly parse_poly(Setting s, const std::string& text, std::vector<Vertex> vertices = {});

}  // namespace orthograph
