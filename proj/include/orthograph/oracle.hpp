#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "orthograph/graphs.hpp"
#include "orthograph/polyspace.hpp"
#include "orthograph/symnum.hpp"

// Ground truth at a concrete dimension n. Nothing in here goes through
// matchings or routing: expectations come from per-coordinate moments and the
// polynomials from Gram-Schmidt or from the coordinate-level definitions.
namespace orthograph::oracle {

// Oracle caps: n <= kMaxN, and n^|E| <= kMaxLabelings for the literal sum.
inline constexpr int kMaxN = 8;
inline constexpr long kMaxLabelings = 262144;  // 8^6

// Polynomial in the m_H with rational coefficients (n already substituted).
struct ConcretePoly {
  Setting setting = Setting::Gaussian;
  std::vector<Vertex> vertices;
  std::map<std::string, Rational> terms;  // encode_edges key -> coefficient

  void add(const std::string& key, const Rational& c);
  ConcretePoly& operator-=(const ConcretePoly& o);
  friend bool operator==(const ConcretePoly& a, const ConcretePoly& b) {
    return a.setting == b.setting && a.vertices == b.vertices && a.terms == b.terms;
  }
  friend bool operator!=(const ConcretePoly& a, const ConcretePoly& b) { return !(a == b); }
};

ConcretePoly eval_at(const InvariantPoly& p, long n);
std::string to_text(const ConcretePoly& p);
// Spherical: replace every x_vv by 1.
ConcretePoly erase_loops(const ConcretePoly& p);

// E[m_G] at n as a sum over labelings σ : E -> [n] of products of per-vertex
// coordinate moments. Labelings are grouped by which edges share a coordinate
// (each group stands for n(n-1)...(n-k+1) labelings).
Rational exact_expectation_at_n(const Graph& g, int n);
Rational exact_expectation_at_n(Setting s, const std::vector<Edge>& edges, int n);
Rational exact_expectation_at_n(const ConcretePoly& p, int n);
// The same sum taken literally over all n^|E| labelings.
Rational literal_expectation_at_n(const Graph& g, int n);
// Boolean only: average of m_G over every point of the cube, n * |V| <= 20.
Rational hypercube_expectation(const Graph& g, int n);
// E[(p - q)^2] == 0.
bool equal_as_functions(const ConcretePoly& p, const ConcretePoly& q, int n);

struct GsResult {
  ConcretePoly poly;
  int basis_size = 0;
  int rank = 0;
  // rank < basis_size, or m_G itself lies in the span of the lower block
  bool singular = false;
  Rational residual;  // E[p^2]
};
GsResult gram_schmidt_at_n(const Graph& g, int n);
std::map<std::string, GsResult> gram_schmidt_at_n(const std::vector<Graph>& graphs, int n);

// Coordinate-level definitions: Hermite truncation (Gaussian), Maxwell-converted
// truncation (spherical), labelings injective at each vertex (Boolean). The
// coordinate polynomial is re-collected into m-terms. For the spherical setting
// the loop terms x_vv are kept; erase_loops gives the reduced form.
ConcretePoly truncation_at_n(const Graph& g, int n);

class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Polynomial in the coordinates d_{v,i}; exponent vector indexed v * n + i.
class CoordPoly {
 public:
  using Mono = std::vector<uint8_t>;
  CoordPoly(Setting s, int nv, int n) : s_(s), nv_(nv), n_(n) {}

  Setting setting() const { return s_; }
  int vertex_count() const { return nv_; }
  int dim() const { return n_; }
  const std::map<Mono, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  void add(Mono m, const Rational& c);  // Boolean: exponents reduced mod 2
  CoordPoly& operator+=(const CoordPoly& o);
  CoordPoly& operator-=(const CoordPoly& o);
  CoordPoly& operator*=(const Rational& c);

  // Expansion of m_H, vertices given as indices into the vertex list.
  static CoordPoly of_monomial(Setting s, int nv, int n, const std::vector<std::vector<int>>& edges);

 private:
  Setting s_;
  int nv_, n_;
  std::map<Mono, Rational> t_;
};

// Coefficients of the probabilists' Hermite polynomial h_k, lowest degree first.
std::vector<BigInt> hermite(int k);
// Inverse of expansion: writes c as a combination of m-terms, peeling the
// largest monomial each time. Throws OracleError if a monomial cannot be read
// as a graph (n too small).
ConcretePoly recollect(const CoordPoly& c, const std::vector<Vertex>& vertices);

}  // namespace orthograph::oracle
