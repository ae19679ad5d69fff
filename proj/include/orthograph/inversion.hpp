#pragma once

#include <map>
#include <string>
#include <vector>

#include "orthograph/polyspace.hpp"

namespace orthograph {

// Graphs sharing one degree map, with Q[i][j] = <p_i, p_j>.
struct GramBlock {
  std::vector<Graph> graphs;
  std::vector<std::vector<RatFuncN>> q;
};

struct FourierTarget {
  std::map<std::string, Rational> targets;  // graph key -> f̂(G)
  std::vector<Graph> graphs;                // the graphs the keys refer to
  long n = 0;
};

class SingularBlockError : public std::runtime_error {
 public:
  SingularBlockError(const std::string& what, std::vector<Graph> block, long n)
      : std::runtime_error(what), block(std::move(block)), n(n) {}
  std::vector<Graph> block;
  long n;
};

// Blocks in order of first appearance; graphs must share setting and vertex set.
std::vector<GramBlock> build_blocks(const std::vector<Graph>& graphs);

// Q(n) evaluated; throws PoleError if n hits a pole of an entry.
std::vector<std::vector<Rational>> eval_block(const GramBlock& b, long n);

// Solves Q(n) c = f̂ exactly on every block that carries a nonzero target.
struct Reconstruction {
  InvariantPoly f;                        // Σ c_G p_G with concrete coefficients
  std::map<std::string, Rational> coeff;  // graph key -> c_G
  bool residual_zero = false;             // Q(n) c == f̂ on every block
};
Reconstruction invert_and_reconstruct(const std::vector<GramBlock>& blocks, const FourierTarget& target);

struct DiagonalityRow {
  long n = 0;
  double ratio = 0;  // max |off-diagonal| / min |diagonal|
};
std::vector<DiagonalityRow> diagonality_report(const GramBlock& block, const std::vector<long>& ns);

// JSON FourierTarget: {"setting":..., "n":..., "targets":[{"graph":[[1,2],...], "value":"p/q"}], "vertices":[...]}
FourierTarget target_from_json(const nlohmann::json& j);

}  // namespace orthograph
