#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "orthograph/polyspace.hpp"

namespace orthograph::oracle {

struct SampleConfig {
  int n = 10;
  long sample_count = 100000;
  uint64_t rng_seed = 0x5eed;
  double tolerance_sigmas = 4.0;
  int jobs = 1;
};

struct Estimate {
  double mean = 0;
  double stderr_ = 0;
  long samples = 0;
};

// Columns are the vectors d_v, one per vertex in `vertices` order.
using Sample = Eigen::MatrixXd;

// Draws one sample: standard normal coordinates (Gaussian), normalized Gaussian
// vectors (spherical), uniform ±1 (Boolean). Trial t uses mt19937_64 seeded with
// derive_seed(rng_seed, t), so estimates do not depend on the thread count.
Sample draw(Setting s, int n, int vertex_count, uint64_t seed);

// Floating evaluation; vertices of p must appear in `vertices`.
double evaluate(const InvariantPoly& p, const std::vector<Vertex>& vertices, const Sample& d);

// Sample mean of the product of the factors (one factor: E[p]; two: <p, q>).
Estimate monte_carlo_expectation(const std::vector<InvariantPoly>& factors, const SampleConfig& cfg);

struct InvarianceReport {
  int trials = 0;
  double max_deviation = 0;  // relative; 0 for the exact Boolean path
  bool exact = false;
  bool passed = false;
};

// Gaussian/spherical: random orthogonal maps from the QR factorization of a
// Gaussian matrix, floating comparison at relative tolerance 1e-9. Boolean:
// coordinate permutations with sign flips, compared exactly; every symmetry of
// the cube is used when n <= 4, otherwise `trials` random ones.
InvarianceReport invariance_check(const InvariantPoly& p, const SampleConfig& cfg, int trials = 20);

}  // namespace orthograph::oracle
