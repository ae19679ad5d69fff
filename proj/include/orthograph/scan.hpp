#pragma once

#include <functional>
#include <string>
#include <vector>

#include "orthograph/pairs.hpp"
#include "orthograph/polyspace.hpp"

namespace orthograph {

enum class ConjectureStatus { Consistent, Counterexample, Vacuous };
std::string to_string(ConjectureStatus s);

struct ScanRecord {
  Graph g, h;
  std::string key;
  bool union_planar = false;
  bool k5_minor = false;
  RatFuncN inner_product;
  int sign_at_large_n = 0;
  IntPolyN simple_matching_sum;
  bool leading_order_match = false;  // planar pairs only
  ConjectureStatus conjecture_status = ConjectureStatus::Vacuous;
  // Max-degree-2 pairs: every M with s_M != 0 is matched by a simple M' with
  // at least as many cycles. `dominance_checked` is false for other pairs.
  bool dominance_checked = false;
  bool dominance_holds = true;
  std::vector<std::pair<int, long>> s_terms;  // (cycles(M), s_M) for s_M != 0
};

struct ScanConfig {
  int budget = 8;  // union edges
  int jobs = 1;
};

// Spherical, loopless, degree-equivalent pairs with |E(G ∪ H)| <= budget.
// Records come back sorted by key whatever the thread count.
std::vector<ScanRecord> scan(const ScanConfig& cfg);
ScanRecord scan_pair(const Graph& g, const Graph& h);

nlohmann::json to_json(const ScanRecord& r);

}  // namespace orthograph
