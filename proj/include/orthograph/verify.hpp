#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace orthograph {

struct Check {
  std::string name;
  bool ok = false;
  std::string lhs, rhs;  // computed vs expected, as text
  long n = 0;            // 0: symbolic in n
  uint64_t seed = 0;     // 0: no randomness involved
  std::string note;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  double seconds = 0;
  bool ok() const;
  size_t failures() const;
};

struct VerifyConfig {
  uint64_t seed = 0x5eed;
  int jobs = 1;
  std::string golden_dir;  // empty: the checked-in tests/golden
  int scan_budget = 8;
  long mc_samples = 100000;
};

std::vector<std::string> suite_names();
bool is_suite(const std::string& name);
// "all" runs every suite in order and merges the checks.
SuiteReport run_suite(const std::string& name, const VerifyConfig& cfg);

nlohmann::json to_json(const Check& c);
nlohmann::json to_json(const SuiteReport& r);

}  // namespace orthograph
