#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace orthograph::cli {

enum ExitCode { kOk = 0, kCheckFailed = 1, kUsage = 2, kBudget = 3 };

// Runs one command line (args excludes the program name). Everything goes to
// out/err so tests can drive it in-process.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orthograph::cli
