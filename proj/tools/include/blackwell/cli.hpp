#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace blackwell::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInvalidMdp = 2,
  kPrecondition = 3,
  kBudget = 4,
};

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace blackwell::cli
