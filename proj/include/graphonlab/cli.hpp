#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graphonlab::cli {

/// Process exit statuses.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kInputError = 2,
  kBudgetExceeded = 3,
  kInfeasible = 4,
};

/// Runs the command line (args[0] is the program name). Results go to `out`,
/// diagnostics and timings to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace graphonlab::cli
