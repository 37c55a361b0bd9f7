#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bctkit::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kClaimFailed = 1,
  kUsage = 2,
  kBudget = 3,
  kIo = 4,
};

// Runs the command line `args` (args[0] is the program name). Results go to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bctkit::cli
