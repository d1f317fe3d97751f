#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace peakpoly::cli {

// Exit statuses shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kLimitExceeded = 3,
};

// Runs the command line `args` (args[0] is the program name), writing
// results to `out` and diagnostics to `err`. Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace peakpoly::cli
