#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tdpoly {

/// Process exit statuses of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitGuard = 2,
  kExitDiscrepancy = 3,
};

/// Runs the tool on `args` (argv without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tdpoly
