#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace idisc {

/// Exit statuses of the command line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,  // oracle-check found a disagreement
  kExitUsage = 2,
  kExitData = 3,
  kExitCapacity = 4,
};

/// Runs the tool; args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace idisc
