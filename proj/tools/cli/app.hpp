#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace relay_rates::cli {

/// Exit codes of the relay_rates tool.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kInvalidInput = 2,
  kUnstableGain = 3,
  kValidationFailed = 4,
};

/// Entry point shared by main() and the tests. `args` excludes the program
/// name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace relay_rates::cli
