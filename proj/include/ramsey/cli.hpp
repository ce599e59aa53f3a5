#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ramsey {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitRefuted = 1,
    kExitInputError = 2,
    kExitBudgetExhausted = 3,
};

/// Runs the `ramsey` command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ramsey
