#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace propg_cli {

// Exit codes; parse failures, capacity overruns, and precision shortfalls
// are distinguishable by code alone.
enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kUsage = 2,
    kBudget = 3,
    kPrecision = 4,
    kDomain = 5,
    kIo = 6,
    kInternal = 7,
};

// Runs one CLI invocation; args excludes the program name.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace propg_cli
