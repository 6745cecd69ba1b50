#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace modepoly::cli {

enum ExitCode : int {
    kSuccess = 0,
    kInvalidInput = 2,
    kBudgetExceeded = 3,
    kConsistencyFailure = 4,
};

// Runs one command line (args[0] is the program name). Results go to out,
// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace modepoly::cli
