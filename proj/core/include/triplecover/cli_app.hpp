#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace triplecover::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    kOk = 0,              // success / all oracle ranks match
    kUsageError = 1,      // flag or argument parsing failed
    kMathRejection = 2,   // parity or classification rejected the input
    kOracleMismatch = 3,  // an oracle rank disagreed with the closed form
};

/// Runs one invocation of the tool. `args` excludes the program name.
/// Reports go to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace triplecover::cli
