#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace asianpath::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kSuccess = 0,
    kUsage = 2,
    kDomain = 3,
};

/// Runs one CLI invocation. args excludes the program name. Results go to
/// out (or to files named by --out), diagnostics and warnings to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace asianpath::cli
