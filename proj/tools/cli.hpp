#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hodge::cli {

enum ExitCode { kPositive = 0, kRefuted = 1, kUsage = 2 };

/// Runs one invocation; argv[0] is the program name. Reports go to `out`, diagnostics to `err`.
int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace hodge::cli
