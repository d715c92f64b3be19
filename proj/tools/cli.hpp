#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace chores::cli {

enum ExitCode { kSuccess = 0, kUsage = 1, kFailure = 2 };

// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chores::cli
