#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace csplab {

/// Exit codes of the command-line front end.
enum ExitCode : int { kPass = 0, kMismatch = 1, kUsage = 2, kInternal = 3 };

/// Runs `csp-lab` with args (excluding the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace csplab
