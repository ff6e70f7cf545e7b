#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rcsp::cli {

/// Exit codes.
inline constexpr int kExitOptimal = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInfeasible = 2;
inline constexpr int kExitTimeout = 3;

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rcsp::cli
