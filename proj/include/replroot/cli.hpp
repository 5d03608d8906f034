#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace replroot {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNoResult = 2;

/// Runs one command line (without the program name), e.g.
/// {"solve", "x^2 - i", "--alpha", "i", "--iters", "13"}.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace replroot
