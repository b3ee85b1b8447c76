#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace itrev::cli {

/// Exit codes shared by the commands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitSemantic = 3;
inline constexpr int kExitNoMaximum = 4;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace itrev::cli
