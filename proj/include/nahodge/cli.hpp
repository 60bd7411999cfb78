#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nahodge {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitMath = 3;
inline constexpr int kExitTrialFailure = 4;

/// Runs the command line (arguments without the program name). Output that
/// is not redirected with --out goes to `out`; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nahodge
