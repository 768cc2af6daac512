#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace equisum::cli {

// Exit-code contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInfeasible = 2;
inline constexpr int kExitIndeterminate = 3;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitData = 65;
inline constexpr int kExitIo = 74;

/// Name of the environment variable holding the precision floor exponent.
inline constexpr const char* kPrecisionFloorEnv = "EQUISUM_PRECISION_FLOOR";

/// Runs the tool with args (args[0] is the program name). Results go to
/// `out` (or --out files), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace equisum::cli
