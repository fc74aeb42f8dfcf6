#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cospec::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCheckFailure = 2;
inline constexpr int kExitCounterexample = 3;

// Environment variable holding the default worker count for `verify`.
inline constexpr const char* kWorkersEnv = "COSPEC_WORKERS";

// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cospec::cli
