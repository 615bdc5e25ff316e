#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace matchbound::cli {

inline constexpr const char* kToolName = "matchbound";
inline constexpr const char* kVersion = "0.1.0";

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitUsage = 1;       // bad flags, bad input files
inline constexpr int kExitCheckFailed = 2; // a mathematical check failed

// Runs the command line (argv without the program name) against the
// given streams and returns the exit code. The process main() is a thin
// wrapper; tests drive this directly.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace matchbound::cli
