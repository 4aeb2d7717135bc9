#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tropos {

inline constexpr int kExitUsage = 64;
inline constexpr int kExitComputation = 65;

/// Runs the `tropos` command line; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tropos
