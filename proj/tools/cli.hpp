#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace leecodes::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitGuard = 2;

/// Runs one subcommand. `args` excludes the program name. Machine-readable
/// payload goes to `out` only on success; diagnostics and usage go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace leecodes::cli
