#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace framecert {

/// Process exit codes shared by every subcommand.
inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitUnknown = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitBadInput = 65;

/// Runs one tool invocation. `args` excludes the program name. Certificate
/// and bundle JSON is written to `out`; diagnostics go to `err`. Identical
/// arguments and input bytes produce identical output bytes.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace framecert
