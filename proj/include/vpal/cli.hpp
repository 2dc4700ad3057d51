#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace vpal::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitBudget = 2;

/// Runs the command line `args` (program name excluded). Data goes to `out`,
/// diagnostics to `err`; `in` feeds the export subcommand.
int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace vpal::cli
