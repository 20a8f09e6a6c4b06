#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace maxplus::cli {

/// Exit codes.
inline constexpr int kSuccess = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;

/// Runs one subcommand; `args` excludes the program name. A matrix path
/// of "-" reads standard input.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace maxplus::cli
