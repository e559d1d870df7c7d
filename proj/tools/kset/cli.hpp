#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kset::cli {

/// Stable process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,
  kExitInfeasible = 3,
};

/// Runs one CLI invocation. args excludes the program name. Reports go to
/// `out` (or to --output when given); diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses a value list: "a:b" (inclusive range), "a,b,c", or a single value.
std::vector<std::int64_t> parse_value_list(const std::string& text);

}  // namespace kset::cli
