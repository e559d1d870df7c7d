#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kset::cli {

struct CheckResult {
  std::string name;
  std::int64_t cells = 0;
  std::int64_t failures = 0;
  std::string first_failure;  // empty when every cell passed

  bool passed() const noexcept { return failures == 0; }
};

/// Cross-checks the closed forms against the exact and summation oracles and
/// certifies the planner bounds over a fixed parameter grid.
std::vector<CheckResult> run_verification_suite();

}  // namespace kset::cli
