#pragma once

#include <stdexcept>
#include <string>

namespace kset {

/// A precondition on an argument was violated (bad k, q outside [0,1], ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An oracle was asked for more work than its enumeration/summation budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, unsigned long long limit)
      : std::runtime_error(what), limit_(limit) {}
  unsigned long long limit() const noexcept { return limit_; }

 private:
  unsigned long long limit_;
};

/// No parameter value meets the coverage target. best_coverage is the
/// coverage reached by the most favourable admissible value.
class Infeasible : public std::runtime_error {
 public:
  Infeasible(const std::string& what, double best_coverage)
      : std::runtime_error(what), best_coverage_(best_coverage) {}
  double best_coverage() const noexcept { return best_coverage_; }

 private:
  double best_coverage_;
};

namespace detail {
inline void require(bool cond, const char* message) {
  if (!cond) throw InvalidArgument(message);
}
}  // namespace detail

}  // namespace kset
