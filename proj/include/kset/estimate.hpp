#pragma once

#include <cstdint>
#include <span>

namespace kset {

/// Empirical coverage statistic over independent trials.
struct CoverageEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t trials = 0;
  double ci95_halfwidth = 0.0;  // always 1.96 * std_error
};

/// Mean and standard error of per-trial samples. The reduction runs in
/// sample order with compensated summation, so the result depends only on
/// the sample values and never on how they were produced.
CoverageEstimate summarize_trials(std::span<const double> samples);

}  // namespace kset
