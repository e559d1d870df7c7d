#include "kset/estimate.hpp"

#include <cmath>

#include "kset/errors.hpp"

namespace kset {

namespace {

// Neumaier compensated sum, accumulated strictly in index order.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace

CoverageEstimate summarize_trials(std::span<const double> samples) {
  detail::require(!samples.empty(), "at least one trial is required");
  const auto count = static_cast<double>(samples.size());

  CompensatedSum total;
  for (double s : samples) total.add(s);
  const double mean = total.value() / count;

  CoverageEstimate est;
  est.mean = mean;
  est.trials = static_cast<std::int64_t>(samples.size());
  if (samples.size() > 1) {
    CompensatedSum sq;
    for (double s : samples) sq.add((s - mean) * (s - mean));
    const double variance = sq.value() / (count - 1.0);
    est.std_error = std::sqrt(variance / count);
  }
  est.ci95_halfwidth = 1.96 * est.std_error;
  return est;
}

}  // namespace kset
