#include "kset/planner.hpp"

#include <cmath>
#include <string>

#include "kset/errors.hpp"
#include "kset/model.hpp"

namespace kset::planner {

using detail::require;

namespace {

// Bounds beyond this are not representable as node or subset counts we can
// step through; the closed form is then reported as infeasible.
constexpr double kMaxBound = 4.0e15;

void require_probability(double q) {
  require(std::isfinite(q) && q >= 0.0 && q <= 1.0, "q must lie in [0, 1]");
}

}  // namespace

PlanResult min_nodes(double q, std::int64_t k, double t) {
  require_probability(q);
  require(k >= 1, "k must be >= 1");
  require(std::isfinite(t) && t >= 0.0 && t <= 1.0, "t must lie in [0, 1)");
  if (t >= 1.0) {
    throw Infeasible("target t = 1 is unreachable: coverage 1 - (1 - q/k)^n stays below 1 for q/k < 1", 1.0);
  }
  const auto coverage = [&](std::int64_t n) { return network_coverage_intensity(q, n, k); };

  PlanResult result;
  const double x = q / static_cast<double>(k);
  std::int64_t n = 1;
  if (t == 0.0) {
    result.closed_form = 0.0;
  } else if (q == 0.0) {
    throw Infeasible("q = 0: no number of nodes covers anything", 0.0);
  } else if (x >= 1.0) {
    result.closed_form = 1.0;
  } else {
    const double seed = std::log1p(-t) / std::log1p(-x);
    result.closed_form = seed;
    if (!(seed < kMaxBound)) {
      throw Infeasible("required node count exceeds " + std::to_string(kMaxBound), coverage(1));
    }
    n = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(seed)));
  }

  // Certify: the seed is off by at most a rounding step near integers.
  while (n > 1 && coverage(n - 1) >= t) --n;
  while (coverage(n) < t) ++n;

  result.bound_value = n;
  result.achieved_coverage = coverage(n);
  result.binding_check.bound = n;
  result.binding_check.coverage_at_bound = result.achieved_coverage;
  if (n > 1) {
    result.binding_check.adjacent = n - 1;
    result.binding_check.coverage_at_adjacent = coverage(n - 1);
  }
  return result;
}

PlanResult max_subsets(double q, std::int64_t n, double t) {
  require_probability(q);
  require(n >= 1, "n must be >= 1");
  require(std::isfinite(t) && t > 0.0 && t < 1.0, "t must lie in (0, 1)");
  if (q == 0.0) throw Infeasible("q = 0: no sub-network count covers anything", 0.0);
  const auto coverage = [&](std::int64_t k) { return network_coverage_intensity(q, n, k); };

  const double single = coverage(1);
  if (single < t) {
    throw Infeasible("target unreachable even with k = 1 (coverage " + std::to_string(single) + ")", single);
  }

  PlanResult result;
  // 1 - exp(ln(1 - t) / n), via expm1 for accuracy at large n.
  const double seed = q / -std::expm1(std::log1p(-t) / static_cast<double>(n));
  result.closed_form = seed;
  if (!(seed < kMaxBound)) {
    throw Infeasible("sub-network bound exceeds " + std::to_string(kMaxBound), single);
  }
  std::int64_t k = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::floor(seed)));

  while (coverage(k + 1) >= t) ++k;
  while (k > 1 && coverage(k) < t) --k;

  result.bound_value = k;
  result.achieved_coverage = coverage(k);
  result.binding_check.bound = k;
  result.binding_check.coverage_at_bound = result.achieved_coverage;
  result.binding_check.adjacent = k + 1;
  result.binding_check.coverage_at_adjacent = coverage(k + 1);
  return result;
}

std::vector<CurvePoint> coverage_curve(double q, std::int64_t k, std::int64_t n_first, std::int64_t n_last) {
  require_probability(q);
  require(k >= 1, "k must be >= 1");
  require(n_first >= 1, "n range must start at >= 1");
  require(n_first <= n_last, "n range must not be empty");
  std::vector<CurvePoint> curve;
  curve.reserve(static_cast<std::size_t>(n_last - n_first + 1));
  for (std::int64_t n = n_first; n <= n_last; ++n) {
    curve.push_back({n, network_coverage_intensity(q, n, k)});
  }
  return curve;
}

}  // namespace kset::planner
