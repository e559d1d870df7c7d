#include "kset/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "kset/errors.hpp"

namespace kset {

using detail::require;

ScheduleSpec::ScheduleSpec(std::int64_t k_, double slot_duration_) : k(k_), slot_duration(slot_duration_) {
  require(k >= 1, "k must be >= 1");
  require(slot_duration > 0.0, "slot_duration must be > 0");
}

NetworkSpec::NetworkSpec(std::int64_t n_, double q_) : n(n_), q(q_) {
  require(n >= 1, "n must be >= 1");
  require(q >= 0.0 && q <= 1.0, "q must lie in [0, 1]");
}

double pow_one_minus(double x, std::int64_t n) {
  if (n == 0 || x == 0.0) return 1.0;
  if (x == 1.0) return 0.0;
  // log1p keeps full relative precision when x ~ 1e-4 and n ~ 1e3.
  return std::exp(static_cast<double>(n) * std::log1p(-x));
}

double point_coverage_intensity(std::int64_t c, std::int64_t k) {
  require(k >= 1, "k must be >= 1");
  require(c >= 0, "c must be >= 0");
  return 1.0 - pow_one_minus(1.0 / static_cast<double>(k), c);
}

double expected_nonempty_subsets(std::int64_t c, std::int64_t k) {
  return static_cast<double>(k) * point_coverage_intensity(c, k);
}

double network_coverage_intensity(double q, std::int64_t n, std::int64_t k) {
  require(q >= 0.0 && q <= 1.0, "q must lie in [0, 1]");
  require(n >= 1, "n must be >= 1");
  require(k >= 1, "k must be >= 1");
  const double x = q / static_cast<double>(k);
  double coverage;
  if (x == 0.0) {
    coverage = 0.0;
  } else if (x == 1.0) {
    coverage = 1.0;
  } else {
    // 1 - exp(y) via expm1 avoids cancellation when coverage is small.
    coverage = -std::expm1(static_cast<double>(n) * std::log1p(-x));
  }
#if defined(KSET_INJECT_MODEL_FAULT)
  coverage += 1e-6;
#endif
  return coverage;
}

double network_coverage_intensity(const NetworkSpec& net, const ScheduleSpec& schedule) {
  return network_coverage_intensity(net.q, net.n, schedule.k);
}

double forest_coverage_intensity(std::int64_t n, std::int64_t k) {
  return network_coverage_intensity(kForestQ, n, k);
}

double coverage_probability_from_geometry(const FieldSpec& field, QConvention convention) {
  require(field.width > 0.0 && field.height > 0.0, "field width and height must be > 0");
  require(field.sensing_radius >= 0.0, "sensing radius must be >= 0");
  const double r = field.sensing_radius;
  switch (convention) {
    case QConvention::RadiusRatio:
      return std::min(1.0, r / field.area());
    case QConvention::DiskArea:
      return std::min(1.0, std::numbers::pi * r * r / field.area());
  }
  throw InvalidArgument("unknown q convention");
}

}  // namespace kset
