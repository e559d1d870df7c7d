#pragma once

#include <cstdint>

namespace kset {

/// Number of disjoint sub-networks and the length of one working slot.
/// A full scheduling cycle visits every slot once.
struct ScheduleSpec {
  std::int64_t k = 1;
  double slot_duration = 1.0;  // seconds

  ScheduleSpec() = default;
  ScheduleSpec(std::int64_t k, double slot_duration);

  double cycle_length() const noexcept { return static_cast<double>(k) * slot_duration; }
};

/// Deployed node count n and the probability q that one node covers a point.
struct NetworkSpec {
  std::int64_t n = 1;
  double q = 0.0;

  NetworkSpec() = default;
  NetworkSpec(std::int64_t n, double q);
};

/// Rectangular field with a disk sensing model.
struct FieldSpec {
  double width = 1.0;   // meters
  double height = 1.0;  // meters
  double sensing_radius = 1.0;

  double area() const noexcept { return width * height; }
};

/// How a sensing radius turns into a per-point coverage probability.
enum class QConvention {
  /// q = r / (width * height). Dimensionally odd but reproduces the forest
  /// design numbers (r = 30, a = 100 x 100 gives q = 0.003).
  RadiusRatio,
  /// q = min(1, pi r^2 / (width * height)), ignoring border clipping.
  DiskArea,
};

/// Coverage probability of the forest deployment profile.
inline constexpr double kForestQ = 0.003;

/// Returns (1 - x)^n for x in [0,1] without the rounding drift of repeated
/// multiplication.
double pow_one_minus(double x, std::int64_t n);

/// Fraction of the scheduling cycle during which a point covered by c nodes
/// is watched by an active node: 1 - (1 - 1/k)^c.
double point_coverage_intensity(std::int64_t c, std::int64_t k);

/// Expected number of sub-networks holding at least one of the c covering
/// nodes: k * (1 - (1 - 1/k)^c).
double expected_nonempty_subsets(std::int64_t c, std::int64_t k);

/// Coverage intensity averaged over a Binomial(n, q) count of covering
/// nodes, 1 - (1 - q/k)^n.
double network_coverage_intensity(double q, std::int64_t n, std::int64_t k);
double network_coverage_intensity(const NetworkSpec& net, const ScheduleSpec& schedule);

/// network_coverage_intensity at the forest profile's q = 0.003.
double forest_coverage_intensity(std::int64_t n, std::int64_t k);

double coverage_probability_from_geometry(const FieldSpec& field, QConvention convention);

}  // namespace kset
