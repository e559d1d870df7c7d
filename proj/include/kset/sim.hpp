#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kset/estimate.hpp"
#include "kset/model.hpp"

namespace kset::sim {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// One realisation of random deployment plus random sub-network assignment.
struct Deployment {
  std::vector<Point> positions;
  std::vector<std::int64_t> assignments;  // each in [0, k)

  std::size_t size() const noexcept { return positions.size(); }
};

struct SimConfig {
  std::int64_t trials = 200;
  std::int64_t sample_grid = 50;  // coverage sampled at grid x grid cell centres
  std::uint64_t seed = 0;
};

/// Drops n nodes uniformly on the field and lets each pick a sub-network
/// uniformly from {0..k-1}. Draws go node by node from the (seed, stream)
/// generator, so a deployment of n nodes is a prefix of the one with n + 1.
Deployment deploy(const FieldSpec& field, std::int64_t n, std::int64_t k, std::uint64_t seed,
                  std::uint64_t stream = 0);

/// Number of distinct sub-networks among nodes within `radius` of `point`.
std::int64_t covering_subset_count(const Deployment& d, std::int64_t k, Point point, double radius);

/// Fraction of the k slots in which some node within range of `point` is
/// awake: covering_subset_count / k.
double point_coverage_of_deployment(const Deployment& d, std::int64_t k, Point point, double radius);

/// Centre of grid cell `index` along an axis of length extent split into
/// `grid` cells. Shared by every kernel so they evaluate identical points.
inline double cell_center(std::int64_t index, double extent, std::int64_t grid) {
  return (static_cast<double>(index) + 0.5) * (extent / static_cast<double>(grid));
}

/// Spatial mean of point coverage over the sample grid for trial `trial`,
/// using the deployment drawn from stream (seed, trial).
double trial_spatial_coverage(const FieldSpec& field, std::int64_t n, std::int64_t k, std::uint64_t seed,
                              std::uint64_t trial, std::int64_t grid);

/// Monte Carlo network coverage intensity. Trials run in parallel under
/// OpenMP; each trial rasterises node disks onto a per-cell sub-network
/// bitmask. Results are bit-identical to estimate_network_coverage_serial.
CoverageEstimate estimate_network_coverage(const FieldSpec& field, std::int64_t n, std::int64_t k,
                                           const SimConfig& cfg);

/// Reference implementation: one thread, and every grid point checks every
/// node directly.
CoverageEstimate estimate_network_coverage_serial(const FieldSpec& field, std::int64_t n, std::int64_t k,
                                                  const SimConfig& cfg);

/// Exact expectation of the simulator's estimate: the mean over grid cell
/// centres p of 1 - (1 - q(p)/k)^n, where q(p) is the border-clipped disk
/// area at p over the field area. Because coverage is concave in q this is
/// at most network_coverage_intensity(effective_coverage_probability(...)),
/// with the gap growing as border clipping varies more across the field.
double expected_grid_coverage(const FieldSpec& field, std::int64_t n, std::int64_t k, std::int64_t grid);

struct SweepRow {
  std::int64_t n = 0;
  std::int64_t k = 0;
  double q = 0.0;  // effective (border-clipped) coverage probability
  double analytic_coverage = 0.0;
  CoverageEstimate empirical;
  std::uint64_t seed = 0;
};

/// Analytic and empirical coverage for every (n, k) pair, n-major. Every cell
/// reuses cfg.seed, so cells share random numbers trial by trial.
std::vector<SweepRow> sweep(const FieldSpec& field, std::span<const std::int64_t> n_values,
                            std::span<const std::int64_t> k_values, const SimConfig& cfg);

}  // namespace kset::sim
