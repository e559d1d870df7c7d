#include "kset/sim.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <cmath>

#include "kset/errors.hpp"
#include "kset/geometry.hpp"
#include "kset/rng.hpp"
#include "sim_internal.hpp"

namespace kset::sim {

using internal::within;

Deployment deploy(const FieldSpec& field, std::int64_t n, std::int64_t k, std::uint64_t seed,
                  std::uint64_t stream) {
  internal::validate(field, n, k);
  Xoshiro256 rng(seed, stream);
  Deployment d;
  d.positions.reserve(static_cast<std::size_t>(n));
  d.assignments.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    const double x = rng.uniform01() * field.width;
    const double y = rng.uniform01() * field.height;
    d.positions.push_back({x, y});
    d.assignments.push_back(static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(k))));
  }
  return d;
}

std::int64_t covering_subset_count(const Deployment& d, std::int64_t k, Point point, double radius) {
  detail::require(k >= 1, "k must be >= 1");
  detail::require(radius > 0.0, "radius must be > 0");
  detail::require(d.positions.size() == d.assignments.size(), "deployment positions and assignments differ in length");
  std::vector<bool> seen(static_cast<std::size_t>(k), false);
  std::int64_t distinct = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!within(d.positions[i], point, radius)) continue;
    const auto subset = d.assignments[i];
    detail::require(subset >= 0 && subset < k, "assignment index out of range");
    if (!seen[static_cast<std::size_t>(subset)]) {
      seen[static_cast<std::size_t>(subset)] = true;
      ++distinct;
    }
  }
  return distinct;
}

double point_coverage_of_deployment(const Deployment& d, std::int64_t k, Point point, double radius) {
  return static_cast<double>(covering_subset_count(d, k, point, radius)) / static_cast<double>(k);
}

namespace {

// Per-cell bitmask of awake sub-networks, reused across trials on a thread.
class CoverageRaster {
 public:
  CoverageRaster(std::int64_t grid, std::int64_t k)
      : grid_(grid),
        words_((static_cast<std::size_t>(k) + 63) / 64),
        bits_(static_cast<std::size_t>(grid * grid) * words_, 0) {}

  std::uint64_t distinct_total(const FieldSpec& field, const Deployment& d) {
    std::fill(bits_.begin(), bits_.end(), 0);
    const double r = field.sensing_radius;
    const double dx = field.width / static_cast<double>(grid_);
    const double dy = field.height / static_cast<double>(grid_);
    for (std::size_t node = 0; node < d.size(); ++node) {
      const Point p = d.positions[node];
      const auto subset = static_cast<std::size_t>(d.assignments[node]);
      const std::uint64_t mask = std::uint64_t{1} << (subset % 64);
      // Candidate cells from the bounding box, widened by one; the exact
      // distance test below decides membership.
      const auto i_lo = clamp_index(std::floor((p.x - r) / dx - 0.5) - 1);
      const auto i_hi = clamp_index(std::ceil((p.x + r) / dx - 0.5) + 1);
      const auto j_lo = clamp_index(std::floor((p.y - r) / dy - 0.5) - 1);
      const auto j_hi = clamp_index(std::ceil((p.y + r) / dy - 0.5) + 1);
      for (std::int64_t j = j_lo; j <= j_hi; ++j) {
        const double cy = cell_center(j, field.height, grid_);
        for (std::int64_t i = i_lo; i <= i_hi; ++i) {
          const Point cell{cell_center(i, field.width, grid_), cy};
          if (within(p, cell, r)) {
            bits_[static_cast<std::size_t>(j * grid_ + i) * words_ + subset / 64] |= mask;
          }
        }
      }
    }
    std::uint64_t total = 0;
    for (std::uint64_t word : bits_) total += static_cast<std::uint64_t>(std::popcount(word));
    return total;
  }

 private:
  std::int64_t clamp_index(double v) const {
    return static_cast<std::int64_t>(std::clamp(v, 0.0, static_cast<double>(grid_ - 1)));
  }

  std::int64_t grid_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace

double trial_spatial_coverage(const FieldSpec& field, std::int64_t n, std::int64_t k, std::uint64_t seed,
                              std::uint64_t trial, std::int64_t grid) {
  internal::validate(field, n, k);
  detail::require(grid >= 1, "grid must be >= 1");
  CoverageRaster raster(grid, k);
  const Deployment d = deploy(field, n, k, seed, trial);
  return internal::spatial_mean(raster.distinct_total(field, d), k, grid);
}

CoverageEstimate estimate_network_coverage(const FieldSpec& field, std::int64_t n, std::int64_t k,
                                           const SimConfig& cfg) {
  internal::validate(field, n, k);
  internal::validate(cfg);
  std::vector<double> samples(static_cast<std::size_t>(cfg.trials));

#pragma omp parallel
  {
    CoverageRaster raster(cfg.sample_grid, k);
#pragma omp for schedule(dynamic, 4)
    for (std::int64_t t = 0; t < cfg.trials; ++t) {
      const Deployment d = deploy(field, n, k, cfg.seed, static_cast<std::uint64_t>(t));
      samples[static_cast<std::size_t>(t)] =
          internal::spatial_mean(raster.distinct_total(field, d), k, cfg.sample_grid);
    }
  }
  return summarize_trials(samples);
}

double expected_grid_coverage(const FieldSpec& field, std::int64_t n, std::int64_t k, std::int64_t grid) {
  internal::validate(field, n, k);
  detail::require(grid >= 1, "grid must be >= 1");
  const Rect bounds{0.0, 0.0, field.width, field.height};
  double total = 0.0;
  for (std::int64_t j = 0; j < grid; ++j) {
    const double cy = cell_center(j, field.height, grid);
    for (std::int64_t i = 0; i < grid; ++i) {
      const double cx = cell_center(i, field.width, grid);
      const double q = std::min(1.0, disk_rect_intersection_area(cx, cy, field.sensing_radius, bounds) / field.area());
      total += network_coverage_intensity(q, n, k);
    }
  }
  return total / (static_cast<double>(grid) * static_cast<double>(grid));
}

std::vector<SweepRow> sweep(const FieldSpec& field, std::span<const std::int64_t> n_values,
                            std::span<const std::int64_t> k_values, const SimConfig& cfg) {
  detail::require(!n_values.empty(), "n value list must not be empty");
  detail::require(!k_values.empty(), "k value list must not be empty");
  internal::validate(cfg);
  const double q_eff = effective_coverage_probability(field, cfg.sample_grid);

  std::vector<SweepRow> rows;
  rows.reserve(n_values.size() * k_values.size());
  for (std::int64_t n : n_values) {
    for (std::int64_t k : k_values) {
      SweepRow row;
      row.n = n;
      row.k = k;
      row.q = q_eff;
      row.analytic_coverage = network_coverage_intensity(q_eff, n, k);
      row.empirical = estimate_network_coverage(field, n, k, cfg);
      row.seed = cfg.seed;
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace kset::sim
