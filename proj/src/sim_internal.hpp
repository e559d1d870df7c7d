#pragma once

#include <cstdint>

#include "kset/errors.hpp"
#include "kset/model.hpp"
#include "kset/sim.hpp"

namespace kset::sim::internal {

inline void validate(const FieldSpec& field, std::int64_t n, std::int64_t k) {
  detail::require(field.width > 0.0 && field.height > 0.0, "field width and height must be > 0");
  detail::require(field.sensing_radius > 0.0, "sensing radius must be > 0");
  detail::require(n >= 1, "n must be >= 1");
  detail::require(k >= 1, "k must be >= 1");
}

inline void validate(const SimConfig& cfg) {
  detail::require(cfg.trials >= 1, "trials must be >= 1");
  detail::require(cfg.sample_grid >= 1, "grid must be >= 1");
}

inline bool within(Point node, Point p, double radius) {
  const double dx = node.x - p.x;
  const double dy = node.y - p.y;
  return dx * dx + dy * dy <= radius * radius;
}

// Spatial mean from the summed distinct-subset counts of all grid points.
inline double spatial_mean(std::uint64_t distinct_total, std::int64_t k, std::int64_t grid) {
  return static_cast<double>(distinct_total) /
         (static_cast<double>(k) * static_cast<double>(grid) * static_cast<double>(grid));
}

}  // namespace kset::sim::internal
