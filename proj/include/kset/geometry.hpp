#pragma once

#include <cstdint>

#include "kset/model.hpp"

namespace kset {

/// Axis-aligned rectangle [x0, x1] x [y0, y1].
struct Rect {
  double x0 = 0.0;
  double y0 = 0.0;
  double x1 = 0.0;
  double y1 = 0.0;
};

/// Exact area of the intersection of the disk centred at (cx, cy) with
/// radius r and the rectangle. Integrates the clipped chord length in
/// closed form piece by piece between the abscissae where the circle
/// crosses the rectangle's horizontal edges.
double disk_rect_intersection_area(double cx, double cy, double r, const Rect& rect);

/// Coverage probability q seen by the analytic model once border clipping is
/// accounted for: the mean, over the centres of a grid x grid partition of
/// the field, of area(disk(p, r) intersect field) / area(field).
double effective_coverage_probability(const FieldSpec& field, std::int64_t grid);

/// Sensing radius whose unclipped disk covers a fraction q of the field.
double radius_for_disk_area_q(const FieldSpec& field, double q);

}  // namespace kset
