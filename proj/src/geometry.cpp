#include "kset/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "kset/errors.hpp"

namespace kset {

namespace {

// Antiderivative of sqrt(r^2 - u^2).
double half_chord_integral(double u, double r) {
  const double ratio = std::clamp(u / r, -1.0, 1.0);
  const double root = std::sqrt(std::max(0.0, r * r - u * u));
  return 0.5 * (u * root + r * r * std::asin(ratio));
}

}  // namespace

double disk_rect_intersection_area(double cx, double cy, double r, const Rect& rect) {
  detail::require(r >= 0.0, "radius must be >= 0");
  if (r == 0.0) return 0.0;

  // Shift so the disk sits at the origin.
  const double x0 = rect.x0 - cx, x1 = rect.x1 - cx;
  const double y0 = rect.y0 - cy, y1 = rect.y1 - cy;
  const double lo = std::max(x0, -r);
  const double hi = std::min(x1, r);
  if (lo >= hi || y0 >= y1) return 0.0;

  std::array<double, 6> cuts{};
  std::size_t count = 0;
  cuts[count++] = lo;
  cuts[count++] = hi;
  for (double y : {y0, y1}) {
    if (std::fabs(y) < r) {
      const double u = std::sqrt(r * r - y * y);
      if (-u > lo && -u < hi) cuts[count++] = -u;
      if (u > lo && u < hi) cuts[count++] = u;
    }
  }
  std::sort(cuts.begin(), cuts.begin() + static_cast<std::ptrdiff_t>(count));

  double area = 0.0;
  for (std::size_t i = 0; i + 1 < count; ++i) {
    const double a = cuts[i], b = cuts[i + 1];
    if (b <= a) continue;
    // Within (a, b) each clip is either a rectangle edge or the arc
    // throughout; decide which at the midpoint.
    const double mid = 0.5 * (a + b);
    const double s = std::sqrt(std::max(0.0, r * r - mid * mid));
    const bool top_is_edge = y1 < s;
    const bool bottom_is_edge = y0 > -s;
    const double top = top_is_edge ? y1 : s;
    const double bottom = bottom_is_edge ? y0 : -s;
    if (top <= bottom) continue;

    const double arc = half_chord_integral(b, r) - half_chord_integral(a, r);
    const double width = b - a;
    area += top_is_edge ? y1 * width : arc;
    area -= bottom_is_edge ? y0 * width : -arc;
  }
  return std::max(0.0, area);
}

double effective_coverage_probability(const FieldSpec& field, std::int64_t grid) {
  detail::require(field.width > 0.0 && field.height > 0.0, "field width and height must be > 0");
  detail::require(field.sensing_radius >= 0.0, "sensing radius must be >= 0");
  detail::require(grid >= 1, "grid must be >= 1");

  const Rect bounds{0.0, 0.0, field.width, field.height};
  const double dx = field.width / static_cast<double>(grid);
  const double dy = field.height / static_cast<double>(grid);
  const double area = field.area();
  if (field.sensing_radius * field.sensing_radius >= field.width * field.width + field.height * field.height) {
    return 1.0;  // every clipped disk is the whole field
  }

  double total = 0.0;
  for (std::int64_t j = 0; j < grid; ++j) {
    const double cy = (static_cast<double>(j) + 0.5) * dy;
    double row = 0.0;
    for (std::int64_t i = 0; i < grid; ++i) {
      const double cx = (static_cast<double>(i) + 0.5) * dx;
      row += disk_rect_intersection_area(cx, cy, field.sensing_radius, bounds);
    }
    total += row;
  }
  const double q = total / (area * static_cast<double>(grid) * static_cast<double>(grid));
  return std::clamp(q, 0.0, 1.0);
}

double radius_for_disk_area_q(const FieldSpec& field, double q) {
  detail::require(field.width > 0.0 && field.height > 0.0, "field width and height must be > 0");
  detail::require(q >= 0.0 && q <= 1.0, "q must lie in [0, 1]");
  return std::sqrt(q * field.area() / std::numbers::pi);
}

}  // namespace kset
