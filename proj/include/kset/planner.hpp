#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace kset::planner {

/// Coverage at a planner bound and at its neighbour on the infeasible side
/// (n_min - 1, or k_max + 1). The neighbour is absent when it is not a valid
/// parameter value (n_min = 1).
struct BindingCheck {
  std::int64_t bound = 0;
  double coverage_at_bound = 0.0;
  std::optional<std::int64_t> adjacent;
  std::optional<double> coverage_at_adjacent;
};

struct PlanResult {
  std::int64_t bound_value = 0;
  double achieved_coverage = 0.0;
  BindingCheck binding_check;
  /// Unrounded closed-form bound that seeded the search.
  double closed_form = 0.0;
};

/// Least n with network coverage >= t for the given q and k.
/// Seeds from ceil(ln(1 - t) / ln(1 - q/k)) and certifies the answer by
/// evaluating the coverage at the bound and at bound - 1.
/// Throws Infeasible for t >= 1 (or q = 0 with t > 0).
PlanResult min_nodes(double q, std::int64_t k, double t);

/// Greatest k with network coverage >= t for the given q and n.
/// Seeds from floor(q / (1 - exp(ln(1 - t) / n))) and certifies at k and
/// k + 1. Throws Infeasible, carrying the k = 1 coverage, when even a single
/// always-on sub-network misses t.
PlanResult max_subsets(double q, std::int64_t n, double t);

struct CurvePoint {
  std::int64_t n = 0;
  double coverage = 0.0;
};

/// Network coverage for every n in [n_first, n_last].
std::vector<CurvePoint> coverage_curve(double q, std::int64_t k, std::int64_t n_first, std::int64_t n_last);

}  // namespace kset::planner
