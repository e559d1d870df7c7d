#include "verify_suite.hpp"

#include <fmt/format.h>

#include <cmath>
#include <functional>

#include "kset/errors.hpp"
#include "kset/model.hpp"
#include "kset/oracle.hpp"
#include "kset/planner.hpp"

namespace kset::cli {

namespace {

class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++result_.cells;
    if (ok) return;
    if (result_.failures++ == 0) result_.first_failure = describe();
  }

  CheckResult done() { return std::move(result_); }

 private:
  CheckResult result_;
};

constexpr double kQGrid[] = {0.003, 0.01, 0.1};
constexpr double kTGrid[] = {0.5, 0.7, 0.9, 0.99};
constexpr std::int64_t kNGrid[] = {1, 10, 100, 1000, 1606, 5000};

CheckResult enumeration_vs_rational() {
  Check check("point_enumeration_exact");
  for (std::int64_t k = 1; k <= 4; ++k) {
    for (std::int64_t c = 0; c <= 8; ++c) {
      const ExactRational exact = ExactRational(1) - pow(ExactRational(k - 1, k), static_cast<unsigned>(c));
      const ExactRational enumerated = oracle::enumerate_point_coverage(c, k);
      check.expect(enumerated == exact, [&] {
        return fmt::format("c={} k={}: enumerated {} != {}", c, k, enumerated.to_string(), exact.to_string());
      });
    }
  }
  return check.done();
}

CheckResult model_vs_enumeration() {
  Check check("point_closed_form");
  for (std::int64_t k = 1; k <= 4; ++k) {
    for (std::int64_t c = 0; c <= 8; ++c) {
      const double exact = oracle::enumerate_point_coverage(c, k).to_double();
      const double model = point_coverage_intensity(c, k);
      check.expect(std::fabs(model - exact) <= 1e-14, [&] {
        return fmt::format("c={} k={}: closed form {:.17g} vs exact {:.17g}", c, k, model, exact);
      });
    }
  }
  return check.done();
}

CheckResult network_vs_binomial() {
  Check check("network_binomial_sum");
  for (double q : {0.0, 0.003, 0.1, 0.5, 1.0}) {
    for (std::int64_t k = 1; k <= 6; ++k) {
      for (std::int64_t n = 1; n <= 200; ++n) {
        const double model = network_coverage_intensity(q, n, k);
        const double summed = oracle::binomial_network_coverage(q, n, k);
        check.expect(std::fabs(model - summed) <= 1e-12, [&] {
          return fmt::format("q={} n={} k={}: closed form {:.17g} vs sum {:.17g}", q, n, k, model, summed);
        });
      }
    }
  }
  return check.done();
}

CheckResult min_nodes_binding() {
  Check check("min_nodes_binding");
  for (double q : kQGrid) {
    for (std::int64_t k = 1; k <= 6; ++k) {
      for (double t : kTGrid) {
        const auto plan = planner::min_nodes(q, k, t);
        const std::int64_t n = plan.bound_value;
        const bool at_bound = network_coverage_intensity(q, n, k) >= t;
        const bool below = n == 1 || network_coverage_intensity(q, n - 1, k) < t;
        check.expect(at_bound && below, [&] { return fmt::format("q={} k={} t={}: n_min={}", q, k, t, n); });
      }
    }
  }
  return check.done();
}

CheckResult max_subsets_binding() {
  Check check("max_subsets_binding");
  for (double q : kQGrid) {
    for (std::int64_t n : kNGrid) {
      for (double t : kTGrid) {
        if (network_coverage_intensity(q, n, 1) < t) continue;  // infeasible cell
        const auto plan = planner::max_subsets(q, n, t);
        const std::int64_t k = plan.bound_value;
        const bool at_bound = network_coverage_intensity(q, n, k) >= t;
        const bool above = network_coverage_intensity(q, n, k + 1) < t;
        check.expect(at_bound && above, [&] { return fmt::format("q={} n={} t={}: k_max={}", q, n, t, k); });
      }
    }
  }
  return check.done();
}

CheckResult bound_duality() {
  Check check("bound_duality");
  for (double q : kQGrid) {
    for (std::int64_t k = 1; k <= 6; ++k) {
      for (double t : kTGrid) {
        const std::int64_t n = planner::min_nodes(q, k, t).bound_value;
        const std::int64_t k_max = planner::max_subsets(q, n, t).bound_value;
        check.expect(k_max >= k, [&] {
          return fmt::format("q={} k={} t={}: n_min={} but k_max({})={}", q, k, t, n, n, k_max);
        });
      }
    }
  }
  return check.done();
}

CheckResult forest_design_figures() {
  Check check("forest_design_figures");
  const double cov = forest_coverage_intensity(1606, 4);
  check.expect(cov >= 0.700 && cov <= 0.705, [&] { return fmt::format("coverage(1606, 4) = {:.6f}", cov); });
  const auto nodes = planner::min_nodes(kForestQ, 4, 0.7).bound_value;
  check.expect(nodes == 1605 || nodes == 1606, [&] { return fmt::format("n_min(k=4, t=0.7) = {}", nodes); });
  const auto subsets = planner::max_subsets(kForestQ, 1606, 0.9).bound_value;
  check.expect(subsets == 2, [&] { return fmt::format("k_max(n=1606, t=0.9) = {}", subsets); });
  return check.done();
}

}  // namespace

std::vector<CheckResult> run_verification_suite() {
  return {enumeration_vs_rational(), model_vs_enumeration(), network_vs_binomial(),
          min_nodes_binding(),       max_subsets_binding(),  bound_duality(),
          forest_design_figures()};
}

}  // namespace kset::cli
