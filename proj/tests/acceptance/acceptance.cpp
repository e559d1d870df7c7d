// Acceptance gate: one PASS/FAIL line per criterion, exit status 0 iff all
// gating criteria pass.

#include <fmt/format.h>
#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "kset/geometry.hpp"
#include "kset/model.hpp"
#include "kset/oracle.hpp"
#include "kset/planner.hpp"
#include "kset/sim.hpp"

namespace {

using namespace kset;

struct Outcome {
  bool passed = false;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string title;
  double time_limit_s;  // <= 0 means no stated limit
  std::function<Outcome()> check;
  bool gating = true;
};

int shell_exit_code(const std::string& command) {
  const int status = std::system(command.c_str());
  if (status == -1 || !WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Outcome point_enumeration_exact() {
  int cells = 0, failures = 0;
  for (std::int64_t c = 0; c <= 8; ++c) {
    for (std::int64_t k = 1; k <= 4; ++k) {
      const ExactRational expected = ExactRational(1) - pow(ExactRational(k - 1, k), static_cast<unsigned>(c));
      ++cells;
      if (!(oracle::enumerate_point_coverage(c, k) == expected)) ++failures;
    }
  }
  return {failures == 0, fmt::format("{} cells, {} mismatches", cells, failures)};
}

Outcome network_summation_agreement() {
  int cells = 0, failures = 0;
  double worst = 0.0;
  for (double q : {0.0, 0.003, 0.1, 0.5, 1.0}) {
    for (std::int64_t k = 1; k <= 6; ++k) {
      for (std::int64_t n = 1; n <= 200; ++n) {
        const double diff =
            std::fabs(network_coverage_intensity(q, n, k) - oracle::binomial_network_coverage(q, n, k));
        worst = std::max(worst, diff);
        ++cells;
        if (!(diff <= 1e-12)) ++failures;
      }
    }
  }
  return {failures == 0, fmt::format("{} cells, {} over 1e-12, worst |diff| = {:.3g}", cells, failures, worst)};
}

Outcome forest_coverage_level() {
  const double cov = forest_coverage_intensity(1606, 4);
  return {cov >= 0.700 && cov <= 0.705, fmt::format("coverage(n=1606, k=4) = {:.6f}, required [0.700, 0.705]", cov)};
}

Outcome forest_subset_update() {
  const auto plan = planner::max_subsets(kForestQ, 1606, 0.9);
  return {plan.bound_value == 2, fmt::format("k_max = {} (closed form {:.4f})", plan.bound_value, plan.closed_form)};
}

Outcome forest_node_bound() {
  const auto plan = planner::min_nodes(kForestQ, 4, 0.7);
  const auto& b = plan.binding_check;
  const bool bound_ok = plan.bound_value == 1605 || plan.bound_value == 1606;
  const bool binding_ok = b.coverage_at_bound >= 0.7 && b.coverage_at_adjacent && *b.coverage_at_adjacent < 0.7;

  std::ostringstream out, err;
  cli::run({"plan", "nodes", "--profile", "forest", "--k", "4", "--t", "0.7"}, out, err);
  const std::string report = out.str();
  const bool note_ok = report.find("1606 nodes") != std::string::npos &&
                       report.find("closed-form ceiling is 1605") != std::string::npos;
  return {bound_ok && binding_ok && note_ok,
          fmt::format("n_min = {}, coverage {:.6f} at bound, {:.6f} at {}; report notes 1606 vs 1605: {}",
                      plan.bound_value, b.coverage_at_bound, b.coverage_at_adjacent.value_or(NAN),
                      b.adjacent.value_or(0), note_ok ? "yes" : "no")};
}

Outcome planner_binding_grid() {
  int cells = 0, failures = 0;
  for (double q : {0.003, 0.01, 0.1}) {
    for (std::int64_t k = 1; k <= 6; ++k) {
      for (double t : {0.5, 0.7, 0.9, 0.99}) {
        const auto n = planner::min_nodes(q, k, t).bound_value;
        ++cells;
        if (!(network_coverage_intensity(q, n, k) >= t && (n == 1 || network_coverage_intensity(q, n - 1, k) < t))) {
          ++failures;
        }
        const auto k_max = planner::max_subsets(q, n, t).bound_value;
        ++cells;
        if (!(network_coverage_intensity(q, n, k_max) >= t && network_coverage_intensity(q, n, k_max + 1) < t)) {
          ++failures;
        }
      }
    }
    for (std::int64_t n : {1, 10, 100, 1000, 1606, 5000}) {
      for (double t : {0.5, 0.7, 0.9, 0.99}) {
        if (network_coverage_intensity(q, n, 1) < t) continue;
        const auto k_max = planner::max_subsets(q, n, t).bound_value;
        ++cells;
        if (!(network_coverage_intensity(q, n, k_max) >= t && network_coverage_intensity(q, n, k_max + 1) < t)) {
          ++failures;
        }
      }
    }
  }
  return {failures == 0, fmt::format("{} bound certifications, {} failures", cells, failures)};
}

// Simulator matrix against a baseline; at most one marginal cell may be
// retried once with a second fixed seed.
Outcome simulator_matrix(const std::function<double(const FieldSpec&, std::int64_t, std::int64_t, std::int64_t)>& baseline) {
  constexpr std::uint64_t kPrimarySeed = 0;
  constexpr std::uint64_t kRetrySeed = 1;
  constexpr std::int64_t kTrials = 400;
  constexpr std::int64_t kGrid = 50;

  struct Cell {
    FieldSpec field;
    std::int64_t n, k;
    double z;
  };
  std::vector<Cell> failed;
  int cells = 0;
  double worst = 0.0;
  for (double r : {10.0, 30.0}) {
    for (std::int64_t n : {50, 200}) {
      for (std::int64_t k : {1, 2, 4}) {
        const FieldSpec field{100.0, 100.0, r};
        const auto est = sim::estimate_network_coverage(field, n, k, {kTrials, kGrid, kPrimarySeed});
        const double deviation = std::fabs(est.mean - baseline(field, n, k, kGrid));
        // With zero sample variance the mean cannot resolve differences finer
        // than one grid point in one slot of one trial.
        const double resolution = 1.0 / static_cast<double>(k * kGrid * kGrid * kTrials);
        const double z = est.std_error > 0 ? deviation / est.std_error : (deviation > resolution ? INFINITY : 0.0);
        worst = std::max(worst, z);
        ++cells;
        if (z > 3.0) failed.push_back({field, n, k, z});
      }
    }
  }
  bool passed = failed.empty();
  std::string retry;
  if (failed.size() == 1) {
    const Cell& c = failed.front();
    const auto est = sim::estimate_network_coverage(c.field, c.n, c.k, {kTrials, kGrid, kRetrySeed});
    const double deviation = std::fabs(est.mean - baseline(c.field, c.n, c.k, kGrid));
    passed = deviation <= 3.0 * est.std_error ||
             (est.std_error == 0.0 && deviation <= 1.0 / static_cast<double>(c.k * kGrid * kGrid * kTrials));
    retry = fmt::format("; retry r={} n={} k={} with seed {}: {}", c.field.sensing_radius, c.n, c.k, kRetrySeed,
                        passed ? "ok" : "still outside");
  }
  std::string failures;
  for (const auto& c : failed) failures += fmt::format(" (r={},n={},k={}: {:.1f} se)", c.field.sensing_radius, c.n, c.k, c.z);
  return {passed, fmt::format("{} cells, {} outside 3 se, worst {:.2f} se{}{}", cells, failed.size(), worst,
                              failures, retry)};
}

Outcome simulator_vs_uniform_q() {
  return simulator_matrix([](const FieldSpec& f, std::int64_t n, std::int64_t k, std::int64_t grid) {
    return network_coverage_intensity(effective_coverage_probability(f, grid), n, k);
  });
}

Outcome simulator_vs_grid_expectation() {
  return simulator_matrix([](const FieldSpec& f, std::int64_t n, std::int64_t k, std::int64_t grid) {
    return sim::expected_grid_coverage(f, n, k, grid);
  });
}

Outcome cli_determinism() {
  const auto dir = std::filesystem::temp_directory_path() / "kset_acceptance";
  std::filesystem::create_directories(dir);
  const std::string cli = KSET_CLI;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"simulate", "simulate --profile forest --n 200 --k 4 --trials 200 --seed 9 --format json"},
      {"sweep", "sweep --profile forest --n-values 50,200 --k-values 1:4 --simulate --trials 50 --seed 3"},
  };
  bool passed = true;
  std::string detail;
  for (const auto& [name, args] : commands) {
    const auto a = dir / (name + "_a.out"), b = dir / (name + "_b.out");
    const int ca = shell_exit_code(fmt::format("\"{}\" {} --output \"{}\"", cli, args, a.string()));
    const int cb = shell_exit_code(fmt::format("\"{}\" {} --output \"{}\"", cli, args, b.string()));
    const std::string sa = slurp(a), sb = slurp(b);
    const bool same = ca == 0 && cb == 0 && !sa.empty() && sa == sb;
    passed = passed && same;
    detail += fmt::format("{}{}: {} ({} bytes)", detail.empty() ? "" : "; ", name, same ? "identical" : "DIFFER",
                          sa.size());
  }
  std::filesystem::remove_all(dir);
  return {passed, detail};
}

Outcome negative_control() {
  const int code = shell_exit_code(fmt::format("\"{}\" verify > /dev/null", KSET_FAULTY_CLI));
  return {code == 1, fmt::format("fault-injected verify exit code {} (expected 1)", code)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"C1", "point coverage enumeration is exact", 10, point_enumeration_exact},
      {"C2", "network closed form matches binomial summation", 30, network_summation_agreement},
      {"C3", "forest coverage at n=1606, k=4", 0, forest_coverage_level},
      {"C4", "forest sub-network bound at n=1606, t=0.9", 0, forest_subset_update},
      {"C5", "forest node bound at k=4, t=0.7 with published figure", 0, forest_node_bound},
      {"C6", "planner bounds are tight on the design grid", 10, planner_binding_grid},
      {"C7", "simulator vs 1-(1-q_eff/k)^n", 60, simulator_vs_uniform_q},
      {"C7b", "simulator vs exact border-aware grid expectation (supplementary)", 60, simulator_vs_grid_expectation,
       false},
      {"C8", "simulate and sweep are byte-deterministic", 0, cli_determinism},
      {"C9", "fault-injected model fails verify", 0, negative_control},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome = c.check();
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && seconds >= c.time_limit_s) {
      outcome.passed = false;
      outcome.detail += fmt::format("; runtime limit {} s exceeded", c.time_limit_s);
    }
    if (!outcome.passed && c.gating) ++failed;
    std::printf("[%s] %-4s %s: %s (%.2f s)%s\n", outcome.passed ? "PASS" : "FAIL", c.id.c_str(), c.title.c_str(),
                outcome.detail.c_str(), seconds, c.gating ? "" : " [informational]");
  }
  std::printf("%d gating criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
