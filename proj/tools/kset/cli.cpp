#include "cli.hpp"

#include <omp.h>

#include <fmt/format.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>

#include "config.hpp"
#include "kset/errors.hpp"
#include "kset/geometry.hpp"
#include "kset/model.hpp"
#include "kset/oracle.hpp"
#include "kset/planner.hpp"
#include "kset/sim.hpp"
#include "report.hpp"
#include "verify_suite.hpp"

namespace kset::cli {

namespace {

template <typename T>
T required(const std::optional<T>& value, const char* flag) {
  if (!value) throw InvalidArgument(std::string("--") + flag + " is required");
  return *value;
}

struct Options {
  RunConfig flags;
  std::string config_path;
  std::string output_path;
  bool exact = false;
  bool oracle = false;
  bool simulate = false;
  bool match_q = false;
};

void add_io_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.flags.format, "Output format: plain, csv or json");
  cmd->add_option("--output", o.output_path, "Write the report to this file instead of stdout");
  cmd->add_option("--config", o.config_path, "Flat key=value file; flags override it");
}

void add_profile_option(CLI::App* cmd, Options& o) {
  cmd->add_option("--profile", o.flags.profile, "Named parameter preset (forest)");
}

void add_field_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--width", o.flags.width, "Field width in meters (default 100)");
  cmd->add_option("--height", o.flags.height, "Field height in meters (default 100)");
  cmd->add_option("--radius", o.flags.radius, "Sensing radius in meters (default 30)");
  cmd->add_flag("--match-q", o.match_q, "Pick the radius whose disk covers a fraction q of the field");
  cmd->add_option("--trials", o.flags.trials, "Monte Carlo trials (default 200)");
  cmd->add_option("--grid", o.flags.grid, "Sample grid cells per axis (default 50)");
  cmd->add_option("--seed", o.flags.seed, "Generator seed (default 0)");
  cmd->add_option("--threads", o.flags.threads, "OpenMP worker threads");
}

FieldSpec resolve_field(const RunConfig& cfg, bool match_q) {
  FieldSpec field{cfg.width.value_or(100.0), cfg.height.value_or(100.0), cfg.radius.value_or(30.0)};
  if (match_q) field.sensing_radius = radius_for_disk_area_q(field, required(cfg.q, "q"));
  return field;
}

sim::SimConfig resolve_sim(const RunConfig& cfg) {
  sim::SimConfig sc;
  sc.trials = cfg.trials.value_or(sc.trials);
  sc.sample_grid = cfg.grid.value_or(sc.sample_grid);
  sc.seed = cfg.seed.value_or(sc.seed);
  return sc;
}

Report point_coverage_report(const RunConfig& cfg, bool exact) {
  const auto c = required(cfg.c, "c");
  const auto k = required(cfg.k, "k");
  Report r{"point-coverage", {}, {}, {}};
  const double analytic = point_coverage_intensity(c, k);
  r.fields = {{"c", c, {}},
              {"k", k, {}},
              {"point_coverage", analytic, {}},
              {"expected_nonempty_subsets", expected_nonempty_subsets(c, k), {}}};
  if (exact) {
    const ExactRational enumerated = oracle::enumerate_point_coverage(c, k);
    r.fields.push_back({"exact", enumerated.to_string(), {}});
    r.fields.push_back({"exact_value", enumerated.to_double(), {}});
    r.fields.push_back({"difference", analytic - enumerated.to_double(), {}});
  }
  return r;
}

Report network_coverage_report(const RunConfig& cfg, bool with_oracle) {
  const auto q = required(cfg.q, "q");
  const auto n = required(cfg.n, "n");
  const auto k = required(cfg.k, "k");
  Report r{"network-coverage", {}, {}, {}};
  const double coverage = network_coverage_intensity(q, n, k);
  r.fields = {{"q", q, {}}, {"n", n, {}}, {"k", k, {}}, {"coverage", coverage, {}}};
  if (with_oracle) {
    if (n <= oracle::kSummationBudget) {
      const double summed = oracle::binomial_network_coverage(q, n, k);
      r.fields.push_back({"oracle_coverage", summed, {}});
      r.fields.push_back({"difference", coverage - summed, {}});
    } else {
      r.notes.push_back("n exceeds the summation oracle budget; oracle cross-check skipped");
    }
  }
  return r;
}

// Published design figures for the forest profile, reported next to the
// certified bounds so any disagreement is visible.
struct DesignFigure {
  double q;
  std::int64_t fixed;  // k for node plans, n for subset plans
  double t;
  std::int64_t figure;
};
constexpr DesignFigure kNodeFigures[] = {{kForestQ, 4, 0.7, 1606}};
constexpr DesignFigure kSubsetFigures[] = {{kForestQ, 1606, 0.9, 2}};

Field binding_field(const planner::BindingCheck& b) {
  Field f{"binding_check", {}, {}};
  f.children = {{"bound", b.bound, {}}, {"coverage_at_bound", b.coverage_at_bound, {}}};
  f.children.push_back({"adjacent", b.adjacent ? Value(*b.adjacent) : Value{}, {}});
  f.children.push_back({"coverage_at_adjacent", b.coverage_at_adjacent ? Value(*b.coverage_at_adjacent) : Value{}, {}});
  return f;
}

Report plan_nodes_report(const RunConfig& cfg) {
  const auto q = required(cfg.q, "q");
  const auto k = required(cfg.k, "k");
  const auto t = required(cfg.t, "t");
  const auto plan = planner::min_nodes(q, k, t);
  Report r{"plan nodes", {}, {}, {}};
  r.fields = {{"bound", std::string("n_min"), {}},
              {"q", q, {}},
              {"k", k, {}},
              {"t", t, {}},
              {"bound_value", plan.bound_value, {}},
              {"achieved_coverage", plan.achieved_coverage, {}},
              {"closed_form", plan.closed_form, {}},
              {"closed_form_ceiling", static_cast<std::int64_t>(std::ceil(plan.closed_form)), {}},
              binding_field(plan.binding_check)};
  for (const auto& fig : kNodeFigures) {
    if (fig.q == q && fig.fixed == k && fig.t == t) {
      r.notes.push_back(fmt::format(
          "published design figure for this case is {} nodes; closed-form ceiling is {}, certified bound is {}",
          fig.figure, static_cast<std::int64_t>(std::ceil(plan.closed_form)), plan.bound_value));
    }
  }
  return r;
}

Report plan_subsets_report(const RunConfig& cfg) {
  const auto q = required(cfg.q, "q");
  const auto n = required(cfg.n, "n");
  const auto t = required(cfg.t, "t");
  const auto plan = planner::max_subsets(q, n, t);
  Report r{"plan subsets", {}, {}, {}};
  r.fields = {{"bound", std::string("k_max"), {}},
              {"q", q, {}},
              {"n", n, {}},
              {"t", t, {}},
              {"bound_value", plan.bound_value, {}},
              {"achieved_coverage", plan.achieved_coverage, {}},
              {"closed_form", plan.closed_form, {}},
              {"closed_form_floor", static_cast<std::int64_t>(std::floor(plan.closed_form)), {}},
              binding_field(plan.binding_check)};
  for (const auto& fig : kSubsetFigures) {
    if (fig.q == q && fig.fixed == n && fig.t == t) {
      r.notes.push_back(fmt::format("published design figure for this case is k = {}; certified bound is {}",
                                    fig.figure, plan.bound_value));
    }
  }
  return r;
}

Report simulate_report(const RunConfig& cfg, bool match_q) {
  const auto n = required(cfg.n, "n");
  const auto k = required(cfg.k, "k");
  const FieldSpec field = resolve_field(cfg, match_q);
  const sim::SimConfig sc = resolve_sim(cfg);
  const CoverageEstimate est = sim::estimate_network_coverage(field, n, k, sc);
  const double q_eff = effective_coverage_probability(field, sc.sample_grid);
  const double analytic = network_coverage_intensity(q_eff, n, k);
  const double expected = sim::expected_grid_coverage(field, n, k, sc.sample_grid);
  // Zero sample variance: fall back to the estimator's resolution.
  const double resolution = 1.0 / (static_cast<double>(k) * static_cast<double>(sc.sample_grid * sc.sample_grid) *
                                   static_cast<double>(sc.trials));
  auto within_3_sigma = [&](double baseline) {
    const double deviation = std::fabs(est.mean - baseline);
    return est.std_error > 0.0 ? deviation <= 3.0 * est.std_error : deviation <= resolution;
  };

  Report r{"simulate", {}, {}, {}};
  r.fields = {{"width", field.width, {}},
              {"height", field.height, {}},
              {"radius", field.sensing_radius, {}},
              {"n", n, {}},
              {"k", k, {}},
              {"trials", sc.trials, {}},
              {"grid", sc.sample_grid, {}},
              {"seed", sc.seed, {}},
              {"empirical_mean", est.mean, {}},
              {"std_error", est.std_error, {}},
              {"ci95_halfwidth", est.ci95_halfwidth, {}},
              {"ci95_low", est.mean - est.ci95_halfwidth, {}},
              {"ci95_high", est.mean + est.ci95_halfwidth, {}},
              {"q_eff", q_eff, {}},
              {"analytic_coverage", analytic, {}},
              {"uniform_q_agreement", std::string(within_3_sigma(analytic) ? "PASS" : "FAIL"), {}},
              {"expected_coverage", expected, {}},
              {"deviation", std::fabs(est.mean - expected), {}},
              {"agreement", std::string(within_3_sigma(expected) ? "PASS" : "FAIL"), {}}};
  return r;
}

Report sweep_report(const RunConfig& cfg, bool simulate, bool match_q) {
  const auto n_values = parse_value_list(required(cfg.n_values, "n-values"));
  const auto k_values = parse_value_list(required(cfg.k_values, "k-values"));
  Report r{"sweep", {}, Table{"rows", {"n", "k", "q", "analytic_coverage", "empirical_mean", "std_error", "trials", "seed"}, {}}, {}};
  auto& rows = r.table->rows;
  if (simulate) {
    const FieldSpec field = resolve_field(cfg, match_q);
    for (const auto& row : sim::sweep(field, n_values, k_values, resolve_sim(cfg))) {
      rows.push_back({row.n, row.k, row.q, row.analytic_coverage, row.empirical.mean, row.empirical.std_error,
                      row.empirical.trials, row.seed});
    }
  } else {
    const double q = required(cfg.q, "q");
    for (std::int64_t n : n_values) {
      for (std::int64_t k : k_values) {
        rows.push_back({n, k, q, network_coverage_intensity(q, n, k), Value{}, Value{}, Value{}, Value{}});
      }
    }
  }
  return r;
}

Report verify_report(bool& all_passed) {
  Report r{"verify", {}, Table{"checks", {"check", "cells", "failures", "status", "first_failure"}, {}}, {}};
  all_passed = true;
  for (const auto& check : run_verification_suite()) {
    all_passed = all_passed && check.passed();
    r.table->rows.push_back({check.name, check.cells, check.failures, std::string(check.passed() ? "PASS" : "FAIL"),
                             check.first_failure});
  }
  r.fields = {{"status", std::string(all_passed ? "PASS" : "FAIL"), {}}};
  return r;
}

Report infeasible_report(const std::string& command, const Infeasible& e) {
  Report r{command, {}, {}, {}};
  r.fields = {{"status", std::string("infeasible"), {}},
              {"best_coverage", e.best_coverage(), {}},
              {"message", std::string(e.what()), {}}};
  return r;
}

bool emit(const std::string& text, const std::string& output_path, std::ostream& out, std::ostream& err) {
  if (output_path.empty()) {
    out << text;
    return true;
  }
  std::ofstream file(output_path, std::ios::binary | std::ios::trunc);
  if (file) file << text;
  if (!file) {
    err << "error: cannot write output file '" << output_path << "'\n";
    return false;
  }
  return true;
}

}  // namespace

std::vector<std::int64_t> parse_value_list(const std::string& text) {
  auto parse_int = [&](const std::string& s) -> std::int64_t {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw InvalidArgument("invalid value list '" + text + "'");
    return v;
  };

  std::vector<std::int64_t> values;
  if (const auto colon = text.find(':'); colon != std::string::npos) {
    const std::int64_t first = parse_int(text.substr(0, colon));
    const std::int64_t last = parse_int(text.substr(colon + 1));
    if (first > last) throw InvalidArgument("empty range '" + text + "'");
    for (std::int64_t v = first; v <= last; ++v) values.push_back(v);
    return values;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!piece.empty()) values.push_back(parse_int(piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (values.empty()) throw InvalidArgument("value list must not be empty");
  return values;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"k-set randomized scheduling coverage toolkit", "kset"};
  app.require_subcommand(1);
  Options o;

  auto* point = app.add_subcommand("point-coverage", "Coverage intensity of a point covered by c nodes");
  point->add_option("--c", o.flags.c, "Number of nodes covering the point");
  point->add_option("--k", o.flags.k, "Number of sub-networks");
  point->add_flag("--exact", o.exact, "Also print the exact enumeration value");
  add_io_options(point, o);

  auto* network = app.add_subcommand("network-coverage", "Network coverage intensity 1 - (1 - q/k)^n");
  network->add_option("--q", o.flags.q, "Probability that one node covers a point");
  network->add_option("--n", o.flags.n, "Number of deployed nodes");
  network->add_option("--k", o.flags.k, "Number of sub-networks");
  network->add_flag("--oracle", o.oracle, "Cross-check against the binomial summation oracle");
  add_profile_option(network, o);
  add_io_options(network, o);

  auto* plan = app.add_subcommand("plan", "Deployment design bounds");
  plan->require_subcommand(1);
  auto* plan_nodes = plan->add_subcommand("nodes", "Minimum node count for coverage >= t");
  plan_nodes->add_option("--q", o.flags.q, "Probability that one node covers a point");
  plan_nodes->add_option("--k", o.flags.k, "Number of sub-networks");
  plan_nodes->add_option("--t", o.flags.t, "Target coverage intensity in [0, 1)");
  add_profile_option(plan_nodes, o);
  add_io_options(plan_nodes, o);
  auto* plan_subsets = plan->add_subcommand("subsets", "Maximum sub-network count for coverage >= t");
  plan_subsets->add_option("--q", o.flags.q, "Probability that one node covers a point");
  plan_subsets->add_option("--n", o.flags.n, "Number of deployed nodes");
  plan_subsets->add_option("--t", o.flags.t, "Target coverage intensity in (0, 1)");
  add_profile_option(plan_subsets, o);
  add_io_options(plan_subsets, o);

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo coverage on a rectangular field");
  simulate->add_option("--n", o.flags.n, "Number of deployed nodes");
  simulate->add_option("--k", o.flags.k, "Number of sub-networks");
  simulate->add_option("--q", o.flags.q, "Coverage probability used by --match-q");
  add_field_options(simulate, o);
  add_profile_option(simulate, o);
  add_io_options(simulate, o);

  auto* verify = app.add_subcommand("verify", "Run the oracle cross-check suite");
  add_io_options(verify, o);

  auto* sweep = app.add_subcommand("sweep", "Coverage table over ranges of n and k");
  sweep->add_option("--n-values", o.flags.n_values, "n values: a:b, a,b,c or a");
  sweep->add_option("--k-values", o.flags.k_values, "k values: a:b, a,b,c or a");
  sweep->add_option("--q", o.flags.q, "Coverage probability for the analytic-only table");
  sweep->add_flag("--simulate", o.simulate, "Add empirical columns; q becomes the border-clipped q_eff");
  add_field_options(sweep, o);
  add_profile_option(sweep, o);
  add_io_options(sweep, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  std::string command;
  try {
    RunConfig cfg = o.flags;
    if (!o.config_path.empty()) cfg = merge(load_config_file(o.config_path), o.flags);
    cfg = apply_profile(cfg);
    if (cfg.threads) {
      detail::require(*cfg.threads >= 1, "threads must be >= 1");
      omp_set_num_threads(static_cast<int>(*cfg.threads));
    }
    const Format default_format = sweep->parsed() ? Format::Csv : Format::Plain;
    const Format format = cfg.format ? parse_format(*cfg.format) : default_format;

    Report report;
    int code = kExitOk;
    try {
      if (point->parsed()) {
        command = "point-coverage";
        report = point_coverage_report(cfg, o.exact);
      } else if (network->parsed()) {
        command = "network-coverage";
        report = network_coverage_report(cfg, o.oracle);
      } else if (plan_nodes->parsed()) {
        command = "plan nodes";
        report = plan_nodes_report(cfg);
      } else if (plan_subsets->parsed()) {
        command = "plan subsets";
        report = plan_subsets_report(cfg);
      } else if (simulate->parsed()) {
        command = "simulate";
        report = simulate_report(cfg, o.match_q);
      } else if (sweep->parsed()) {
        command = "sweep";
        report = sweep_report(cfg, o.simulate, o.match_q);
      } else if (verify->parsed()) {
        command = "verify";
        bool all_passed = false;
        report = verify_report(all_passed);
        if (!all_passed) code = kExitVerificationFailed;
      }
    } catch (const Infeasible& e) {
      report = infeasible_report(command, e);
      code = kExitInfeasible;
    }
    if (!emit(render(report, format), o.output_path, out, err)) return kExitUsage;
    return code;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace kset::cli
