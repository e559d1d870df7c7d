#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "report.hpp"

namespace kset::cli {

/// Parameters of one invocation. Unset fields fall back, in order, to the
/// --config file, then the named profile, then per-command defaults.
struct RunConfig {
  std::optional<std::string> profile;
  std::optional<double> q;
  std::optional<double> t;
  std::optional<double> width;
  std::optional<double> height;
  std::optional<double> radius;
  std::optional<std::int64_t> c;
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> k;
  std::optional<std::int64_t> trials;
  std::optional<std::int64_t> grid;
  std::optional<std::int64_t> threads;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> format;
  std::optional<std::string> n_values;
  std::optional<std::string> k_values;
};

/// Fields set in `over` win over those in `base`.
RunConfig merge(const RunConfig& base, const RunConfig& over);

/// Parses flat "key = value" lines; '#' starts a comment. Keys are the long
/// flag names without dashes (q, n, k, t, c, width, height, radius, trials,
/// grid, seed, threads, format, profile, n-values, k-values).
RunConfig parse_config_text(const std::string& text);
RunConfig load_config_file(const std::string& path);

/// Fills unset field geometry and q from the named profile. "forest" is a
/// 100 m x 100 m field, sensing radius 30 m, q = 0.003.
RunConfig apply_profile(const RunConfig& cfg);

Format parse_format(const std::string& name);

}  // namespace kset::cli
