#include "config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string_view>

#include "kset/errors.hpp"
#include "kset/model.hpp"

namespace kset::cli {

namespace {

template <typename T>
void take(std::optional<T>& dst, const std::optional<T>& src) {
  if (src) dst = src;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw InvalidArgument("config key '" + std::string(key) + "' has invalid value '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

RunConfig merge(const RunConfig& base, const RunConfig& over) {
  RunConfig out = base;
  take(out.profile, over.profile);
  take(out.q, over.q);
  take(out.t, over.t);
  take(out.width, over.width);
  take(out.height, over.height);
  take(out.radius, over.radius);
  take(out.c, over.c);
  take(out.n, over.n);
  take(out.k, over.k);
  take(out.trials, over.trials);
  take(out.grid, over.grid);
  take(out.threads, over.threads);
  take(out.seed, over.seed);
  take(out.format, over.format);
  take(out.n_values, over.n_values);
  take(out.k_values, over.k_values);
  return out;
}

RunConfig parse_config_text(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw InvalidArgument("config line " + std::to_string(line_no) + " is not key=value");
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));

    if (key == "profile") cfg.profile = std::string(value);
    else if (key == "format") cfg.format = std::string(value);
    else if (key == "n-values") cfg.n_values = std::string(value);
    else if (key == "k-values") cfg.k_values = std::string(value);
    else if (key == "q") cfg.q = parse_number<double>(key, value);
    else if (key == "t") cfg.t = parse_number<double>(key, value);
    else if (key == "width") cfg.width = parse_number<double>(key, value);
    else if (key == "height") cfg.height = parse_number<double>(key, value);
    else if (key == "radius") cfg.radius = parse_number<double>(key, value);
    else if (key == "c") cfg.c = parse_number<std::int64_t>(key, value);
    else if (key == "n") cfg.n = parse_number<std::int64_t>(key, value);
    else if (key == "k") cfg.k = parse_number<std::int64_t>(key, value);
    else if (key == "trials") cfg.trials = parse_number<std::int64_t>(key, value);
    else if (key == "grid") cfg.grid = parse_number<std::int64_t>(key, value);
    else if (key == "threads") cfg.threads = parse_number<std::int64_t>(key, value);
    else if (key == "seed") cfg.seed = parse_number<std::uint64_t>(key, value);
    else throw InvalidArgument("unknown config key '" + std::string(key) + "'");
  }
  return cfg;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

RunConfig apply_profile(const RunConfig& cfg) {
  if (!cfg.profile) return cfg;
  if (*cfg.profile != "forest") throw InvalidArgument("unknown profile '" + *cfg.profile + "' (known: forest)");
  RunConfig preset;
  preset.q = kForestQ;
  preset.width = 100.0;
  preset.height = 100.0;
  preset.radius = 30.0;
  return merge(preset, cfg);
}

Format parse_format(const std::string& name) {
  if (name == "plain") return Format::Plain;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw InvalidArgument("format must be one of plain, csv, json");
}

}  // namespace kset::cli
