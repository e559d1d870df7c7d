#include <vector>

#include "kset/sim.hpp"
#include "sim_internal.hpp"

namespace kset::sim {

CoverageEstimate estimate_network_coverage_serial(const FieldSpec& field, std::int64_t n, std::int64_t k,
                                                  const SimConfig& cfg) {
  internal::validate(field, n, k);
  internal::validate(cfg);
  std::vector<double> samples(static_cast<std::size_t>(cfg.trials));
  for (std::int64_t t = 0; t < cfg.trials; ++t) {
    const Deployment d = deploy(field, n, k, cfg.seed, static_cast<std::uint64_t>(t));
    std::uint64_t total = 0;
    for (std::int64_t j = 0; j < cfg.sample_grid; ++j) {
      for (std::int64_t i = 0; i < cfg.sample_grid; ++i) {
        const Point p{cell_center(i, field.width, cfg.sample_grid), cell_center(j, field.height, cfg.sample_grid)};
        total += static_cast<std::uint64_t>(covering_subset_count(d, k, p, field.sensing_radius));
      }
    }
    samples[static_cast<std::size_t>(t)] = internal::spatial_mean(total, k, cfg.sample_grid);
  }
  return summarize_trials(samples);
}

}  // namespace kset::sim
