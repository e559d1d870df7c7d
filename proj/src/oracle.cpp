#include "kset/oracle.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "kset/errors.hpp"
#include "kset/rng.hpp"

namespace kset::oracle {

using detail::require;

namespace {

// k^c, or 0 if it exceeds the enumeration budget.
std::uint64_t outcome_count(std::int64_t c, std::int64_t k) {
  require(k >= 1, "k must be >= 1");
  require(c >= 0, "c must be >= 0");
  std::uint64_t total = 1;
  for (std::int64_t i = 0; i < c && k > 1; ++i) {
    total *= static_cast<std::uint64_t>(k);
    if (total > kEnumerationBudget) {
      throw BudgetExceeded("enumeration budget exceeded: k^c > " + std::to_string(kEnumerationBudget),
                           kEnumerationBudget);
    }
  }
  return total;
}

ExactRational to_coverage(std::uint64_t distinct_sum, std::uint64_t outcomes, std::int64_t k) {
  return ExactRational(BigInt(distinct_sum), BigInt(outcomes) * BigInt(k));
}

}  // namespace

ExactRational enumerate_point_coverage(std::int64_t c, std::int64_t k) {
  const std::uint64_t outcomes = outcome_count(c, k);
  const auto subsets = static_cast<std::uint64_t>(k);
  constexpr std::uint64_t kChunk = 1u << 14;
  const auto chunks = static_cast<std::int64_t>((outcomes + kChunk - 1) / kChunk);
  std::uint64_t distinct_sum = 0;

#pragma omp parallel reduction(+ : distinct_sum)
  {
    std::vector<std::uint64_t> digits(static_cast<std::size_t>(c));
    std::vector<std::uint32_t> occupancy(static_cast<std::size_t>(k), 0);
#pragma omp for schedule(dynamic)
    for (std::int64_t chunk = 0; chunk < chunks; ++chunk) {
      const std::uint64_t first = static_cast<std::uint64_t>(chunk) * kChunk;
      const std::uint64_t last = std::min(outcomes, first + kChunk);

      // Decode the chunk's first outcome in base k, least significant node first.
      std::uint64_t rest = first;
      std::uint64_t distinct = 0;
      for (auto& d : digits) {
        d = rest % subsets;
        rest /= subsets;
        if (occupancy[d]++ == 0) ++distinct;
      }
      for (std::uint64_t idx = first; idx < last; ++idx) {
        distinct_sum += distinct;
        for (auto& d : digits) {
          const std::uint64_t to = (d + 1 == subsets) ? 0 : d + 1;
          if (--occupancy[d] == 0) --distinct;
          if (occupancy[to]++ == 0) ++distinct;
          d = to;
          if (to != 0) break;
        }
      }
      for (auto d : digits) occupancy[d] = 0;
    }
  }
  return to_coverage(distinct_sum, outcomes, k);
}

ExactRational enumerate_point_coverage_serial(std::int64_t c, std::int64_t k) {
  const std::uint64_t outcomes = outcome_count(c, k);
  // Odometer over assignment vectors with a live occupancy count per subset.
  std::vector<std::int64_t> digits(static_cast<std::size_t>(c), 0);
  std::vector<std::int64_t> occupancy(static_cast<std::size_t>(k), 0);
  std::uint64_t distinct = c > 0 ? 1 : 0;
  occupancy[0] = c;

  std::uint64_t distinct_sum = 0;
  for (std::uint64_t visited = 0; visited < outcomes; ++visited) {
    distinct_sum += distinct;
    for (std::size_t pos = 0; pos < digits.size(); ++pos) {
      const std::int64_t from = digits[pos];
      const std::int64_t to = (from + 1 == k) ? 0 : from + 1;
      if (--occupancy[static_cast<std::size_t>(from)] == 0) --distinct;
      if (occupancy[static_cast<std::size_t>(to)]++ == 0) ++distinct;
      digits[pos] = to;
      if (to != 0) break;  // no carry
    }
  }
  return to_coverage(distinct_sum, outcomes, k);
}

double binomial_network_coverage(double q, std::int64_t n, std::int64_t k) {
  require(q >= 0.0 && q <= 1.0, "q must lie in [0, 1]");
  require(n >= 1, "n must be >= 1");
  require(k >= 1, "k must be >= 1");
  if (n > kSummationBudget) {
    throw BudgetExceeded("summation budget exceeded: n > " + std::to_string(kSummationBudget),
                         static_cast<unsigned long long>(kSummationBudget));
  }

  // Point coverage given c covering nodes, by repeated multiplication of the
  // per-node miss probability: deliberately not the model's log1p/exp route.
  const double miss = 1.0 - 1.0 / static_cast<double>(k);
  auto point_coverage = [&](std::int64_t c) {
    double all_miss = 1.0;
    for (std::int64_t i = 0; i < c; ++i) all_miss *= miss;
    return 1.0 - all_miss;
  };

  // Degenerate q puts all binomial mass on one count.
  if (q == 0.0) return point_coverage(0);
  if (q == 1.0) return point_coverage(n);

  const double log_q = std::log(q);
  const double log_not_q = std::log1p(-q);
  const double log_n_fact = std::lgamma(static_cast<double>(n) + 1.0);

  double sum = 0.0;
  double comp = 0.0;
  double all_miss = 1.0;
  for (std::int64_t c = 0; c <= n; ++c) {
    const double log_weight = log_n_fact - std::lgamma(static_cast<double>(c) + 1.0) -
                              std::lgamma(static_cast<double>(n - c) + 1.0) +
                              static_cast<double>(c) * log_q + static_cast<double>(n - c) * log_not_q;
    const double term = std::exp(log_weight) * (1.0 - all_miss);
    const double t = sum + term;
    comp += (std::fabs(sum) >= std::fabs(term)) ? (sum - t) + term : (term - t) + sum;
    sum = t;
    all_miss *= miss;
  }
  return sum + comp;
}

CoverageEstimate sample_point_coverage(std::int64_t c, std::int64_t k, std::int64_t trials,
                                       std::uint64_t seed) {
  require(c >= 0, "c must be >= 0");
  require(k >= 1, "k must be >= 1");
  require(trials >= 1, "trials must be >= 1");

  Xoshiro256 rng(seed);
  std::vector<double> samples(static_cast<std::size_t>(trials));
  std::vector<std::int64_t> stamp(static_cast<std::size_t>(k), -1);
  for (std::int64_t t = 0; t < trials; ++t) {
    std::int64_t distinct = 0;
    for (std::int64_t node = 0; node < c; ++node) {
      const auto subset = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(k)));
      if (stamp[subset] != t) {
        stamp[subset] = t;
        ++distinct;
      }
    }
    samples[static_cast<std::size_t>(t)] = static_cast<double>(distinct) / static_cast<double>(k);
  }
  return summarize_trials(samples);
}

}  // namespace kset::oracle
