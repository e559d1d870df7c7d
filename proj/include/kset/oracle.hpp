#pragma once

#include <cstdint>

#include "kset/estimate.hpp"
#include "kset/rational.hpp"

namespace kset::oracle {

/// Largest k^c the enumeration oracle will walk.
inline constexpr std::uint64_t kEnumerationBudget = 10'000'000;
/// Largest n the binomial summation oracle will expand.
inline constexpr std::int64_t kSummationBudget = 100'000;

/// Walks every one of the k^c equally likely ways c covering nodes can pick
/// their sub-network, counts the distinct sub-networks used in each, and
/// returns the exact mean fraction of the cycle the point is watched:
/// (sum of distinct counts) / (k^c * k).
///
/// The outcome space is split across OpenMP threads. The per-outcome counts
/// are integers, so the result is identical for any thread count.
ExactRational enumerate_point_coverage(std::int64_t c, std::int64_t k);

/// Single-threaded odometer walk of the same outcome space. Kept as the
/// reference for the parallel kernel.
ExactRational enumerate_point_coverage_serial(std::int64_t c, std::int64_t k);

/// Coverage intensity as the explicit expectation over the Binomial(n, q)
/// number of covering nodes, with binomial weights taken from log-gamma
/// differences so n in the thousands does not overflow.
double binomial_network_coverage(double q, std::int64_t n, std::int64_t k);

/// Monte Carlo estimate of point coverage: draws `trials` assignment vectors
/// of length c and averages (distinct sub-networks used) / k.
/// Deterministic for a fixed seed.
CoverageEstimate sample_point_coverage(std::int64_t c, std::int64_t k, std::int64_t trials,
                                       std::uint64_t seed);

}  // namespace kset::oracle
