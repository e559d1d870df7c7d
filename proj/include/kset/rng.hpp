#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace kset {

/// SplitMix64 finalizer. Used to seed streams and to hash (seed, stream) keys.
std::uint64_t splitmix64(std::uint64_t& state) noexcept;

/// xoshiro256** generator, seeded through SplitMix64.
///
/// Every Monte Carlo trial gets its own stream keyed by (seed, stream index),
/// so trials can run on any thread in any order and still draw the same
/// numbers. The bit pattern produced for a given key is part of the
/// reproducibility contract: do not change the algorithm or the key mixing
/// without bumping the output schema version.
class Xoshiro256 {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256(std::uint64_t seed, std::uint64_t stream = 0) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept;

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() noexcept;

  /// Uniform integer in [0, bound) via Lemire's multiply-and-reject method.
  /// bound must be >= 1.
  std::uint64_t below(std::uint64_t bound) noexcept;

 private:
  std::array<std::uint64_t, 4> s_{};
};

}  // namespace kset
