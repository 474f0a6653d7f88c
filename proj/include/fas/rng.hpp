#pragma once

#include <array>
#include <cstdint>

#include "fas/numerics.hpp"

namespace fas {

/// Mixes two 64-bit keys into one stream identifier (SplitMix64 finalizer).
std::uint64_t stream_key(std::uint64_t a, std::uint64_t b);

// xoshiro256** seeded from (seed, stream) through SplitMix64. The generator
// only uses integer arithmetic, so the raw word sequence is identical on
// every platform; uniform and Gaussian draws are derived from it with
// IEEE-exact operations plus one std::log per Gaussian pair.
//
// Instances are single-owner. Parallel code derives one instance per task
// via SeededRng(seed, stream_key(...)) instead of sharing.
class SeededRng {
 public:
  SeededRng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream() const noexcept { return stream_; }

  std::uint64_t next_u64();
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi);
  /// Standard normal (Marsaglia polar method; pairs are cached).
  double normal();
  /// Circularly symmetric complex Gaussian with E|z|^2 = variance.
  cplx complex_normal(double variance = 1.0);

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::array<std::uint64_t, 4> state_{};
  double cached_normal_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace fas
