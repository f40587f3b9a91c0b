#pragma once

#include <cstdint>

namespace parreg {

/// Deterministic counter-based generator: the i-th value of a stream is
/// mix64(seed + i * 0x9E3779B97F4A7C15) where mix64 is the SplitMix64
/// finalizer. Identical output on every platform; streams for unrelated
/// purposes are split by offsetting the seed.
class CounterRng {
public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = seed_ + (++counter_) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform value in [lo, hi] (inclusive); hi >= lo.
  long long uniform(long long lo, long long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(next() % span);
  }

  CounterRng split(std::uint64_t label) const {
    CounterRng child(seed_ ^ (0xD1B54A32D192ED03ull * (label + 1)));
    return child;
  }

private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

}  // namespace parreg
