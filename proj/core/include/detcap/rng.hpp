#pragma once

#include <cstdint>

namespace detcap {

/// SplitMix64 generator (Steele, Lea & Flood's mixing constants).
///
/// The generator identity is part of the public contract: every seeded
/// result in this library (random matrices, random channel draws) is
/// reproducible bit-for-bit across platforms and releases.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1), 53 random bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double next_in(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

private:
  std::uint64_t state_;
};

}  // namespace detcap
