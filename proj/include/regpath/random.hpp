#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "regpath/matrix.hpp"

namespace regpath {

/// Seeded random source with a fixed bit layout so sequences are identical
/// across runs and platforms.
///
/// - raw bits: std::mt19937_64 (fully specified by the standard)
/// - uniform: top 53 bits of one 64-bit draw scaled by 2^-53, redrawn on
///   exact zero, giving U in (0, 1)
/// - normal: Marsaglia polar method on u = 2U1-1, v = 2U2-1, rejecting
///   s = u^2+v^2 outside (0, 1); returns u*sqrt(-2 ln s / s) and discards
///   the companion variate, so every call starts from a fresh pair
///
/// Single-owner by design: never shared across threads. Parallel work uses
/// independent streams built from distinct seeds.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : gen_(seed), seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  /// Uniform draw in (0, 1).
  double next_uniform() {
    for (;;) {
      const double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
      if (u > 0.0) return u;
    }
  }

  /// Standard normal draw.
  double next_normal() {
    for (;;) {
      const double u = 2.0 * next_uniform() - 1.0;
      const double v = 2.0 * next_uniform() - 1.0;
      const double s = u * u + v * v;
      if (s >= 1.0 || s == 0.0) continue;
      return u * std::sqrt(-2.0 * std::log(s) / s);
    }
  }

  /// Convenience: `count` standard normal draws.
  Vector normals(std::size_t count) {
    Vector out(count);
    for (auto& x : out) x = next_normal();
    return out;
  }

 private:
  std::mt19937_64 gen_;
  std::uint64_t seed_;
};

}  // namespace regpath
