#pragma once

// Seeded sampling on top of std::mt19937_64. The mappings from raw 64-bit
// words to doubles, normals and bounded integers are spelled out here so a
// seed gives the same samples with every standard library.

#include <cmath>
#include <cstdint>
#include <random>

#include "regge/exact.hpp"

namespace regge {

class Rng {
 public:
  static constexpr const char* kName = "mt19937_64";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal by the Box-Muller transform.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = 0;
    while (u1 == 0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * M_PI * u2;
    spare_ = r * std::sin(angle);
    has_spare_ = true;
    return r * std::cos(angle);
  }

  /// Uniform integer in [lo, hi], rejection sampling without modulo bias.
  long uniform_int(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<long>(next());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return lo + static_cast<long>(x % span);
  }

  /// n / d with d uniform in [1, max_den] and n uniform in [lo*d, hi*d].
  BigRational rational(long lo, long hi, long max_den) {
    const long d = uniform_int(1, max_den);
    const long n = uniform_int(lo * d, hi * d);
    return make_rational(n, d);
  }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0;
};

}  // namespace regge
