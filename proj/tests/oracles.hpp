#pragma once

// Reference implementations used only by the tests. They follow different
// routes from the library code so agreement is meaningful.

#include <array>
#include <cmath>
#include <cstdlib>
#include <vector>

namespace oracle {

inline double fact(long n) { return n < 0 ? NAN : std::tgamma(static_cast<double>(n) + 1.0); }

/// Wigner 3j symbol, all arguments doubled (J = 2j, M = 2m). Zero when the
/// selection rules fail.
inline double threej(long j1, long j2, long j3, long m1, long m2, long m3) {
  if (m1 + m2 + m3 != 0) return 0;
  if (std::abs(m1) > j1 || std::abs(m2) > j2 || std::abs(m3) > j3) return 0;
  if ((j1 + m1) % 2 || (j2 + m2) % 2 || (j3 + m3) % 2) return 0;
  if (j3 < std::abs(j1 - j2) || j3 > j1 + j2 || (j1 + j2 + j3) % 2) return 0;
  auto h = [](long x) { return x / 2; };
  const double delta = fact(h(j1 + j2 - j3)) * fact(h(j1 - j2 + j3)) * fact(h(-j1 + j2 + j3)) / fact(h(j1 + j2 + j3) + 1);
  const double pre = std::sqrt(delta * fact(h(j1 + m1)) * fact(h(j1 - m1)) * fact(h(j2 + m2)) * fact(h(j2 - m2)) *
                               fact(h(j3 + m3)) * fact(h(j3 - m3)));
  double sum = 0;
  for (long k = 0; k <= j1 + j2 + j3; ++k) {
    const long args[6] = {k, h(j3 - j2 + m1) + k, h(j3 - j1 - m2) + k, h(j1 + j2 - j3) - k, h(j1 - m1) - k,
                          h(j2 + m2) - k};
    bool ok = true;
    double den = 1;
    for (long a : args) {
      if (a < 0) {
        ok = false;
        break;
      }
      den *= fact(a);
    }
    if (ok) sum += (k % 2 ? -1.0 : 1.0) / den;
  }
  const long phase = h(j1 - j2 - m3);
  return (phase % 2 ? -1.0 : 1.0) * pre * sum;
}

/// 6j symbol {j1 j2 j3; j4 j5 j6} (doubled) as a sum over magnetic quantum
/// numbers of four 3j symbols.
inline double sixj_from_3j(long j1, long j2, long j3, long j4, long j5, long j6) {
  double total = 0;
  for (long m1 = -j1; m1 <= j1; m1 += 2)
    for (long m2 = -j2; m2 <= j2; m2 += 2) {
      const long m3 = -m1 - m2;
      if (std::abs(m3) > j3) continue;
      for (long m4 = -j4; m4 <= j4; m4 += 2)
        for (long m5 = -j5; m5 <= j5; m5 += 2) {
          const long m6 = m5 - m1;  // from (j1 j5 j6; m1 -m5 m6)
          if (std::abs(m6) > j6) continue;
          const double w = threej(j1, j2, j3, -m1, -m2, -m3) * threej(j1, j5, j6, m1, -m5, m6) *
                           threej(j4, j2, j6, m4, m2, -m6) * threej(j4, j5, j3, -m4, m5, m3);
          if (w == 0) continue;
          const long s = (j1 - m1 + j2 - m2 + j3 - m3 + j4 - m4 + j5 - m5 + j6 - m6) / 2;
          total += (s % 2 ? -1.0 : 1.0) * w;
        }
    }
  return total;
}

/// Number of semistandard tableaux of shape (p, q) with content mu, by
/// brute-force enumeration of row fillings.
inline long kostka(long p, long q, const std::array<long, 3>& mu) {
  long count = 0;
  // Row 1 holds x1 ones, x2 twos, x3 threes; row 2 holds y2 twos and y3 threes
  // (a 1 cannot sit in row 2 of a semistandard tableau).
  for (long x1 = 0; x1 <= p; ++x1)
    for (long x2 = 0; x1 + x2 <= p; ++x2) {
      const long x3 = p - x1 - x2;
      for (long y2 = 0; y2 <= q; ++y2) {
        const long y3 = q - y2;
        if (x1 != mu[0] || x2 + y2 != mu[1] || x3 + y3 != mu[2]) continue;
        std::vector<int> top, bottom;
        top.insert(top.end(), static_cast<std::size_t>(x1), 1);
        top.insert(top.end(), static_cast<std::size_t>(x2), 2);
        top.insert(top.end(), static_cast<std::size_t>(x3), 3);
        bottom.insert(bottom.end(), static_cast<std::size_t>(y2), 2);
        bottom.insert(bottom.end(), static_cast<std::size_t>(y3), 3);
        bool ok = true;
        for (std::size_t i = 0; i < bottom.size(); ++i)
          if (bottom[i] <= top[i]) ok = false;
        if (ok) ++count;
      }
    }
  return count;
}

}  // namespace oracle
