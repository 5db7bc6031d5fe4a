#pragma once

// SU(2) 6j symbols in the integer-label convention (label = 2 x spin).
//
// A symbol {a b e; c d f} is stored as SixJLabels{a, b, c, d, e, f}. Each
// column (a,c), (b,d), (e,f) holds two opposite edges of a tetrahedron and the
// faces are the triads (a,b,e), (c,d,e), (a,d,f), (b,c,f).

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <vector>

#include "regge/error.hpp"
#include "regge/exact.hpp"

namespace regge {

struct SixJLabels {
  long a = 0, b = 0, c = 0, d = 0, e = 0, f = 0;

  std::array<long, 6> as_array() const { return {a, b, c, d, e, f}; }
  static SixJLabels from_array(const std::array<long, 6>& v) { return {v[0], v[1], v[2], v[3], v[4], v[5]}; }

  long perimeter() const { return a + b + c + d; }

  friend auto operator<=>(const SixJLabels&, const SixJLabels&) = default;

  std::string to_string() const {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," +
           std::to_string(d) + "," + std::to_string(e) + "," + std::to_string(f) + ")";
  }
};

inline bool triangle_ok(long x, long y, long z) {
  if (x < 0 || y < 0 || z < 0) return false;
  return std::abs(x - y) <= z && z <= x + y && (x + y + z) % 2 == 0;
}

/// The four coupling triads in the order (abe), (cde), (adf), (bcf).
inline std::array<std::array<long, 3>, 4> triads(const SixJLabels& l) {
  return {{{l.a, l.b, l.e}, {l.c, l.d, l.e}, {l.a, l.d, l.f}, {l.b, l.c, l.f}}};
}

inline constexpr std::array<const char*, 4> kTriadNames = {"abe", "cde", "adf", "bcf"};

/// Names of the triads that fail triangle_ok; empty for a valid symbol.
inline std::vector<std::string> failing_triads(const SixJLabels& l) {
  std::vector<std::string> out;
  auto t = triads(l);
  for (std::size_t i = 0; i < t.size(); ++i)
    if (!triangle_ok(t[i][0], t[i][1], t[i][2])) out.emplace_back(kTriadNames[i]);
  return out;
}

inline bool is_valid(const SixJLabels& l) { return failing_triads(l).empty(); }

/// Square of the triangle coefficient Delta(xyz).
inline BigRational racah_delta_squared(long x, long y, long z) {
  if (!triangle_ok(x, y, z))
    throw Error(Errc::InvalidTriangle, "(" + std::to_string(x) + "," + std::to_string(y) + "," +
                                           std::to_string(z) + ") is not a coupling triad");
  BigInt num = factorial((x + y - z) / 2) * factorial((x - y + z) / 2) * factorial((-x + y + z) / 2);
  return make_rational(num, factorial((x + y + z) / 2 + 1));
}

inline SignedSqrt racah_delta(long x, long y, long z) { return SignedSqrt(1, racah_delta_squared(x, y, z)); }

/// Wigner 6j symbol, exact. Zero whenever a triad fails to couple.
inline SignedSqrt sixj(const SixJLabels& l) {
  if (!is_valid(l)) return {};
  const auto tr = triads(l);
  BigRational delta2 = 1;
  std::array<long, 4> t{};
  for (std::size_t i = 0; i < 4; ++i) {
    delta2 *= racah_delta_squared(tr[i][0], tr[i][1], tr[i][2]);
    t[i] = (tr[i][0] + tr[i][1] + tr[i][2]) / 2;
  }
  const std::array<long, 3> q = {(l.a + l.b + l.c + l.d) / 2, (l.a + l.c + l.e + l.f) / 2,
                                 (l.b + l.d + l.e + l.f) / 2};
  const long z_lo = *std::max_element(t.begin(), t.end());
  const long z_hi = *std::min_element(q.begin(), q.end());

  BigRational sum = 0;
  for (long z = z_lo; z <= z_hi; ++z) {
    BigInt den = 1;
    for (long ti : t) den *= factorial(z - ti);
    for (long qj : q) den *= factorial(qj - z);
    BigRational term = make_rational(factorial(z + 1), den);
    if (z % 2 != 0) term = -term;
    sum += term;
  }
  return SignedSqrt(sgn(sum), delta2 * sum * sum);
}

/// Recoupling coefficient U = (-1)^p sqrt((e+1)(f+1)) {a b e; c d f}.
inline SignedSqrt u_coeff(const SixJLabels& l) {
  SignedSqrt s = sixj(l);
  if (s.is_zero()) return s;
  if (l.perimeter() % 2 != 0) throw Error(Errc::OddPerimeter, "nonzero symbol with odd a+b+c+d");
  SignedSqrt scale(1, BigRational((l.e + 1) * (l.f + 1)));
  SignedSqrt u = s * scale;
  return (l.perimeter() / 2) % 2 == 0 ? u : -u;
}

/// Regge transformation (a,b,c,d,e,f) -> (p-a, p-b, p-c, p-d, e, f), p = (a+b+c+d)/2.
inline SixJLabels regge(const SixJLabels& l) {
  if (l.perimeter() % 2 != 0) throw Error(Errc::OddPerimeter, l.to_string() + " has odd a+b+c+d");
  const long p = l.perimeter() / 2;
  return {p - l.a, p - l.b, p - l.c, p - l.d, l.e, l.f};
}

using SlotPermutation = std::array<int, 6>;

/// Relabelled symbol: slot i of the result takes slot perm[i] of the input.
inline SixJLabels permute(const SixJLabels& l, const SlotPermutation& perm) {
  const auto v = l.as_array();
  std::array<long, 6> out{};
  for (std::size_t i = 0; i < 6; ++i) out[i] = v[static_cast<std::size_t>(perm[i])];
  return SixJLabels::from_array(out);
}

/// The 24 tetrahedral relabellings: any permutation of the three columns
/// combined with an even number of upper/lower swaps.
inline const std::vector<SlotPermutation>& tetrahedral_group() {
  static const std::vector<SlotPermutation> group = [] {
    // Column k holds slots (upper, lower).
    constexpr std::array<std::array<int, 2>, 3> columns = {{{0, 2}, {1, 3}, {4, 5}}};
    std::vector<SlotPermutation> g;
    std::array<int, 3> order = {0, 1, 2};
    do {
      for (int flips : {0b000, 0b011, 0b101, 0b110}) {
        SlotPermutation perm{};
        for (int k = 0; k < 3; ++k) {
          const auto& src = columns[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])];
          const auto& dst = columns[static_cast<std::size_t>(k)];
          const bool flip = (flips >> k) & 1;
          perm[static_cast<std::size_t>(dst[0])] = flip ? src[1] : src[0];
          perm[static_cast<std::size_t>(dst[1])] = flip ? src[0] : src[1];
        }
        g.push_back(perm);
      }
    } while (std::next_permutation(order.begin(), order.end()));
    return g;
  }();
  return group;
}

/// Closure of {l} under the tetrahedral relabellings and the Regge map.
/// Regge steps are only taken where they are defined (even perimeter,
/// nonnegative image).
inline std::set<SixJLabels> symmetry_orbit(const SixJLabels& l) {
  std::set<SixJLabels> orbit{l};
  std::vector<SixJLabels> frontier{l};
  auto visit = [&](const SixJLabels& x) {
    if (orbit.insert(x).second) frontier.push_back(x);
  };
  while (!frontier.empty()) {
    SixJLabels x = frontier.back();
    frontier.pop_back();
    for (const auto& perm : tetrahedral_group()) visit(permute(x, perm));
    if (x.perimeter() % 2 == 0) {
      SixJLabels r = regge(x);
      const auto v = r.as_array();
      if (std::all_of(v.begin(), v.end(), [](long s) { return s >= 0; })) visit(r);
    }
  }
  return orbit;
}

/// All labels with entries in [0, max_label] that pass every triad.
inline std::vector<SixJLabels> valid_labels(long max_label) {
  std::vector<SixJLabels> out;
  for (long a = 0; a <= max_label; ++a)
    for (long b = 0; b <= max_label; ++b)
      for (long e = 0; e <= max_label; ++e) {
        if (!triangle_ok(a, b, e)) continue;
        for (long c = 0; c <= max_label; ++c)
          for (long d = 0; d <= max_label; ++d) {
            if (!triangle_ok(c, d, e)) continue;
            for (long f = 0; f <= max_label; ++f)
              if (triangle_ok(a, d, f) && triangle_ok(b, c, f)) out.push_back({a, b, c, d, e, f});
          }
      }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace regge
