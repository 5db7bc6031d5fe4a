#pragma once

// Three-row combinatorics: Pieri rule, Littlewood-Richardson coefficients and
// Gelfand-Tsetlin patterns for GL3.

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <vector>

#include "regge/error.hpp"

namespace regge {

struct Partition {
  std::array<long, 3> rows{0, 0, 0};

  Partition() = default;
  Partition(long r0, long r1 = 0, long r2 = 0) : rows{r0, r1, r2} {
    if (!(r0 >= r1 && r1 >= r2 && r2 >= 0))
      throw Error(Errc::InvalidArgument, "partition rows must be weakly decreasing and nonnegative");
  }

  long operator[](std::size_t i) const { return rows[i]; }
  long size() const { return rows[0] + rows[1] + rows[2]; }
  int length() const { return rows[2] > 0 ? 3 : rows[1] > 0 ? 2 : rows[0] > 0 ? 1 : 0; }

  friend auto operator<=>(const Partition&, const Partition&) = default;

  std::string to_string() const {
    return "(" + std::to_string(rows[0]) + "," + std::to_string(rows[1]) + "," + std::to_string(rows[2]) + ")";
  }
};

/// Partitions obtained from `lambda` by adding `boxes` boxes, no two in the
/// same column (at most three rows). Sorted, each listed once.
inline std::vector<Partition> pieri(const Partition& lambda, long boxes) {
  if (boxes < 0) throw Error(Errc::InvalidArgument, "negative box count");
  // Horizontal strip: mu_1 >= lambda_1 >= mu_2 >= lambda_2 >= mu_3 >= lambda_3.
  std::vector<Partition> out;
  const long target = lambda.size() + boxes;
  for (long m1 = lambda[0]; m1 <= lambda[0] + boxes; ++m1)
    for (long m2 = lambda[1]; m2 <= lambda[0]; ++m2) {
      const long m3 = target - m1 - m2;
      if (m3 < lambda[2] || m3 > lambda[1]) continue;
      out.emplace_back(m1, m2, m3);
    }
  std::sort(out.begin(), out.end());
  return out;
}

/// Littlewood-Richardson coefficient c^nu_{lambda,mu}: the number of
/// semistandard fillings of nu/lambda with content mu whose reverse reading
/// word is a lattice word.
inline long lr_contains(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (nu.size() != lambda.size() + mu.size()) return 0;
  for (std::size_t i = 0; i < 3; ++i)
    if (lambda[i] > nu[i]) return 0;

  // Row i of the skew shape spans columns [lambda_i, nu_i). A semistandard row
  // filled from {1,2,3} is determined by how many of each value it holds.
  std::array<std::array<int, 3>, 3> counts{};
  std::array<std::vector<int>, 3> filled;
  long total = 0;

  auto entry = [&](std::size_t row, long col) {
    return filled[row][static_cast<std::size_t>(col - lambda[row])];
  };

  auto check_and_count = [&]() {
    // content
    std::array<long, 3> content{0, 0, 0};
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t v = 0; v < 3; ++v) content[v] += counts[r][v];
    for (std::size_t v = 0; v < 3; ++v)
      if (content[v] != mu[v]) return;
    // columns strictly increase downwards
    for (std::size_t r = 0; r + 1 < 3; ++r)
      for (long col = lambda[r + 1]; col < nu[r + 1]; ++col)
        if (col >= lambda[r] && col < nu[r] && entry(r, col) >= entry(r + 1, col)) return;
    // lattice condition on the reading word: rows top to bottom, right to left
    std::array<long, 3> seen{0, 0, 0};
    for (std::size_t r = 0; r < 3; ++r)
      for (long col = nu[r] - 1; col >= lambda[r]; --col) {
        const int v = entry(r, col);
        ++seen[static_cast<std::size_t>(v)];
        if (v > 0 && seen[static_cast<std::size_t>(v)] > seen[static_cast<std::size_t>(v - 1)]) return;
      }
    ++total;
  };

  auto fill_row = [&](auto&& self, std::size_t r) -> void {
    if (r == 3) {
      check_and_count();
      return;
    }
    const long len = nu[r] - lambda[r];
    for (long n1 = 0; n1 <= len; ++n1)
      for (long n2 = 0; n1 + n2 <= len; ++n2) {
        const long n3 = len - n1 - n2;
        counts[r] = {static_cast<int>(n1), static_cast<int>(n2), static_cast<int>(n3)};
        filled[r].assign(static_cast<std::size_t>(n1), 0);
        filled[r].insert(filled[r].end(), static_cast<std::size_t>(n2), 1);
        filled[r].insert(filled[r].end(), static_cast<std::size_t>(n3), 2);
        self(self, r + 1);
      }
  };
  fill_row(fill_row, 0);
  return total;
}

/// Gelfand-Tsetlin pattern for GL3:
///   top[0]    top[1]    top[2]
///       mid[0]    mid[1]
///            bottom
struct GTPattern {
  std::array<long, 3> top{};
  std::array<long, 2> middle{};
  long bottom = 0;

  bool interlaces() const {
    return top[0] >= middle[0] && middle[0] >= top[1] && top[1] >= middle[1] && middle[1] >= top[2] &&
           middle[0] >= bottom && bottom >= middle[1];
  }

  /// Weight = successive differences of row sums, read from the bottom.
  std::array<long, 3> weight() const {
    const long s1 = bottom, s2 = middle[0] + middle[1], s3 = top[0] + top[1] + top[2];
    return {s1, s2 - s1, s3 - s2};
  }

  friend auto operator<=>(const GTPattern&, const GTPattern&) = default;
};

/// All interlacing patterns with top row (p, q, 0) and the given weight.
inline std::vector<GTPattern> gt_patterns(long p, long q, const std::array<long, 3>& mu) {
  std::vector<GTPattern> out;
  if (!(p >= q && q >= 0)) throw Error(Errc::InvalidArgument, "top row must satisfy p >= q >= 0");
  for (long alpha = q; alpha <= p; ++alpha)
    for (long beta = 0; beta <= q; ++beta)
      for (long gamma = beta; gamma <= alpha; ++gamma) {
        GTPattern pat{{p, q, 0}, {alpha, beta}, gamma};
        if (pat.weight() == mu) out.push_back(pat);
      }
  return out;
}

inline long gt_count(long p, long q, const std::array<long, 3>& mu) {
  return static_cast<long>(gt_patterns(p, q, mu).size());
}

/// Duality x -> p - x on every entry followed by a left-right flip of each row.
inline GTPattern gt_dual(const GTPattern& pat, long p) {
  auto entries_ok = [&](const GTPattern& g) {
    for (long x : g.top)
      if (x > p) return false;
    for (long x : g.middle)
      if (x > p) return false;
    return g.bottom <= p;
  };
  if (!entries_ok(pat)) throw Error(Errc::InvalidArgument, "pattern entries exceed p");
  GTPattern out{{p - pat.top[2], p - pat.top[1], p - pat.top[0]},
                {p - pat.middle[1], p - pat.middle[0]},
                p - pat.bottom};
  if (!out.interlaces()) throw Error(Errc::InterlacingViolation, "dual pattern does not interlace");
  return out;
}

}  // namespace regge
