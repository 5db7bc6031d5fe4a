#pragma once

// Polynomials with exact rational coefficients in the entries x_{ic} of a
// k x 3 matrix (k = 2 or 3). Row i is acted on by GL_k from the left,
// column c by GL_3 from the right.

#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "regge/error.hpp"
#include "regge/exact.hpp"

namespace regge {

/// Exponent grid, row-major: entry 3*i + c is the power of x_{ic}. Rows
/// beyond k are always zero. Ordered lexicographically.
using Monomial = std::array<std::uint8_t, 9>;

inline constexpr std::size_t slot(int row, int col) { return static_cast<std::size_t>(3 * row + col); }

class MultiPoly {
 public:
  using Terms = std::map<Monomial, BigRational>;

  explicit MultiPoly(int k = 3) : k_(k) {
    if (k != 2 && k != 3) throw Error(Errc::InvalidArgument, "MultiPoly supports k = 2 or 3");
  }

  static MultiPoly constant(int k, const BigRational& c) {
    MultiPoly p(k);
    p.add_term(Monomial{}, c);
    return p;
  }

  /// The single variable x_{row,col} (0-based).
  static MultiPoly variable(int k, int row, int col) {
    if (row < 0 || row >= k || col < 0 || col > 2) throw Error(Errc::InvalidArgument, "variable out of range");
    Monomial m{};
    m[slot(row, col)] = 1;
    MultiPoly p(k);
    p.add_term(m, 1);
    return p;
  }

  /// det of the 3 x 3 matrix of variables.
  static MultiPoly determinant() {
    MultiPoly p(3);
    const std::array<std::array<int, 3>, 6> perms = {{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}}};
    for (std::size_t s = 0; s < perms.size(); ++s) {
      Monomial m{};
      for (int row = 0; row < 3; ++row) m[slot(row, perms[s][static_cast<std::size_t>(row)])] = 1;
      p.add_term(m, s < 3 ? 1 : -1);
    }
    return p;
  }

  int k() const { return k_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// The same polynomial viewed on matrices with `k` rows.
  MultiPoly with_rows(int k) const {
    MultiPoly p(k);
    for (const auto& [m, c] : terms_) {
      for (int row = k; row < 3; ++row)
        for (int col = 0; col < 3; ++col)
          if (m[slot(row, col)] != 0) throw Error(Errc::InvalidArgument, "polynomial uses rows beyond k");
      p.terms_.emplace(m, c);
    }
    return p;
  }

  void add_term(const Monomial& m, const BigRational& c) {
    if (c == 0) return;
    for (int row = k_; row < 3; ++row)
      for (int col = 0; col < 3; ++col)
        if (m[slot(row, col)] != 0) throw Error(Errc::InvalidArgument, "monomial uses rows beyond k");
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check_same_k(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check_same_k(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  MultiPoly& operator*=(const BigRational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const BigRational& s) { return a *= s; }
  friend MultiPoly operator*(const BigRational& s, MultiPoly a) { return a *= s; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_same_k(b);
    MultiPoly p(a.k_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m{};
        for (std::size_t s = 0; s < m.size(); ++s) m[s] = static_cast<std::uint8_t>(ma[s] + mb[s]);
        p.add_term(m, ca * cb);
      }
    return p;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.k_ == b.k_ && a.terms_ == b.terms_; }

  /// Row-degree vector (length 3) if the polynomial is homogeneous in every row.
  std::array<long, 3> row_degrees() const { return degrees(true); }
  /// Column-degree vector if the polynomial is homogeneous in every column.
  std::array<long, 3> column_degrees() const { return degrees(false); }

 private:
  void check_same_k(const MultiPoly& o) const {
    if (k_ != o.k_) throw Error(Errc::InvalidArgument, "mixing polynomials with different k");
  }

  std::array<long, 3> degrees(bool rows) const {
    std::array<long, 3> first{};
    bool have = false;
    for (const auto& [m, c] : terms_) {
      std::array<long, 3> d{};
      for (int row = 0; row < 3; ++row)
        for (int col = 0; col < 3; ++col) d[static_cast<std::size_t>(rows ? row : col)] += m[slot(row, col)];
      if (!have) {
        first = d;
        have = true;
      } else if (d != first) {
        throw Error(Errc::DegreeMismatch, "polynomial is not multi-homogeneous");
      }
    }
    return first;
  }

  int k_;
  Terms terms_;
};

/// Polarization operator E_{ij} restricted to a set of columns:
///   sum_{c in columns} x_{ic} d/dx_{jc}.
/// With all columns and i < j this is the infinitesimal left action along the
/// elementary matrix E_{ij}; it raises the degree of row i and lowers row j.
inline MultiPoly polarize(const MultiPoly& poly, int i, int j, const std::vector<int>& columns = {0, 1, 2}) {
  if (i < 0 || j < 0 || i >= poly.k() || j >= poly.k()) throw Error(Errc::InvalidArgument, "row out of range");
  MultiPoly out(poly.k());
  for (const auto& [m, c] : poly.terms()) {
    for (int col : columns) {
      const auto power = m[slot(j, col)];
      if (power == 0) continue;
      Monomial n = m;
      n[slot(j, col)] = static_cast<std::uint8_t>(power - 1);
      n[slot(i, col)] = static_cast<std::uint8_t>(n[slot(i, col)] + 1);
      out.add_term(n, c * static_cast<long>(power));
    }
  }
  return out;
}

/// Raising operator of the left action with 1-based rows, 1 <= i < j <= k.
inline MultiPoly raising_operator_apply(const MultiPoly& poly, int i, int j) {
  if (!(1 <= i && i < j && j <= poly.k())) throw Error(Errc::InvalidArgument, "raising operator needs 1 <= i < j <= k");
  return polarize(poly, i - 1, j - 1);
}

/// Fock (Bargmann-Segal) inner product: monomials orthogonal and
/// <x^alpha, x^alpha> = prod alpha_{ic}!.
inline BigRational fock_inner(const MultiPoly& f, const MultiPoly& g) {
  if (f.k() != g.k()) throw Error(Errc::InvalidArgument, "fock_inner on different k");
  BigRational total = 0;
  const auto& small = f.terms().size() <= g.terms().size() ? f.terms() : g.terms();
  const auto& large = f.terms().size() <= g.terms().size() ? g.terms() : f.terms();
  for (const auto& [m, c] : small) {
    auto it = large.find(m);
    if (it == large.end()) continue;
    BigInt weight = 1;
    for (auto e : m) weight *= factorial(e);
    total += c * it->second * weight;
  }
  return total;
}

/// All exponent grids with the given row sums (first k entries) and column sums.
inline std::vector<Monomial> monomials_with_degrees(int k, const std::array<long, 3>& row_sums,
                                                    const std::array<long, 3>& col_sums) {
  std::vector<Monomial> out;
  for (int row = k; row < 3; ++row)
    if (row_sums[static_cast<std::size_t>(row)] != 0) return out;
  const long total_r = row_sums[0] + row_sums[1] + row_sums[2];
  const long total_c = col_sums[0] + col_sums[1] + col_sums[2];
  if (total_r != total_c) return out;
  for (long v : row_sums)
    if (v < 0 || v > 255) return out;
  for (long v : col_sums)
    if (v < 0 || v > 255) return out;

  Monomial m{};
  std::array<long, 3> col_left = col_sums;
  auto fill = [&](auto&& self, int row, int col, long row_left) -> void {
    if (row == k) {
      if (col_left == std::array<long, 3>{0, 0, 0}) out.push_back(m);
      return;
    }
    if (col == 2) {
      if (row_left > col_left[2]) return;
      m[slot(row, 2)] = static_cast<std::uint8_t>(row_left);
      col_left[2] -= row_left;
      const long next = row + 1 < k ? row_sums[static_cast<std::size_t>(row + 1)] : 0;
      self(self, row + 1, 0, next);
      col_left[2] += row_left;
      m[slot(row, 2)] = 0;
      return;
    }
    const long cap = std::min(row_left, col_left[static_cast<std::size_t>(col)]);
    for (long v = 0; v <= cap; ++v) {
      m[slot(row, col)] = static_cast<std::uint8_t>(v);
      col_left[static_cast<std::size_t>(col)] -= v;
      self(self, row, col + 1, row_left - v);
      col_left[static_cast<std::size_t>(col)] += v;
    }
    m[slot(row, col)] = 0;
  };
  fill(fill, 0, 0, row_sums[0]);
  return out;
}

}  // namespace regge
