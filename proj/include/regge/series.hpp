#pragma once

// Truncated power series in (t - t0) with complex multiprecision coefficients.

#include <algorithm>
#include <cstddef>
#include <vector>

#include "regge/error.hpp"
#include "regge/mp_complex.hpp"

namespace regge {

template <class C>
class PowerSeries {
 public:
  PowerSeries() = default;
  /// Zero series of the given order (coefficients c0..cN).
  PowerSeries(C center, std::size_t order) : center_(std::move(center)), coeffs_(order + 1, C(0)) {}

  static PowerSeries constant(const C& center, std::size_t order, const C& value) {
    PowerSeries s(center, order);
    s.coeffs_[0] = value;
    return s;
  }
  /// The independent variable t = t0 + (t - t0).
  static PowerSeries variable(const C& center, std::size_t order) {
    PowerSeries s(center, order);
    s.coeffs_[0] = center;
    if (order >= 1) s.coeffs_[1] = C(1);
    return s;
  }

  const C& center() const { return center_; }
  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<C>& coefficients() const { return coeffs_; }
  C& operator[](std::size_t i) { return coeffs_[i]; }
  const C& operator[](std::size_t i) const { return coeffs_[i]; }

  PowerSeries& operator+=(const PowerSeries& o) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  PowerSeries& operator-=(const PowerSeries& o) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  PowerSeries& operator+=(const C& c) {
    coeffs_[0] += c;
    return *this;
  }
  PowerSeries& operator-=(const C& c) {
    coeffs_[0] -= c;
    return *this;
  }
  PowerSeries operator-() const {
    PowerSeries s = *this;
    for (auto& c : s.coeffs_) c = -c;
    return s;
  }

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator+(PowerSeries a, const C& c) { return a += c; }
  friend PowerSeries operator-(PowerSeries a, const C& c) { return a -= c; }
  friend PowerSeries operator*(const C& s, PowerSeries a) {
    for (auto& c : a.coeffs_) c = s * c;
    return a;
  }

  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    return a.truncated_product(b, a.coeffs_.size());
  }
  friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) { return a * b.reciprocal(); }

  /// Multiplicative inverse by Newton iteration r <- r (2 - a r), doubling the
  /// number of correct coefficients per step.
  PowerSeries reciprocal() const {
    using std::abs;
    if (coeffs_[0].norm() == 0) throw Error(Errc::PoleCollision, "series has zero constant term");
    const std::size_t n = coeffs_.size();
    PowerSeries r(center_, n - 1);
    r.coeffs_[0] = C(1) / coeffs_[0];
    std::size_t len = 1;
    while (len < n) {
      len = std::min(2 * len, n);
      PowerSeries ar = truncated_product(r, len);
      for (auto& c : ar.coeffs_) c = -c;
      ar.coeffs_[0] += C(2);
      r = r.truncated_product(ar, len);
    }
    return r;
  }

  PowerSeries derivative() const {
    PowerSeries d(center_, order());
    for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i) d.coeffs_[i] = C(static_cast<int>(i + 1)) * coeffs_[i + 1];
    return d;
  }

  /// Copy keeping only c0..c_n (higher coefficients set to zero).
  PowerSeries truncate(std::size_t n) const {
    PowerSeries s = *this;
    for (std::size_t i = n + 1; i < s.coeffs_.size(); ++i) s.coeffs_[i] = C(0);
    return s;
  }

  /// sum_{i <= n} c_i h^i by Horner's rule, n defaults to the order.
  C evaluate(const C& h) const { return evaluate(h, order()); }
  C evaluate(const C& h, std::size_t n) const {
    n = std::min(n, order());
    C acc = coeffs_[n];
    for (std::size_t i = n; i-- > 0;) acc = acc * h + coeffs_[i];
    return acc;
  }

 private:
  // Product truncated to `len` coefficients, result padded to this order.
  PowerSeries truncated_product(const PowerSeries& b, std::size_t len) const {
    PowerSeries p(center_, order());
    for (std::size_t i = 0; i < len && i < coeffs_.size(); ++i) {
      if (coeffs_[i].norm() == 0) continue;
      for (std::size_t j = 0; i + j < len && j < b.coeffs_.size(); ++j) p.coeffs_[i + j] += coeffs_[i] * b.coeffs_[j];
    }
    return p;
  }

  C center_{};
  std::vector<C> coeffs_{C(0)};
};

using MpSeries = PowerSeries<MpComplex>;

}  // namespace regge
