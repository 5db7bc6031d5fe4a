#pragma once

// 2x2 matrices over a complex scalar: std::complex<double> for float mode,
// GaussianRational for exact mode.

#include <algorithm>
#include <cmath>
#include <complex>
#include <ostream>
#include <type_traits>

#include "regge/error.hpp"
#include "regge/exact.hpp"

namespace regge {

template <class S>
struct RealOf;
template <>
struct RealOf<std::complex<double>> {
  using type = double;
};
template <>
struct RealOf<GaussianRational> {
  using type = BigRational;
};
template <class S>
using real_of_t = typename RealOf<S>::type;

template <class T>
struct ComplexOf;
template <>
struct ComplexOf<double> {
  using type = std::complex<double>;
};
template <>
struct ComplexOf<BigRational> {
  using type = GaussianRational;
};
template <class T>
using complex_of_t = typename ComplexOf<T>::type;

template <class S>
inline constexpr bool is_exact_v = std::is_same_v<S, GaussianRational> || std::is_same_v<S, BigRational>;

inline double real_part(const std::complex<double>& z) { return z.real(); }
inline double imag_part(const std::complex<double>& z) { return z.imag(); }
inline const BigRational& real_part(const GaussianRational& z) { return z.re; }
inline const BigRational& imag_part(const GaussianRational& z) { return z.im; }
inline std::complex<double> conjugate(const std::complex<double>& z) { return std::conj(z); }
inline GaussianRational conjugate(const GaussianRational& z) { return conj(z); }

inline double magnitude(const std::complex<double>& z) { return std::abs(z); }
inline double magnitude(const GaussianRational& z) {
  return std::hypot(z.re.get_d(), z.im.get_d());
}
inline double magnitude(double x) { return std::abs(x); }
inline double magnitude(const BigRational& x) { return std::abs(x.get_d()); }

/// Equality test shared by both modes: exact equality for rationals, relative
/// tolerance `tol` (scaled by max(1, |a|, |b|)) for floating values.
inline bool same_value(const std::complex<double>& a, const std::complex<double>& b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}
inline bool same_value(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}
inline bool same_value(const GaussianRational& a, const GaussianRational& b, double) { return a == b; }
inline bool same_value(const BigRational& a, const BigRational& b, double) { return a == b; }

inline bool is_zero_value(const std::complex<double>& z, double tol) { return std::abs(z) <= tol; }
inline bool is_zero_value(const GaussianRational& z, double) { return z.re == 0 && z.im == 0; }

/// Square root in exact mode, defined when the result is again Gaussian
/// rational. Returns the root with nonnegative real part (positive imaginary
/// part on the negative real axis).
inline bool gaussian_sqrt(const GaussianRational& z, GaussianRational& out) {
  const BigRational norm2 = z.re * z.re + z.im * z.im;
  if (!is_square(norm2)) return false;
  const BigRational modulus = rational_sqrt(norm2);
  const BigRational x2 = (modulus + z.re) / 2;
  const BigRational y2 = (modulus - z.re) / 2;
  if (!is_square(x2) || !is_square(y2)) return false;
  BigRational x = rational_sqrt(x2), y = rational_sqrt(y2);
  if (x == 0) {
    out = {0, y};
    return true;
  }
  out = {x, z.im / (2 * x)};
  return true;
}

template <class S>
struct Mat2 {
  S m00{}, m01{}, m10{}, m11{};

  static Mat2 identity() { return {S(1), S(0), S(0), S(1)}; }
  static Mat2 scalar(const S& s) { return {s, S(0), S(0), s}; }

  S trace() const { return m00 + m11; }
  S det() const { return m00 * m11 - m01 * m10; }
  Mat2 adjoint() const { return {conjugate(m00), conjugate(m10), conjugate(m01), conjugate(m11)}; }
  /// Inverse for det 1 matrices (adjugate).
  Mat2 adjugate() const { return {m11, -m01, -m10, m00}; }

  Mat2 operator-() const { return {-m00, -m01, -m10, -m11}; }
  Mat2& operator+=(const Mat2& o) {
    m00 += o.m00;
    m01 += o.m01;
    m10 += o.m10;
    m11 += o.m11;
    return *this;
  }
  Mat2& operator-=(const Mat2& o) {
    m00 -= o.m00;
    m01 -= o.m01;
    m10 -= o.m10;
    m11 -= o.m11;
    return *this;
  }
  friend Mat2 operator+(Mat2 a, const Mat2& b) { return a += b; }
  friend Mat2 operator-(Mat2 a, const Mat2& b) { return a -= b; }
  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11, a.m10 * b.m00 + a.m11 * b.m10,
            a.m10 * b.m01 + a.m11 * b.m11};
  }
  friend Mat2 operator*(const S& s, const Mat2& a) { return {s * a.m00, s * a.m01, s * a.m10, s * a.m11}; }
  friend bool operator==(const Mat2& a, const Mat2& b) {
    return a.m00 == b.m00 && a.m01 == b.m01 && a.m10 == b.m10 && a.m11 == b.m11;
  }

  friend std::ostream& operator<<(std::ostream& os, const Mat2& a) {
    return os << "[[" << a.m00 << ", " << a.m01 << "], [" << a.m10 << ", " << a.m11 << "]]";
  }
};

template <class S>
bool same_matrix(const Mat2<S>& a, const Mat2<S>& b, double tol) {
  return same_value(a.m00, b.m00, tol) && same_value(a.m01, b.m01, tol) && same_value(a.m10, b.m10, tol) &&
         same_value(a.m11, b.m11, tol);
}

template <class S>
bool is_hermitian(const Mat2<S>& a, double tol = 1e-12) {
  return same_matrix(a, a.adjoint(), tol);
}

using CMat2 = Mat2<std::complex<double>>;
using QMat2 = Mat2<GaussianRational>;

}  // namespace regge
