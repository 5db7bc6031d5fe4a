#pragma once

// Complex numbers over a multiprecision real (Boost.Multiprecision over MPFR,
// precision chosen at run time).

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <complex>
#include <ostream>
#include <sstream>
#include <string>

namespace regge {

using Real = boost::multiprecision::mpfr_float;

/// Decimal digits giving at least `bits` bits of mantissa.
inline unsigned digits10_for_bits(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

/// Sets the default working precision for new Real values; restores the
/// previous default on destruction.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits) : saved_(Real::default_precision()) {
    Real::default_precision(digits10_for_bits(bits));
  }
  ~PrecisionScope() { Real::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

template <class R>
struct Complex {
  R re{0}, im{0};

  Complex() = default;
  Complex(R r) : re(std::move(r)), im(0) {}
  Complex(R r, R i) : re(std::move(r)), im(std::move(i)) {}
  Complex(int r) : re(r), im(0) {}
  Complex(double r) : re(r), im(0) {}
  static Complex from(std::complex<double> z) { return {R(z.real()), R(z.imag())}; }

  Complex operator-() const { return {-re, -im}; }
  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) { return *this = *this * o; }
  Complex& operator/=(const Complex& o) { return *this = *this / o; }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {R(a.re * b.re - a.im * b.im), R(a.re * b.im + a.im * b.re)};
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    const R n = b.re * b.re + b.im * b.im;
    return {R((a.re * b.re + a.im * b.im) / n), R((a.im * b.re - a.re * b.im) / n)};
  }

  R norm() const { return re * re + im * im; }
  R abs() const {
    using std::sqrt;
    return sqrt(norm());
  }
  std::complex<double> to_complex() const {
    return {static_cast<double>(re), static_cast<double>(im)};
  }

  friend std::ostream& operator<<(std::ostream& os, const Complex& z) {
    return os << "(" << z.re << "," << z.im << ")";
  }
};

template <class R>
R abs(const Complex<R>& z) {
  return z.abs();
}

/// e^{i angle}.
template <class R>
Complex<R> unit_phase(const R& angle) {
  using std::cos;
  using std::sin;
  return {R(cos(angle)), R(sin(angle))};
}

template <class R>
R pi_value() {
  using std::acos;
  return acos(R(-1));
}

using MpComplex = Complex<Real>;

/// Decimal text with `digits` significant digits.
inline std::string to_decimal(const Real& x, int digits = 20) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

}  // namespace regge
