#pragma once

// Exact number tower and dense exact linear algebra.
//
// Big integers and rationals are GMP's mpz_class / mpq_class. Everything else
// here (signed surds, Gaussian rationals, fraction-free elimination) is built
// on top of them.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "regge/error.hpp"

namespace regge {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(Errc::DivisionByZero, "rational with zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

inline BigRational make_rational(long num, long den = 1) {
  return make_rational(BigInt(num), BigInt(den));
}

/// Parses "n", "n/d" or a finite decimal such as "-1.25" into an exact rational.
inline BigRational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return Error(Errc::InvalidArgument, "malformed rational '" + s + "'"); };
  if (s.empty()) throw bad();
  auto valid_int = [](std::string_view t) {
    if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
    return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  auto to_int = [](std::string t) {
    if (!t.empty() && t.front() == '+') t.erase(0, 1);
    return BigInt(t);
  };
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string n = s.substr(0, slash), d = s.substr(slash + 1);
    if (!valid_int(n) || !valid_int(d)) throw bad();
    return make_rational(to_int(n), to_int(d));
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    if (!valid_int(whole) || (!frac.empty() && !valid_int(frac)) ||
        (!frac.empty() && (frac.front() == '-' || frac.front() == '+')))
      throw bad();
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt w = to_int(whole);
    if (w < 0) w = -w;
    BigInt f = frac.empty() ? BigInt(0) : BigInt(frac);
    BigInt num = w * scale + f;
    return make_rational(negative ? BigInt(-num) : num, scale);
  }
  if (!valid_int(s)) throw bad();
  return BigRational(to_int(s));
}

inline std::string to_string(const BigRational& q) { return q.get_str(); }

inline int sign_of(const BigRational& q) { return sgn(q); }

/// True when q is the square of a rational. q must be canonical.
inline bool is_square(const BigRational& q) {
  if (q < 0) return false;
  return mpz_perfect_square_p(q.get_num_mpz_t()) != 0 && mpz_perfect_square_p(q.get_den_mpz_t()) != 0;
}

inline BigRational rational_sqrt(const BigRational& q) {
  if (!is_square(q)) throw Error(Errc::NotASquare, to_string(q) + " is not a rational square");
  BigInt n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  return make_rational(n, d);
}

/// n! for n >= 0; small values come from a table built once.
inline BigInt factorial(long n) {
  if (n < 0) throw Error(Errc::InvalidArgument, "factorial of negative number");
  static const std::vector<BigInt> table = [] {
    std::vector<BigInt> t(128);
    t[0] = 1;
    for (std::size_t i = 1; i < t.size(); ++i) t[i] = t[i - 1] * static_cast<unsigned long>(i);
    return t;
  }();
  if (static_cast<std::size_t>(n) < table.size()) return table[static_cast<std::size_t>(n)];
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

// ---------------------------------------------------------------------------
// SignedSqrt: sign * sqrt(square), square a nonnegative rational.

class SignedSqrt {
 public:
  SignedSqrt() = default;

  SignedSqrt(int sign, BigRational square) : sign_(sign), square_(std::move(square)) {
    square_.canonicalize();
    if (sign_ < -1 || sign_ > 1) throw Error(Errc::InvalidArgument, "sign must be -1, 0 or +1");
    if (square_ < 0) throw Error(Errc::InvalidArgument, "negative square");
    if ((sign_ == 0) != (square_ == 0)) throw Error(Errc::InvalidArgument, "sign is zero iff square is zero");
  }

  /// The surd whose value is the rational q itself.
  static SignedSqrt from_rational(const BigRational& q) { return SignedSqrt(sgn(q), q * q); }

  int sign() const { return sign_; }
  const BigRational& square() const { return square_; }
  bool is_zero() const { return sign_ == 0; }

  SignedSqrt abs() const { return SignedSqrt(sign_ == 0 ? 0 : 1, square_); }
  SignedSqrt operator-() const { return SignedSqrt(-sign_, square_); }

  double to_double() const { return sign_ * std::sqrt(square_.get_d()); }

  friend SignedSqrt operator*(const SignedSqrt& x, const SignedSqrt& y) {
    return SignedSqrt(x.sign_ * y.sign_, x.square_ * y.square_);
  }
  friend SignedSqrt operator*(const SignedSqrt& x, const BigRational& q) {
    return SignedSqrt(x.sign_ * sgn(q), x.square_ * q * q);
  }
  friend SignedSqrt operator*(const BigRational& q, const SignedSqrt& x) { return x * q; }
  friend SignedSqrt operator/(const SignedSqrt& x, const SignedSqrt& y) {
    if (y.is_zero()) throw Error(Errc::DivisionByZero, "division by zero surd");
    return SignedSqrt(x.sign_ * y.sign_, x.square_ / y.square_);
  }

  friend bool operator==(const SignedSqrt& x, const SignedSqrt& y) {
    return x.sign_ == y.sign_ && x.square_ == y.square_;
  }
  friend bool operator!=(const SignedSqrt& x, const SignedSqrt& y) { return !(x == y); }

  friend std::ostream& operator<<(std::ostream& os, const SignedSqrt& x) {
    return os << (x.sign_ < 0 ? "-" : x.sign_ > 0 ? "+" : "0") << "sqrt(" << x.square_ << ")";
  }

 private:
  int sign_ = 0;
  BigRational square_ = 0;
};

inline SignedSqrt surd_div(const SignedSqrt& x, const SignedSqrt& y) { return x / y; }

/// x + y, defined only when x and y lie in the same rational square class.
inline SignedSqrt operator+(const SignedSqrt& x, const SignedSqrt& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  BigRational ratio = x.square() / y.square();
  if (!is_square(ratio))
    throw Error(Errc::IncommensurableSum, "sqrt(" + to_string(x.square()) + ") + sqrt(" +
                                              to_string(y.square()) + ") is not a single surd");
  BigRational coeff = x.sign() * rational_sqrt(ratio) + y.sign();
  return SignedSqrt(sgn(coeff), y.square() * coeff * coeff);
}

inline SignedSqrt operator-(const SignedSqrt& x, const SignedSqrt& y) { return x + (-y); }

/// Exact sum of arbitrary surds. Terms are grouped by rational square class;
/// square roots of distinct square-free classes are linearly independent over
/// the rationals, so the sum is zero iff every group coefficient is zero.
class SurdSum {
 public:
  void add(const SignedSqrt& term) {
    if (term.is_zero()) return;
    for (auto& [base, coeff] : groups_) {
      BigRational ratio = term.square() / base;
      if (is_square(ratio)) {
        coeff += term.sign() * rational_sqrt(ratio);
        return;
      }
    }
    groups_.emplace_back(term.square(), BigRational(term.sign()));
  }

  SurdSum& operator+=(const SignedSqrt& term) {
    add(term);
    return *this;
  }

  bool is_zero() const {
    return std::all_of(groups_.begin(), groups_.end(), [](const auto& g) { return g.second == 0; });
  }

  /// The total as a single surd; throws IncommensurableSum if it is not one.
  SignedSqrt value() const {
    SignedSqrt total;
    for (const auto& [base, coeff] : groups_) {
      if (coeff == 0) continue;
      if (!total.is_zero())
        throw Error(Errc::IncommensurableSum, "sum spans several square classes");
      total = SignedSqrt(sgn(coeff), base * coeff * coeff);
    }
    return total;
  }

  double to_double() const {
    double s = 0;
    for (const auto& [base, coeff] : groups_) s += coeff.get_d() * std::sqrt(base.get_d());
    return s;
  }

 private:
  std::vector<std::pair<BigRational, BigRational>> groups_;
};

// ---------------------------------------------------------------------------
// Gaussian rationals: exact complex numbers with rational parts.

struct GaussianRational {
  BigRational re = 0;
  BigRational im = 0;

  GaussianRational() = default;
  GaussianRational(BigRational r, BigRational i = 0) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(long r) : re(r), im(0) {}

  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    BigRational n = b.re * b.re + b.im * b.im;
    if (n == 0) throw Error(Errc::DivisionByZero, "division by zero Gaussian rational");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << "(" << z.re << "," << z.im << ")";
  }
};

inline GaussianRational conj(const GaussianRational& z) { return {z.re, -z.im}; }

// ---------------------------------------------------------------------------
// Dense exact matrices.

using ExactVector = std::vector<BigRational>;

class ExactMatrix {
 public:
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  ExactMatrix(std::initializer_list<std::initializer_list<long>> init)
      : rows_(init.size()), cols_(init.size() ? init.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw Error(Errc::InvalidArgument, "ragged matrix initializer");
      for (long v : row) data_.emplace_back(v);
    }
  }

  static ExactMatrix identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigRational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigRational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  ExactVector apply(const ExactVector& v) const {
    if (v.size() != cols_) throw Error(Errc::InvalidArgument, "dimension mismatch in matrix-vector product");
    ExactVector out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (v[j] != 0) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(Errc::InvalidArgument, "shape mismatch");
    ExactMatrix r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] - b.data_[k];
    return r;
  }

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<BigRational> data_;
};

namespace detail {

struct EchelonForm {
  std::vector<std::vector<BigInt>> rows;  // fraction-free reduced rows
  std::vector<std::size_t> pivot_cols;    // pivot column of rows[0..rank)
};

// Fraction-free Gauss-Jordan elimination. Each row is first scaled to integer
// entries; afterwards every update
//   row_i <- (pivot * row_i - row_i[c] * row_r) / previous_pivot
// divides exactly, so entries stay integral and bounded by minors of the input.
// Pivot choice: leftmost column with a nonzero entry, first such row.
inline EchelonForm fraction_free_reduce(const ExactMatrix& m) {
  EchelonForm ef;
  const std::size_t n_rows = m.rows(), n_cols = m.cols();
  ef.rows.assign(n_rows, std::vector<BigInt>(n_cols));
  for (std::size_t i = 0; i < n_rows; ++i) {
    BigInt lcm = 1;
    for (std::size_t j = 0; j < n_cols; ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < n_cols; ++j) ef.rows[i][j] = m(i, j).get_num() * (lcm / m(i, j).get_den());
  }

  BigInt previous = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n_cols && r < n_rows; ++c) {
    std::size_t pivot_row = r;
    while (pivot_row < n_rows && ef.rows[pivot_row][c] == 0) ++pivot_row;
    if (pivot_row == n_rows) continue;
    std::swap(ef.rows[r], ef.rows[pivot_row]);
    const BigInt pivot = ef.rows[r][c];
    for (std::size_t i = 0; i < n_rows; ++i) {
      if (i == r) continue;
      const BigInt factor = ef.rows[i][c];
      for (std::size_t j = 0; j < n_cols; ++j) {
        BigInt v = pivot * ef.rows[i][j] - factor * ef.rows[r][j];
        BigInt q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
        if (rem != 0) throw Error(Errc::InvalidArgument, "fraction-free elimination lost exactness");
        ef.rows[i][j] = std::move(q);
      }
    }
    previous = pivot;
    ef.pivot_cols.push_back(c);
    ++r;
  }
  ef.rows.resize(r);
  return ef;
}

inline void normalize_leading(ExactVector& v) {
  auto it = std::find_if(v.begin(), v.end(), [](const BigRational& x) { return x != 0; });
  if (it == v.end()) return;
  BigRational lead = *it;
  for (auto& x : v) x /= lead;
}

}  // namespace detail

inline std::size_t rank(const ExactMatrix& m) { return detail::fraction_free_reduce(m).pivot_cols.size(); }

/// Basis of the right kernel {v : m v = 0}, one vector per non-pivot column in
/// increasing column order, each scaled so its first nonzero entry is +1.
inline std::vector<ExactVector> nullspace(const ExactMatrix& m) {
  const auto ef = detail::fraction_free_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ef.pivot_cols) is_pivot[c] = true;

  std::vector<ExactVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    ExactVector v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < ef.pivot_cols.size(); ++i) {
      const auto pc = ef.pivot_cols[i];
      if (ef.rows[i][free] != 0) v[pc] = make_rational(-ef.rows[i][free], ef.rows[i][pc]);
    }
    detail::normalize_leading(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Coordinates X with basis * X = targets, where the columns of `basis` are
/// linearly independent. Throws ClosureFailure if some target column is not in
/// the column span.
inline ExactMatrix solve_in_span(const ExactMatrix& basis, const ExactMatrix& targets) {
  if (basis.rows() != targets.rows()) throw Error(Errc::InvalidArgument, "row count mismatch");
  const std::size_t n = basis.rows(), k = basis.cols(), t = targets.cols();
  ExactMatrix aug(n, k + t);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug(i, j) = basis(i, j);
    for (std::size_t j = 0; j < t; ++j) aug(i, k + j) = targets(i, j);
  }
  const auto ef = detail::fraction_free_reduce(aug);
  std::size_t basis_rank = 0;
  for (auto c : ef.pivot_cols) {
    if (c >= k) throw Error(Errc::ClosureFailure, "target leaves the span of the basis");
    ++basis_rank;
  }
  if (basis_rank != k) throw Error(Errc::InvalidArgument, "basis columns are linearly dependent");
  ExactMatrix x(k, t);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < t; ++j) x(i, j) = make_rational(ef.rows[i][k + j], ef.rows[i][ef.pivot_cols[i]]);
  return x;
}

/// Splits the space into eigenspaces of m for the given candidate integer
/// eigenvalues. Throws SpanFailure unless the eigenspaces fill the space.
inline std::map<long, std::vector<ExactVector>> eigensplit(const ExactMatrix& m, std::vector<long> eigenvalues) {
  if (m.rows() != m.cols()) throw Error(Errc::InvalidArgument, "eigensplit needs a square matrix");
  std::sort(eigenvalues.begin(), eigenvalues.end());
  eigenvalues.erase(std::unique(eigenvalues.begin(), eigenvalues.end()), eigenvalues.end());
  std::map<long, std::vector<ExactVector>> out;
  std::size_t total = 0;
  for (long c : eigenvalues) {
    ExactMatrix shifted = m;
    for (std::size_t i = 0; i < m.rows(); ++i) shifted(i, i) -= c;
    auto space = nullspace(shifted);
    total += space.size();
    out.emplace(c, std::move(space));
  }
  if (total != m.rows())
    throw Error(Errc::SpanFailure, "eigenspaces span " + std::to_string(total) + " of " +
                                       std::to_string(m.rows()) + " dimensions");
  return out;
}

}  // namespace regge
