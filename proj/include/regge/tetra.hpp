#pragma once

// Tetrahedron geometry. Edge slots follow the 6j layout: with vertices
//   v0 = 0, v1 = a1, v2 = a1 + a2, v3 = a1 + a2 + a3
// the lengths are a = |v0v1|, b = |v1v2|, c = |v2v3|, d = |v0v3|,
// e = |v0v2|, f = |v1v3|, so (a,c), (b,d), (e,f) are opposite pairs.

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <complex>
#include <string>

#include "regge/error.hpp"
#include "regge/exact.hpp"
#include "regge/matrix2.hpp"

namespace regge {

template <class T>
using Vec3 = std::array<T, 3>;

template <class T>
T dot(const Vec3<T>& u, const Vec3<T>& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

template <class T>
Vec3<T> operator+(const Vec3<T>& u, const Vec3<T>& v) {
  return {u[0] + v[0], u[1] + v[1], u[2] + v[2]};
}

/// phi(x,y,z) = 1/2 [[x, y+iz], [y-iz, -x]], an isometry onto traceless
/// Hermitian matrices with <A,B> = 2 Tr(AB).
template <class T>
Mat2<complex_of_t<T>> phi_embed(const Vec3<T>& v) {
  using S = complex_of_t<T>;
  const T half = T(1) / T(2);
  return {S(half * v[0]), S(half * v[1], half * v[2]), S(half * v[1], -half * v[2]), S(-half * v[0])};
}

template <class S>
real_of_t<S> inner(const Mat2<S>& a, const Mat2<S>& b) {
  return real_part(S(2) * (a * b).trace());
}

template <class T>
struct EdgeLengths {
  T a{}, b{}, c{}, d{}, e{}, f{};

  std::array<T, 6> as_array() const { return {a, b, c, d, e, f}; }
  static EdgeLengths from_array(const std::array<T, 6>& v) { return {v[0], v[1], v[2], v[3], v[4], v[5]}; }
  friend bool operator==(const EdgeLengths&, const EdgeLengths&) = default;
};

/// Squared norms of A1, A2, A3, A1+A2+A3, A1+A2, A2+A3 (in slot order).
template <class S>
EdgeLengths<real_of_t<S>> squared_edge_lengths(const Mat2<S>& a1, const Mat2<S>& a2, const Mat2<S>& a3) {
  const Mat2<S> s = a1 + a2 + a3, e = a1 + a2, f = a2 + a3;
  return {inner(a1, a1), inner(a2, a2), inner(a3, a3), inner(s, s), inner(e, e), inner(f, f)};
}

inline EdgeLengths<double> edge_lengths(const CMat2& a1, const CMat2& a2, const CMat2& a3) {
  auto sq = squared_edge_lengths(a1, a2, a3).as_array();
  std::array<double, 6> out{};
  for (std::size_t i = 0; i < 6; ++i) out[i] = std::sqrt(std::max(0.0, sq[i]));
  return EdgeLengths<double>::from_array(out);
}

/// Exact lengths; throws NotASquare when some length is irrational.
inline EdgeLengths<BigRational> edge_lengths(const QMat2& a1, const QMat2& a2, const QMat2& a3) {
  auto sq = squared_edge_lengths(a1, a2, a3).as_array();
  std::array<BigRational, 6> out{};
  for (std::size_t i = 0; i < 6; ++i) out[i] = rational_sqrt(sq[i]);
  return EdgeLengths<BigRational>::from_array(out);
}

template <class T>
EdgeLengths<T> squares(const EdgeLengths<T>& l) {
  return {l.a * l.a, l.b * l.b, l.c * l.c, l.d * l.d, l.e * l.e, l.f * l.f};
}

namespace detail {

template <class T, std::size_t N>
T laplace_det(const std::array<std::array<T, N>, N>& m) {
  if constexpr (N == 1) {
    return m[0][0];
  } else {
    T total = T(0);
    for (std::size_t col = 0; col < N; ++col) {
      if (m[0][col] == T(0)) continue;
      std::array<std::array<T, N - 1>, N - 1> minor{};
      for (std::size_t r = 1; r < N; ++r)
        for (std::size_t c = 0, k = 0; c < N; ++c)
          if (c != col) minor[r - 1][k++] = m[r][c];
      T term = m[0][col] * laplace_det(minor);
      if (col % 2 == 0)
        total += term;
      else
        total -= term;
    }
    return total;
  }
}

}  // namespace detail

/// Cayley-Menger determinant from squared lengths.
template <class T>
T cayley_menger_det_squared(const EdgeLengths<T>& sq) {
  const T z(0), one(1);
  const std::array<std::array<T, 5>, 5> m = {{{z, sq.a, sq.e, sq.d, one},
                                              {sq.a, z, sq.b, sq.f, one},
                                              {sq.e, sq.b, z, sq.c, one},
                                              {sq.d, sq.f, sq.c, z, one},
                                              {one, one, one, one, z}}};
  return detail::laplace_det(m);
}

/// Determinant of the bordered 5x5 matrix of squared lengths; equals 288 V^2.
template <class T>
T cayley_menger_det(const EdgeLengths<T>& l) {
  return cayley_menger_det_squared(squares(l));
}

/// (p-a, p-b, p-c, p-d, e, f) with p = (a+b+c+d)/2.
template <class T>
EdgeLengths<T> regge_lengths(const EdgeLengths<T>& l) {
  const T p = (l.a + l.b + l.c + l.d) / T(2);
  EdgeLengths<T> out{p - l.a, p - l.b, p - l.c, p - l.d, l.e, l.f};
  for (const T& x : out.as_array())
    if (x < T(0)) throw Error(Errc::NegativeLength, "Regge image has a negative length");
  return out;
}

template <class T>
bool strict_triangle(const T& x, const T& y, const T& z) {
  return x + y > z && y + z > x && z + x > y;
}

/// Face predicates in the order (abe), (cde), (adf), (bcf).
template <class T>
std::array<bool, 4> face_triangles(const EdgeLengths<T>& l) {
  return {strict_triangle(l.a, l.b, l.e), strict_triangle(l.c, l.d, l.e), strict_triangle(l.a, l.d, l.f),
          strict_triangle(l.b, l.c, l.f)};
}

template <class T>
bool is_euclidean_tetra(const EdgeLengths<T>& l) {
  for (const T& x : l.as_array())
    if (x < T(0)) return false;
  for (bool ok : face_triangles(l))
    if (!ok) return false;
  return cayley_menger_det(l) > T(0);
}

/// Vectors a1, a2, a3 with the given edge lengths: a1 along the x axis, a2 in
/// the xy plane, a3 with positive z (so det[a1 a2 a3] > 0).
inline std::array<Vec3<double>, 3> realize_from_lengths(const EdgeLengths<double>& l) {
  if (!is_euclidean_tetra(l)) throw Error(Errc::NotRealizable, "lengths do not bound a Euclidean tetrahedron");
  const double a2 = l.a * l.a, b2 = l.b * l.b, c2 = l.c * l.c, d2 = l.d * l.d, e2 = l.e * l.e, f2 = l.f * l.f;
  const double g12 = (e2 - a2 - b2) / 2;
  const double g23 = (f2 - b2 - c2) / 2;
  const double g13 = (d2 - a2 - b2 - c2) / 2 - g12 - g23;
  Eigen::Matrix3d gram;
  gram << a2, g12, g13, g12, b2, g23, g13, g23, c2;
  Eigen::LLT<Eigen::Matrix3d> llt(gram);
  if (llt.info() != Eigen::Success) throw Error(Errc::NotRealizable, "Gram matrix is not positive definite");
  const Eigen::Matrix3d lower = llt.matrixL();
  std::array<Vec3<double>, 3> out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = lower(i, j);
  return out;
}

/// Six spherical lengths l_i = arccos(Tr M_i / 2) for M1, M2, M3,
/// M4 = (M1 M2 M3)^-1, M5 = M1 M2, M6 = M2 M3, stored in slots (a,b,c,d,e,f).
inline EdgeLengths<double> spherical_lengths(const CMat2& m1, const CMat2& m2, const CMat2& m3) {
  auto len = [](const CMat2& m) { return std::acos(std::clamp(m.trace().real() / 2, -1.0, 1.0)); };
  const CMat2 m4 = (m1 * m2 * m3).adjugate();
  return {len(m1), len(m2), len(m3), len(m4), len(m1 * m2), len(m2 * m3)};
}

/// G_ij = cos(dist(v_i, v_j)) for the vertices I, M1, M1M2, M1M2M3 of S^3.
inline Eigen::Matrix4d spherical_gram(const EdgeLengths<double>& l) {
  Eigen::Matrix4d g = Eigen::Matrix4d::Identity();
  auto set = [&](int i, int j, double len) { g(i, j) = g(j, i) = std::cos(len); };
  set(0, 1, l.a);
  set(1, 2, l.b);
  set(2, 3, l.c);
  set(0, 3, l.d);
  set(0, 2, l.e);
  set(1, 3, l.f);
  return g;
}

inline double spherical_min_eigenvalue(const EdgeLengths<double>& l) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(spherical_gram(l), Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

/// True iff the cosine Gram matrix is PSD within `tol`.
inline bool spherical_realizable(const EdgeLengths<double>& l, double tol = 1e-9) {
  return spherical_min_eigenvalue(l) >= -tol;
}

}  // namespace regge
