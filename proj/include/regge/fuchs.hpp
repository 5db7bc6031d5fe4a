#pragma once

// Residue triples of a rank-two Fuchsian system with poles at 0, t, 1, infinity,
// their trace coordinates, and the Okamoto action in those coordinates.
//
// Notation: A4 = -(A1 + A2 + A3); theta_i with A_i having eigenvalues
// +-theta_i/2; hatted matrices Ah_i = A_i + theta_i/2 have rank one and trace
// theta_i; lambda_ij = Tr(Ah_i Ah_j); tau = Tr(Ah1 Ah2 Ah3), tau' = Tr(Ah3 Ah2 Ah1).

#include <array>
#include <cmath>
#include <complex>
#include <string>

#include "regge/error.hpp"
#include "regge/exact.hpp"
#include "regge/matrix2.hpp"
#include "regge/tetra.hpp"

namespace regge {

inline constexpr double kFuchsTol = 1e-10;

template <class S>
struct MatrixTriple {
  Mat2<S> a1, a2, a3;
  bool hermitian = false;

  Mat2<S> a4() const { return -(a1 + a2 + a3); }
  const Mat2<S>& operator[](int i) const { return i == 0 ? a1 : i == 1 ? a2 : a3; }
};

template <class S>
struct TraceCoords {
  std::array<S, 4> theta{};
  S lambda12{}, lambda23{}, lambda13{};
  S tau{}, tau_prime{};
};

using CTriple = MatrixTriple<std::complex<double>>;
using QTriple = MatrixTriple<GaussianRational>;
using CCoords = TraceCoords<std::complex<double>>;
using QCoords = TraceCoords<GaussianRational>;

/// Ah = A + theta/2 I, requiring Tr A^2 = theta^2/2.
template <class S>
Mat2<S> hat(const Mat2<S>& a, const S& theta, double tol = kFuchsTol) {
  const S half = S(1) / S(2);
  if (!same_value((a * a).trace(), theta * theta * half, tol))
    throw Error(Errc::EigenvalueMismatch, "Tr A^2 differs from theta^2/2");
  return a + Mat2<S>::scalar(theta * half);
}

/// lambda13 from the relation Tr A4^2 = Tr (A1+A2+A3)^2.
template <class S>
S lambda13_from(const std::array<S, 4>& th, const S& l12, const S& l23) {
  const S quarter = S(1) / S(4);
  const S num = th[3] * th[3] - th[0] * th[0] - th[1] * th[1] - th[2] * th[2] +
                S(2) * (th[0] * th[1] + th[0] * th[2] + th[1] * th[2]);
  return num * quarter - l12 - l23;
}

/// tau + tau' expressed through the other coordinates (trace identity for
/// rank-one factors).
template <class S>
S tau_sum_from(const TraceCoords<S>& c) {
  const auto& th = c.theta;
  return th[0] * c.lambda23 + th[1] * c.lambda13 + th[2] * c.lambda12 - th[0] * th[1] * th[2];
}

template <class S>
bool coords_consistent(const TraceCoords<S>& c, double tol = kFuchsTol) {
  return same_value(c.lambda13, lambda13_from(c.theta, c.lambda12, c.lambda23), tol) &&
         same_value(c.tau * c.tau_prime, c.lambda12 * c.lambda23 * c.lambda13, tol) &&
         same_value(c.tau + c.tau_prime, tau_sum_from(c), tol);
}

/// Trace coordinates with explicitly chosen theta_i.
template <class S>
TraceCoords<S> coordinates_with_theta(const MatrixTriple<S>& t, const std::array<S, 4>& theta,
                                      double tol = kFuchsTol) {
  const Mat2<S> h1 = hat(t.a1, theta[0], tol), h2 = hat(t.a2, theta[1], tol), h3 = hat(t.a3, theta[2], tol);
  hat(t.a4(), theta[3], tol);
  TraceCoords<S> c;
  c.theta = theta;
  c.lambda12 = (h1 * h2).trace();
  c.lambda23 = (h2 * h3).trace();
  c.lambda13 = (h1 * h3).trace();
  c.tau = (h1 * h2 * h3).trace();
  c.tau_prime = (h3 * h2 * h1).trace();
  if (!coords_consistent(c, tol * 100)) throw Error(Errc::InconsistentCoords, "trace identities fail");
  return c;
}

/// theta with the requested sign: s * sqrt(2 Tr A^2).
inline std::complex<double> theta_of(const CMat2& a, int sign) {
  const std::complex<double> root = std::sqrt(2.0 * (a * a).trace());
  return sign < 0 ? -root : root;
}

inline GaussianRational theta_of(const QMat2& a, int sign) {
  GaussianRational root;
  if (!gaussian_sqrt(GaussianRational(2) * (a * a).trace(), root))
    throw Error(Errc::DegenerateTriple, "theta = sqrt(2 Tr A^2) is not exact");
  return sign < 0 ? -root : root;
}

/// Trace coordinates with theta_i = signs_i * sqrt(2 Tr A_i^2). Throws
/// DegenerateTriple if a nonzero sign is requested for a residue with
/// theta = 0, or if no exact root exists in exact mode.
template <class S>
TraceCoords<S> coordinates(const MatrixTriple<S>& t, const std::array<int, 4>& signs = {1, 1, 1, 1},
                           double tol = kFuchsTol) {
  std::array<S, 4> theta{};
  const std::array<Mat2<S>, 4> res = {t.a1, t.a2, t.a3, t.a4()};
  for (std::size_t i = 0; i < 4; ++i) {
    if (signs[i] != 1 && signs[i] != -1) throw Error(Errc::InvalidArgument, "theta sign must be +1 or -1");
    theta[i] = theta_of(res[i], signs[i]);
  }
  return coordinates_with_theta(t, theta, tol);
}

/// Gauge-fixed triple with the given coordinates: Ah_i = u_i v_i^T with
/// u1 = e1, u2 = e2, p12 = v1.u2 = 1, p13 = v1.u3 = 1.
template <class S>
MatrixTriple<S> reconstruct(const TraceCoords<S>& c, double tol = kFuchsTol) {
  if (!coords_consistent(c, tol)) throw Error(Errc::InconsistentCoords, "coordinates violate the trace identities");
  const auto& th = c.theta;
  const S det = th[0] * th[1] - c.lambda12;
  if (is_zero_value(c.lambda12, tol) || is_zero_value(c.lambda13, tol) || is_zero_value(det, tol))
    throw Error(Errc::NonGeneric, "gauge p12 = p13 = 1 is not available");

  const S p23 = c.tau / c.lambda13;
  const S p32 = c.tau_prime / c.lambda12;
  // v1 = (theta1, 1), v2 = (lambda12, theta2); u3 solves v1.u3 = 1, v2.u3 = p23.
  const S x = (th[1] - p23) / det;
  const S y = (th[0] * p23 - c.lambda12) / det;
  const S v30 = c.lambda13, v31 = p32;
  if (!same_value(v30 * x + v31 * y, th[2], tol))
    throw Error(Errc::InconsistentCoords, "reconstructed Ah3 has the wrong trace");

  const S half = S(1) / S(2);
  const Mat2<S> h1{th[0], S(1), S(0), S(0)};
  const Mat2<S> h2{S(0), S(0), c.lambda12, th[1]};
  const Mat2<S> h3{x * v30, x * v31, y * v30, y * v31};
  MatrixTriple<S> t;
  t.a1 = h1 - Mat2<S>::scalar(th[0] * half);
  t.a2 = h2 - Mat2<S>::scalar(th[1] * half);
  t.a3 = h3 - Mat2<S>::scalar(th[2] * half);
  return t;
}

/// theta -> theta - phi with phi = sum(theta)/2; lambda12, lambda23, tau, tau'
/// fixed. lambda13 is recomputed and must agree with the old value.
template <class S>
TraceCoords<S> okamoto_coords(const TraceCoords<S>& c, double tol = kFuchsTol) {
  const S phi = (c.theta[0] + c.theta[1] + c.theta[2] + c.theta[3]) / S(2);
  TraceCoords<S> out = c;
  for (auto& th : out.theta) th = th - phi;
  out.lambda13 = lambda13_from(out.theta, out.lambda12, out.lambda23);
  if (!same_value(out.lambda13, c.lambda13, tol))
    throw Error(Errc::InconsistentCoords, "lambda13 changed under the Okamoto shift");
  return out;
}

template <class S>
std::array<S, 5> lemma_invariants(const TraceCoords<S>& c) {
  return {c.lambda12, c.lambda23, c.lambda13, c.tau, c.tau_prime};
}

inline constexpr std::array<const char*, 5> kLemmaNames = {"Tr(Ah1 Ah2)", "Tr(Ah2 Ah3)", "Tr(Ah1 Ah3)",
                                                           "Tr(Ah1 Ah2 Ah3)", "Tr(Ah3 Ah2 Ah1)"};

/// Tr A5^2, Tr A6^2, Tr (A1+A3)^2 with A5 = A1 + A2, A6 = A2 + A3.
template <class S>
std::array<S, 3> quadratic_invariants(const MatrixTriple<S>& t) {
  const Mat2<S> a5 = t.a1 + t.a2, a6 = t.a2 + t.a3, a13 = t.a1 + t.a3;
  return {(a5 * a5).trace(), (a6 * a6).trace(), (a13 * a13).trace()};
}

template <class S>
struct LemmaReport {
  bool pass = false;
  bool skipped = false;
  std::string reason;
  TraceCoords<S> before, after;
  MatrixTriple<S> transformed;
  std::array<S, 5> invariants_before{}, invariants_after{};
  std::array<S, 3> quadratic_before{}, quadratic_after{};
  double max_deviation = 0;
};

/// Applies okamoto_coords, rebuilds a triple, re-measures its coordinates, and
/// compares the five Lemma traces and the three quadratic traces.
template <class S>
LemmaReport<S> verify_lemma_invariants(const MatrixTriple<S>& t, const std::array<int, 4>& signs = {1, 1, 1, 1},
                                       double tol = kFuchsTol) {
  LemmaReport<S> r;
  try {
    r.before = coordinates(t, signs, tol);
    const TraceCoords<S> shifted = okamoto_coords(r.before, tol);
    r.transformed = reconstruct(shifted, tol);
    r.after = coordinates_with_theta(r.transformed, shifted.theta, tol);
  } catch (const Error& e) {
    if (e.code() == Errc::NonGeneric || e.code() == Errc::DegenerateTriple) {
      r.skipped = true;
      r.reason = e.what();
      return r;
    }
    r.reason = e.what();
    return r;
  }
  r.invariants_before = lemma_invariants(r.before);
  r.invariants_after = lemma_invariants(r.after);
  r.quadratic_before = quadratic_invariants(t);
  r.quadratic_after = quadratic_invariants(r.transformed);
  r.pass = true;
  auto compare = [&](const S& x, const S& y, const std::string& what) {
    r.max_deviation = std::max(r.max_deviation, magnitude(x - y) / std::max({1.0, magnitude(x), magnitude(y)}));
    if (!same_value(x, y, tol)) {
      r.pass = false;
      if (r.reason.empty()) r.reason = what + " not preserved";
    }
  };
  for (std::size_t i = 0; i < 5; ++i) compare(r.invariants_before[i], r.invariants_after[i], kLemmaNames[i]);
  const std::array<const char*, 3> quad = {"Tr A5^2", "Tr A6^2", "Tr (A1+A3)^2"};
  for (std::size_t i = 0; i < 3; ++i) compare(r.quadratic_before[i], r.quadratic_after[i], quad[i]);
  return r;
}

/// Squared lengths (theta1^2, .., theta4^2, (theta1-theta2)^2 + 4 lambda12,
/// (theta2-theta3)^2 + 4 lambda23); requires real theta and nonnegative squares.
template <class S>
EdgeLengths<real_of_t<S>> squared_edge_lengths_from_coords(const TraceCoords<S>& c, double tol = kFuchsTol) {
  using R = real_of_t<S>;
  const S e2 = (c.theta[0] - c.theta[1]) * (c.theta[0] - c.theta[1]) + S(4) * c.lambda12;
  const S f2 = (c.theta[1] - c.theta[2]) * (c.theta[1] - c.theta[2]) + S(4) * c.lambda23;
  const std::array<S, 6> vals = {c.theta[0] * c.theta[0], c.theta[1] * c.theta[1], c.theta[2] * c.theta[2],
                                 c.theta[3] * c.theta[3], e2, f2};
  for (const S& th : c.theta)
    if (!same_value(S(imag_part(th)), S(0), tol))
      throw Error(Errc::NotHermitianAdmissible, "theta is not real");
  const R floor = is_exact_v<S> ? R(0) : R(-tol);
  std::array<R, 6> out{};
  for (std::size_t i = 0; i < 6; ++i) {
    if (!same_value(S(imag_part(vals[i])), S(0), tol) || real_part(vals[i]) < floor)
      throw Error(Errc::NotHermitianAdmissible, "squared length is negative or complex");
    out[i] = real_part(vals[i]);
    if (out[i] < R(0)) out[i] = R(0);
  }
  return EdgeLengths<R>::from_array(out);
}

inline EdgeLengths<double> edge_lengths_from_coords(const CCoords& c, double tol = kFuchsTol) {
  auto sq = squared_edge_lengths_from_coords(c, tol);
  return {std::abs(c.theta[0].real()), std::abs(c.theta[1].real()), std::abs(c.theta[2].real()),
          std::abs(c.theta[3].real()), std::sqrt(sq.e), std::sqrt(sq.f)};
}

template <class S>
struct CorrespondenceReport {
  bool pass = false;
  std::string reason;
  // Squared lengths on both sides; exact mode compares squares.
  EdgeLengths<real_of_t<S>> okamoto_side{}, regge_side{};
  double max_deviation = 0;
};

/// Checks that the Okamoto shift of a Hermitian triple with positive thetas
/// produces the Regge-transformed tetrahedron.
template <class S>
CorrespondenceReport<S> verify_regge_correspondence(const MatrixTriple<S>& t, double tol = kFuchsTol) {
  using R = real_of_t<S>;
  CorrespondenceReport<S> r;
  try {
    for (int i = 0; i < 3; ++i)
      if (!is_hermitian(t[i], tol)) throw Error(Errc::NotHermitianAdmissible, "triple is not Hermitian");
    const TraceCoords<S> c = coordinates(t, {1, 1, 1, 1}, tol);
    for (const S& th : c.theta)
      if (!(real_part(th) > R(0))) throw Error(Errc::NotHermitianAdmissible, "theta must be positive");
    r.okamoto_side = squared_edge_lengths_from_coords(okamoto_coords(c, tol), tol);

    // Lengths of the tetrahedron: a..d are the thetas, e and f kept squared.
    const auto sq = squared_edge_lengths(t.a1, t.a2, t.a3);
    EdgeLengths<R> lengths{real_part(c.theta[0]), real_part(c.theta[1]), real_part(c.theta[2]),
                           real_part(c.theta[3]), R(0), R(0)};
    EdgeLengths<R> rl = squares(regge_lengths(lengths));
    rl.e = sq.e;
    rl.f = sq.f;
    r.regge_side = rl;
  } catch (const Error& e) {
    r.reason = e.what();
    return r;
  }
  r.pass = true;
  const auto lhs = r.okamoto_side.as_array(), rhs = r.regge_side.as_array();
  for (std::size_t i = 0; i < 6; ++i) {
    const double dev = magnitude(R(lhs[i] - rhs[i])) / std::max({1.0, magnitude(lhs[i]), magnitude(rhs[i])});
    r.max_deviation = std::max(r.max_deviation, dev);
    if (!same_value(lhs[i], rhs[i], tol)) {
      r.pass = false;
      r.reason = "edge " + std::string(1, "abcdef"[i]) + " differs";
    }
  }
  return r;
}

/// The triple (phi(a1), phi(a2), phi(a3)) attached to three vectors.
template <class T>
MatrixTriple<complex_of_t<T>> hermitian_triple(const Vec3<T>& a1, const Vec3<T>& a2, const Vec3<T>& a3) {
  return {phi_embed(a1), phi_embed(a2), phi_embed(a3), true};
}

}  // namespace regge
