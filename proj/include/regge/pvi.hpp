#pragma once

// Painleve VI with parameters given by theta:
//   alpha = (theta4 - 1)^2 / 2, beta = -theta1^2 / 2,
//   gamma = theta3^2 / 2,       delta = (1 - theta2^2) / 2,
// local Taylor solutions, and the Okamoto map y -> y + phi/x.

#include <array>
#include <cstddef>
#include <string>
#include <utility>

#include "regge/error.hpp"
#include "regge/mp_complex.hpp"
#include "regge/series.hpp"

namespace regge {

struct ThetaParams {
  std::array<MpComplex, 4> theta{};
  const MpComplex& operator[](std::size_t i) const { return theta[i]; }
  MpComplex& operator[](std::size_t i) { return theta[i]; }
};

struct PviParams {
  MpComplex alpha, beta, gamma, delta;
};

inline PviParams params_from_theta(const ThetaParams& th) {
  const MpComplex half(Real(0.5));
  const MpComplex one(1);
  return {half * (th[3] - one) * (th[3] - one), -(half * th[0] * th[0]), half * th[2] * th[2],
          half * (one - th[1] * th[1])};
}

inline MpComplex okamoto_phi(const ThetaParams& th) {
  return MpComplex(Real(0.5)) * (th[0] + th[1] + th[2] + th[3]);
}

/// theta - phi componentwise.
inline ThetaParams okamoto_theta(const ThetaParams& th) {
  const MpComplex phi = okamoto_phi(th);
  ThetaParams out = th;
  for (auto& x : out.theta) x = x - phi;
  return out;
}

/// Right-hand side of PVI for y'' at a point.
inline MpComplex pvi_rhs(const MpComplex& t, const MpComplex& y, const MpComplex& yp, const PviParams& p) {
  const MpComplex one(1), half(Real(0.5));
  const MpComplex y1 = y - one, yt = y - t, t1 = t - one;
  if (y.norm() == 0 || y1.norm() == 0 || yt.norm() == 0 || t.norm() == 0 || t1.norm() == 0)
    throw Error(Errc::PoleCollision, "y or t meets a singular point of PVI");
  const MpComplex first = half * (one / y + one / y1 + one / yt) * yp * yp;
  const MpComplex second = (one / t + one / t1 + one / yt) * yp;
  const MpComplex bracket =
      p.alpha + p.beta * t / (y * y) + p.gamma * t1 / (y1 * y1) + p.delta * t * t1 / (yt * yt);
  return first - second + y * y1 * yt / (t * t * t1 * t1) * bracket;
}

/// y'' minus the right-hand side of PVI.
inline MpComplex pvi_residual(const MpComplex& t, const MpComplex& y, const MpComplex& yp, const MpComplex& ypp,
                              const PviParams& p) {
  return ypp - pvi_rhs(t, y, yp, p);
}

/// The right-hand side of PVI evaluated on a series y(t).
inline MpSeries pvi_rhs_series(const MpSeries& y, const PviParams& p) {
  const MpComplex one(1), half(Real(0.5));
  const MpSeries t = MpSeries::variable(y.center(), y.order());
  const MpSeries yp = y.derivative();
  const MpSeries iy = y.reciprocal();
  const MpSeries iy1 = (y - one).reciprocal();
  const MpSeries iyt = (y - t).reciprocal();
  const MpSeries it = t.reciprocal();
  const MpSeries it1 = (t - one).reciprocal();

  const MpSeries first = half * ((iy + iy1 + iyt) * (yp * yp));
  const MpSeries second = (it + it1 + iyt) * yp;
  const MpSeries prefactor = y * (y - one) * (y - t) * (it * it) * (it1 * it1);
  const MpSeries bracket = MpSeries::constant(y.center(), y.order(), p.alpha) + p.beta * (t * (iy * iy)) +
                           p.gamma * ((t - one) * (iy1 * iy1)) + p.delta * (t * (t - one) * (iyt * iyt));
  return first - second + prefactor * bracket;
}

/// y'' - RHS as a series; meaningful through order N - 2.
inline MpSeries pvi_residual_series(const MpSeries& y, const PviParams& p) {
  return y.derivative().derivative() - pvi_rhs_series(y, p);
}

/// Taylor solution at t0 with y(t0) = y0, y'(t0) = y1, solved order by order:
/// c_{n+2} = [RHS]_n / ((n+2)(n+1)), where [RHS]_n only involves c_0..c_{n+1}.
inline MpSeries series_solution(const MpComplex& t0, const MpComplex& y0, const MpComplex& y1, const PviParams& p,
                                std::size_t order = 16) {
  if (order < 2) throw Error(Errc::InvalidArgument, "series order must be at least 2");
  const MpComplex one(1);
  if (t0.norm() == 0 || (t0 - one).norm() == 0) throw Error(Errc::SingularInitialData, "t0 must avoid 0 and 1");
  if (y0.norm() == 0 || (y0 - one).norm() == 0 || (y0 - t0).norm() == 0)
    throw Error(Errc::SingularInitialData, "y0 must avoid 0, 1 and t0");
  MpSeries y(t0, order);
  y[0] = y0;
  y[1] = y1;
  for (std::size_t n = 0; n + 2 <= order; ++n) {
    // Only c_0..c_{n+1} matter for [RHS]_n; evaluate on the truncation of that length.
    const MpSeries rhs = pvi_rhs_series(y.truncate(n + 1), p);
    y[n + 2] = rhs[n] / MpComplex(static_cast<int>((n + 2) * (n + 1)));
  }
  return y;
}

/// 2x = ((t-1) y' - theta1)/y + (y' - 1 - theta2)/(y - t) - (t y' + theta3)/(y - 1).
inline MpSeries x_series(const MpSeries& y, const ThetaParams& th) {
  const MpComplex one(1), half(Real(0.5));
  const MpSeries t = MpSeries::variable(y.center(), y.order());
  const MpSeries yp = y.derivative();
  const MpSeries two_x = ((t - one) * yp - th[0]) / y + (yp - (one + th[1])) / (y - t) - (t * yp + th[2]) / (y - one);
  return half * two_x;
}

/// (y + phi/x, theta - phi) with phi = sum(theta)/2. Undefined when x(t0) = 0.
inline std::pair<MpSeries, ThetaParams> okamoto_transform(const MpSeries& y, const ThetaParams& th) {
  const MpComplex phi = okamoto_phi(th);
  if (phi.norm() == 0) return {y, th};
  const MpSeries x = x_series(y, th);
  if (x[0].norm() == 0) throw Error(Errc::Undefined, "x(t0) = 0, the transformation is not defined");
  MpSeries out = y + phi * x.reciprocal();
  return {std::move(out), okamoto_theta(th)};
}

/// Largest |y'' - RHS| / max(1, |y''|) over `points` equally spaced points on
/// the circle |t - t0| = radius, using the polynomial of degree `order`.
inline Real max_relative_residual(const MpSeries& y, const PviParams& p, const Real& radius, int points,
                                  std::size_t order) {
  const MpSeries y0 = y.truncate(order);
  const MpSeries y1 = y0.derivative(), y2 = y1.derivative();
  Real worst = 0;
  const Real two_pi = 2 * pi_value<Real>();
  for (int k = 0; k < points; ++k) {
    const MpComplex h = MpComplex(radius) * unit_phase<Real>(Real(two_pi * k / points));
    const MpComplex t = y.center() + h;
    const MpComplex v0 = y0.evaluate(h), v1 = y1.evaluate(h), v2 = y2.evaluate(h);
    const Real res = pvi_residual(t, v0, v1, v2, p).abs();
    const Real scale = v2.abs() > 1 ? v2.abs() : Real(1);
    const Real rel = res / scale;
    if (rel > worst) worst = rel;
  }
  return worst;
}

/// Sign changes of theta1..theta3 (bits 0..2 of `mask`) and theta4 -> 2 - theta4
/// (bit 3). All of them leave the PVI parameters unchanged.
inline ThetaParams trivial_sym(const ThetaParams& th, unsigned mask) {
  if (mask > 0xF) throw Error(Errc::InvalidArgument, "mask has bits beyond 4");
  ThetaParams out = th;
  for (std::size_t i = 0; i < 3; ++i)
    if (mask & (1u << i)) out[i] = -out[i];
  if (mask & 8u) out[3] = MpComplex(2) - out[3];
  return out;
}

}  // namespace regge
