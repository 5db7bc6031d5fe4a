#pragma once

// Verification sweeps. Each returns a Report with instance counts, sorted
// failures carrying enough data to reproduce them, and the largest observed
// deviation for floating suites.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "regge/error.hpp"
#include "regge/exact.hpp"
#include "regge/fuchs.hpp"
#include "regge/howe.hpp"
#include "regge/pvi.hpp"
#include "regge/racah.hpp"
#include "regge/random.hpp"
#include "regge/tableaux.hpp"
#include "regge/tetra.hpp"

namespace regge {

struct Failure {
  std::string key;
  std::string detail;
};

struct Report {
  explicit Report(std::string name = {}) : suite(std::move(name)) {}

  std::string suite;
  long instances = 0;
  long skipped = 0;
  std::vector<Failure> failures;
  double max_deviation = 0;
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<std::pair<std::string, std::string>> stats;

  bool pass() const { return failures.empty() && instances > 0; }
  void fail(std::string key, std::string detail) { failures.push_back({std::move(key), std::move(detail)}); }
  void deviation(double d) {
    if (d > max_deviation || std::isnan(d)) max_deviation = d;
  }
  Report& finish() {
    std::sort(failures.begin(), failures.end(), [](const Failure& a, const Failure& b) { return a.key < b.key; });
    return *this;
  }
};

namespace detail {

inline std::string str(const SignedSqrt& s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

inline std::string sample_key(long i) {
  std::string s = std::to_string(i);
  return "sample " + std::string(s.size() < 6 ? 6 - s.size() : 0, '0') + s;
}

inline std::string tuple_key(std::initializer_list<long> xs) {
  std::string s = "(";
  bool first = true;
  for (long x : xs) {
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  }
  return s + ")";
}

inline bool surd_sum_equals(SurdSum s, long target) {
  if (target != 0) s.add(SignedSqrt(target > 0 ? -1 : 1, BigRational(target * target)));
  return s.is_zero();
}

}  // namespace detail

/// sixj(l) = sixj(regge(l)) for all valid labels <= max_label.
inline Report verify_regge(long max_label) {
  Report r{"regge"};
  r.config = {{"max", std::to_string(max_label)}};
  for (const auto& l : valid_labels(max_label)) {
    ++r.instances;
    const SixJLabels g = regge(l);
    if (!is_valid(g)) {
      r.fail(l.to_string(), "Regge image " + g.to_string() + " is not a valid symbol");
      continue;
    }
    const SignedSqrt x = sixj(l), y = sixj(g);
    if (!(x == y)) r.fail(l.to_string(), "sixj " + detail::str(x) + " vs image " + detail::str(y));
    if (!(regge(g) == l)) r.fail(l.to_string(), "Regge map is not an involution here");
  }
  return r.finish();
}

/// sixj is constant on the 24 tetrahedral relabellings.
inline Report verify_orbit(long max_label) {
  Report r{"orbit"};
  r.config = {{"max", std::to_string(max_label)}};
  for (const auto& l : valid_labels(max_label)) {
    ++r.instances;
    const SignedSqrt x = sixj(l);
    for (const auto& perm : tetrahedral_group()) {
      const SixJLabels m = permute(l, perm);
      if (!is_valid(m)) {
        r.fail(l.to_string(), "relabelling " + m.to_string() + " is not valid");
        continue;
      }
      if (!(sixj(m) == x)) r.fail(l.to_string(), "relabelling " + m.to_string() + " gives " + detail::str(sixj(m)));
    }
  }
  return r.finish();
}

/// Admissible intermediate labels of the U matrix for fixed (a,b,c,d).
inline std::pair<std::vector<long>, std::vector<long>> u_matrix_labels(long a, long b, long c, long d) {
  std::vector<long> es, fs;
  for (long e = 0; e <= std::max(a + b, c + d); ++e)
    if (triangle_ok(a, b, e) && triangle_ok(c, d, e)) es.push_back(e);
  for (long f = 0; f <= std::max(a + d, b + c); ++f)
    if (triangle_ok(a, d, f) && triangle_ok(b, c, f)) fs.push_back(f);
  return {es, fs};
}

/// Exact orthonormality of rows and columns of [U(a,b,c,d,e,f)]_{e,f}.
inline Report verify_orthogonality(long max_label) {
  Report r{"orthogonality"};
  r.config = {{"max", std::to_string(max_label)}};
  for (long a = 0; a <= max_label; ++a)
    for (long b = 0; b <= max_label; ++b)
      for (long c = 0; c <= max_label; ++c)
        for (long d = 0; d <= max_label; ++d) {
          if ((a + b + c + d) % 2 != 0) continue;
          const auto [es, fs] = u_matrix_labels(a, b, c, d);
          if (es.empty() && fs.empty()) continue;
          ++r.instances;
          const std::string key = detail::tuple_key({a, b, c, d});
          if (es.size() != fs.size()) {
            r.fail(key, "U matrix is not square");
            continue;
          }
          std::vector<std::vector<SignedSqrt>> u(es.size(), std::vector<SignedSqrt>(fs.size()));
          for (std::size_t i = 0; i < es.size(); ++i)
            for (std::size_t j = 0; j < fs.size(); ++j) u[i][j] = u_coeff({a, b, c, d, es[i], fs[j]});
          const std::size_t n = es.size();
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = i; k < n; ++k) {
              SurdSum row, col;
              for (std::size_t j = 0; j < n; ++j) {
                row += u[i][j] * u[k][j];
                col += u[j][i] * u[j][k];
              }
              const long target = i == k ? 1 : 0;
              if (!detail::surd_sum_equals(row, target))
                r.fail(key, "rows e=" + std::to_string(es[i]) + "," + std::to_string(es[k]));
              if (!detail::surd_sum_equals(col, target))
                r.fail(key, "columns f=" + std::to_string(fs[i]) + "," + std::to_string(fs[k]));
            }
        }
  return r.finish();
}

/// |u_oracle| = |u_coeff| for every valid symbol with labels <= max_label.
inline Report verify_oracle(long max_label) {
  Report r{"oracle"};
  r.config = {{"max", std::to_string(max_label)}};
  for (long a = 0; a <= max_label; ++a)
    for (long b = 0; b <= max_label; ++b)
      for (long c = 0; c <= max_label; ++c)
        for (long d = 0; d <= max_label; ++d) {
          if ((a + b + c + d) % 2 != 0) continue;
          const auto table = u_oracle_table(a, b, c, d);
          for (long e = 0; e <= max_label; ++e)
            for (long f = 0; f <= max_label; ++f) {
              const SixJLabels l{a, b, c, d, e, f};
              if (!is_valid(l)) continue;
              ++r.instances;
              auto it = table.find({e, f});
              const SignedSqrt oracle = it == table.end() ? SignedSqrt{} : it->second;
              const SignedSqrt racah = u_coeff(l);
              if (!(oracle.abs() == racah.abs()))
                r.fail(l.to_string(), "oracle " + detail::str(oracle) + " racah " + detail::str(racah));
            }
        }
  return r.finish();
}

/// |u3_oracle(a,b,c,(p,q),(r,s),(t,u))| = |u_oracle(a,b,c,p-q,r-s,t-u)| for p <= max_p.
inline Report verify_u3(long max_p) {
  Report r{"u3"};
  r.config = {{"max_p", std::to_string(max_p)}};
  for (long p = 0; p <= max_p; ++p)
    for (long q = 0; q <= p; ++q)
      for (long a = 0; a <= p + q; ++a)
        for (long b = 0; a + b <= p + q; ++b) {
          const long c = p + q - a - b, d = p - q;
          const auto t3 = u3_oracle_table(a, b, c, p, q);
          const auto t2 = u_oracle_table(a, b, c, d);
          for (const auto& [labels, v3] : t3) {
            ++r.instances;
            const long e = labels.first[0] - labels.first[1], f = labels.second[0] - labels.second[1];
            auto it = t2.find({e, f});
            const SignedSqrt v2 = it == t2.end() ? SignedSqrt{} : it->second;
            if (!(v2.abs() == v3.abs()))
              r.fail(detail::tuple_key({a, b, c, p, q}) + " " + labels.first.to_string() + labels.second.to_string(),
                     "U3 " + detail::str(v3) + " U " + detail::str(v2));
          }
          // Every k = 2 entry must appear on the k = 3 side as well.
          for (const auto& [ef, v2] : t2) {
            const Partition rs((a + b + ef.first) / 2, (a + b - ef.first) / 2);
            const Partition tu((b + c + ef.second) / 2, (b + c - ef.second) / 2);
            if (!t3.count({rs, tu}) && !v2.is_zero())
              r.fail(detail::tuple_key({a, b, c, p, q}), "U entry " + detail::tuple_key({ef.first, ef.second}) +
                                                             " has no SU(3) counterpart");
          }
        }
  return r.finish();
}

/// Regge lift of U3 and the duality pairing check for p <= max_p.
inline Report verify_duality(long max_p) {
  Report r{"duality"};
  r.config = {{"max_p", std::to_string(max_p)}};
  long pairings = 0;
  for (long p = 0; p <= max_p; ++p)
    for (long q = 0; q <= p; ++q)
      for (long a = 0; a <= p; ++a)
        for (long b = 0; b <= p; ++b) {
          const long c = p + q - a - b;
          if (c < 0 || c > p) continue;
          const std::string key = detail::tuple_key({a, b, c, p, q});
          const auto t3 = u3_oracle_table(a, b, c, p, q);
          const auto dual = u3_oracle_table(p - a, p - b, p - c, p, p - q);
          for (const auto& [labels, v] : t3) {
            ++r.instances;
            const Partition rs(p - labels.first[1], p - labels.first[0]);
            const Partition tu(p - labels.second[1], p - labels.second[0]);
            auto it = dual.find({rs, tu});
            const SignedSqrt w = it == dual.end() ? SignedSqrt{} : it->second;
            if (!(v.abs() == w.abs()))
              r.fail(key + " " + labels.first.to_string() + labels.second.to_string(),
                     "U3 " + detail::str(v) + " dual " + detail::str(w));
          }
          const DualityReport rep = check_duality_bases(a, b, c, p, q);
          ++pairings;
          for (const auto& problem : rep.problems) r.fail(key + " pairing", problem);
        }
  r.stats = {{"duality_pairings", std::to_string(pairings)}};
  return r.finish();
}

/// GT counts against multiplicity-space dimensions for k = 2, 3 and the
/// Casimir shift C3 - C2 = (a+b) I, for p <= max_p.
inline Report verify_dimension(long max_p) {
  Report r{"dimension"};
  r.config = {{"max_p", std::to_string(max_p)}};
  long casimir_checks = 0;
  for (long p = 0; p <= max_p; ++p)
    for (long q = 0; q <= p; ++q)
      for (long a = 0; a <= p + q; ++a)
        for (long b = 0; a + b <= p + q; ++b) {
          const long c = p + q - a - b;
          const std::array<long, 3> mu{a, b, c};
          ++r.instances;
          const std::string key = detail::tuple_key({a, b, c, p, q});
          const long gt = gt_count(p, q, mu);
          const MultSpaceBasis s3 = multiplicity_space(3, mu, Partition(p, q, 0));
          const MultSpaceBasis s2 = multiplicity_space(2, mu, Partition(p, q));
          if (static_cast<long>(s3.dim()) != gt || static_cast<long>(s2.dim()) != gt) {
            r.fail(key, "gt " + std::to_string(gt) + " k3 " + std::to_string(s3.dim()) + " k2 " +
                            std::to_string(s2.dim()));
            continue;
          }
          if (gt == 0) continue;
          const MultSpaceBasis lifted = embed(s2, 3);
          if (lifted.basis != s3.basis) {
            r.fail(key, "k = 2 basis does not embed onto the k = 3 basis");
            continue;
          }
          ++casimir_checks;
          const ExactMatrix diff = casimir12_matrix(s3) - casimir12_matrix(s2);
          ExactMatrix expected = ExactMatrix::identity(s3.dim());
          for (std::size_t i = 0; i < s3.dim(); ++i) expected(i, i) = BigRational(a + b);
          if (!(diff == expected)) r.fail(key, "Casimir shift differs from (a+b) I");
        }
  r.stats = {{"casimir_checks", std::to_string(casimir_checks)}};
  return r.finish();
}

/// The 12 face-triangle slacks x + y - z; Regge permutes them.
template <class T>
std::array<T, 12> triangle_slacks(const EdgeLengths<T>& l) {
  std::array<T, 12> out{};
  std::size_t k = 0;
  const std::array<std::array<T, 3>, 4> faces = {
      {{l.a, l.b, l.e}, {l.c, l.d, l.e}, {l.a, l.d, l.f}, {l.b, l.c, l.f}}};
  for (const auto& f : faces) {
    out[k++] = f[0] + f[1] - f[2];
    out[k++] = f[1] + f[2] - f[0];
    out[k++] = f[2] + f[0] - f[1];
  }
  return out;
}

/// Random rational lengths in [0, 6] with denominators <= 8, resampled until
/// the Regge image is nonnegative.
inline EdgeLengths<BigRational> random_admissible_lengths(Rng& rng) {
  while (true) {
    std::array<BigRational, 6> v;
    for (auto& x : v) x = rng.rational(0, 6, 8);
    const auto l = EdgeLengths<BigRational>::from_array(v);
    const BigRational p = (l.a + l.b + l.c + l.d) / 2;
    if (p >= l.a && p >= l.b && p >= l.c && p >= l.d) return l;
  }
}

/// Exact CM invariance and preservation of Euclidean realizability.
inline Report verify_cm(long samples, std::uint64_t seed) {
  Report r{"cm"};
  r.config = {{"samples", std::to_string(samples)}, {"seed", std::to_string(seed)}, {"prng", Rng::kName}};
  Rng rng(seed);
  long euclidean = 0;
  for (long i = 0; i < samples; ++i) {
    const auto l = random_admissible_lengths(rng);
    const auto g = regge_lengths(l);
    ++r.instances;
    std::string lengths;
    for (const auto& x : l.as_array()) lengths += to_string(x) + " ";
    const std::string key = detail::sample_key(i);
    if (cayley_menger_det(l) != cayley_menger_det(g)) r.fail(key, "CM determinant changed for " + lengths);
    const bool e0 = is_euclidean_tetra(l), e1 = is_euclidean_tetra(g);
    euclidean += e0 ? 1 : 0;
    if (e0 != e1) r.fail(key, "Euclidean realizability changed for " + lengths);
    auto s0 = triangle_slacks(l), s1 = triangle_slacks(g);
    std::sort(s0.begin(), s0.end());
    std::sort(s1.begin(), s1.end());
    if (s0 != s1) r.fail(key, "triangle inequalities not permuted for " + lengths);
  }
  r.stats = {{"euclidean", std::to_string(euclidean)}};
  return r.finish();
}

inline std::complex<double> random_complex(Rng& rng) { return {rng.normal(), rng.normal()}; }

inline CTriple random_complex_triple(Rng& rng) {
  CTriple t;
  for (CMat2* m : {&t.a1, &t.a2, &t.a3}) {
    const auto a = random_complex(rng), b = random_complex(rng), c = random_complex(rng);
    *m = {a, b, c, -a};
  }
  return t;
}

/// Random Hermitian triple from Gaussian vectors, resampled until the
/// tetrahedron is comfortably nondegenerate.
inline CTriple random_hermitian_triple(Rng& rng) {
  while (true) {
    Vec3<double> v[3];
    for (auto& x : v) x = {rng.normal(), rng.normal(), rng.normal()};
    const double vol = v[0][0] * (v[1][1] * v[2][2] - v[1][2] * v[2][1]) -
                       v[0][1] * (v[1][0] * v[2][2] - v[1][2] * v[2][0]) +
                       v[0][2] * (v[1][0] * v[2][1] - v[1][1] * v[2][0]);
    const double scale = std::sqrt(dot(v[0], v[0]) * dot(v[1], v[1]) * dot(v[2], v[2]));
    const Vec3<double> s = v[0] + v[1] + v[2];
    if (std::abs(vol) < 1e-2 * scale || dot(s, s) < 1e-2) continue;
    return hermitian_triple(v[0], v[1], v[2]);
  }
}

/// Rational vector of rational length `len`, direction from inverse
/// stereographic projection of (s, t).
inline Vec3<BigRational> rational_direction(const BigRational& s, const BigRational& t, const BigRational& len) {
  const BigRational n = s * s + t * t + 1;
  return {len * 2 * s / n, len * 2 * t / n, len * (s * s + t * t - 1) / n};
}

/// Rational vectors a1, a2, a3 such that |a1|, |a2|, |a3| and |a1+a2+a3| are
/// rational and the tetrahedron is nondegenerate. Returns the Hermitian triple.
inline QTriple random_rational_hermitian_triple(Rng& rng) {
  while (true) {
    const auto a1 = rational_direction(rng.rational(-3, 3, 4), rng.rational(-3, 3, 4), rng.rational(1, 3, 4));
    const auto a2 = rational_direction(rng.rational(-3, 3, 4), rng.rational(-3, 3, 4), rng.rational(1, 3, 4));
    const auto w = rational_direction(rng.rational(-3, 3, 4), rng.rational(-3, 3, 4), BigRational(1));
    if (a1[0] == 0 && a1[1] == 0 && a1[2] == 0) continue;
    const Vec3<BigRational> s = a1 + a2;
    const BigRational sigma = dot(s, s), k = dot(s, w);
    const BigRational m = rng.rational(-4, 4, 4);
    if (m == k) continue;
    // |s + t w|^2 = (t + m)^2 for this t.
    const BigRational t = (m * m - sigma) / (2 * (k - m));
    if (t == 0 || abs(t) < BigRational(1, 4) || abs(t) > 4 || t + m == 0) continue;
    const Vec3<BigRational> a3 = {t * w[0], t * w[1], t * w[2]};
    const BigRational vol = a1[0] * (a2[1] * a3[2] - a2[2] * a3[1]) - a1[1] * (a2[0] * a3[2] - a2[2] * a3[0]) +
                            a1[2] * (a2[0] * a3[1] - a2[1] * a3[0]);
    const double scale = std::sqrt(dot(a1, a1).get_d() * dot(a2, a2).get_d() * dot(a3, a3).get_d());
    if (std::abs(vol.get_d()) < 1e-2 * scale) continue;
    return hermitian_triple(a1, a2, a3);
  }
}

/// Okamoto invariants on random complex (non-Hermitian) triples.
inline Report verify_lemma(long samples, std::uint64_t seed, double tol = kFuchsTol) {
  Report r{"lemma"};
  r.config = {{"samples", std::to_string(samples)}, {"seed", std::to_string(seed)}, {"prng", Rng::kName}};
  Rng rng(seed);
  for (long i = 0; i < samples; ++i) {
    const CTriple t = random_complex_triple(rng);
    const auto rep = verify_lemma_invariants(t, {1, 1, 1, 1}, tol);
    if (rep.skipped) {
      ++r.skipped;
      continue;
    }
    ++r.instances;
    r.deviation(rep.max_deviation);
    if (!rep.pass) r.fail(detail::sample_key(i), rep.reason);
  }
  return r.finish();
}

/// Regge correspondence and Lemma invariants on Hermitian triples: `samples`
/// floating triples at tolerance `tol` and `exact_samples` rational triples.
inline Report verify_theorem(long samples, long exact_samples, std::uint64_t seed, double tol = kFuchsTol) {
  Report r{"theorem"};
  r.config = {{"samples", std::to_string(samples)},
              {"exact_samples", std::to_string(exact_samples)},
              {"seed", std::to_string(seed)},
              {"tolerance", "1e-10"},
              {"prng", Rng::kName}};
  Rng rng(seed);
  long lemma_checked = 0;
  for (long i = 0; i < samples; ++i) {
    const CTriple t = random_hermitian_triple(rng);
    ++r.instances;
    const std::string key = "float " + detail::sample_key(i);
    const auto corr = verify_regge_correspondence(t, tol);
    r.deviation(corr.max_deviation);
    if (!corr.pass) r.fail(key, corr.reason);
    const auto lemma = verify_lemma_invariants(t, {1, 1, 1, 1}, tol);
    if (lemma.skipped) {
      ++r.skipped;
    } else {
      ++lemma_checked;
      r.deviation(lemma.max_deviation);
      if (!lemma.pass) r.fail(key, "lemma: " + lemma.reason);
    }
  }
  for (long i = 0; i < exact_samples; ++i) {
    const QTriple t = random_rational_hermitian_triple(rng);
    ++r.instances;
    const std::string key = "exact " + detail::sample_key(i);
    const auto corr = verify_regge_correspondence(t);
    if (!corr.pass) r.fail(key, corr.reason);
    const auto lemma = verify_lemma_invariants(t);
    if (lemma.skipped) {
      ++r.skipped;
    } else {
      ++lemma_checked;
      if (!lemma.pass) r.fail(key, "lemma: " + lemma.reason);
    }
  }
  r.stats = {{"lemma_checked", std::to_string(lemma_checked)}};
  return r.finish();
}

struct BacklundSeed {
  std::array<double, 4> theta{};
  double t0 = 0, y0 = 0, y1 = 0;
};

/// Seeds with theta_i in [-2, 2], t0 in [2.5, 4], y0 in [1.5, 3], y1 in [-1, 1].
inline BacklundSeed random_backlund_seed(Rng& rng) {
  BacklundSeed s;
  for (auto& th : s.theta) th = rng.uniform(-2, 2);
  s.t0 = rng.uniform(2.5, 4);
  s.y0 = rng.uniform(1.5, 3);
  s.y1 = rng.uniform(-1, 1);
  return s;
}

/// Okamoto images of local series solutions solve PVI with the shifted theta.
/// Seeds within 0.5 of a singular configuration are rejected and counted as
/// skipped.
inline Report verify_backlund(long samples, std::uint64_t seed, unsigned precision_bits = 60, std::size_t order = 16,
                              double radius = 0.05, int points = 5, double tol = 1e-10) {
  Report r{"backlund"};
  r.config = {{"samples", std::to_string(samples)},   {"seed", std::to_string(seed)},
              {"precision_bits", std::to_string(precision_bits)}, {"order", std::to_string(order)},
              {"radius", std::to_string(radius)},     {"points", std::to_string(points)},
              {"prng", Rng::kName}};
  PrecisionScope scope(precision_bits);
  Rng rng(seed);
  const double margin = 0.5;
  long accepted = 0;
  while (accepted < samples) {
    const BacklundSeed s = random_backlund_seed(rng);
    if (std::abs(s.y0 - s.t0) < margin) {
      ++r.skipped;
      continue;
    }
    ThetaParams th;
    for (std::size_t i = 0; i < 4; ++i) th[i] = MpComplex(Real(s.theta[i]));
    const MpComplex t0(Real(s.t0));
    const MpSeries y = series_solution(t0, MpComplex(Real(s.y0)), MpComplex(Real(s.y1)), params_from_theta(th), order);
    const MpSeries x = x_series(y, th);
    if (x[0].abs() < margin) {
      ++r.skipped;
      continue;
    }
    const auto [yh, thp] = okamoto_transform(y, th);
    const MpComplex c0 = yh[0];
    if (c0.abs() < margin || (c0 - MpComplex(1)).abs() < margin || (c0 - t0).abs() < margin) {
      ++r.skipped;
      continue;
    }
    ++r.instances;
    const std::string key = detail::sample_key(accepted++);
    const Real res = max_relative_residual(yh, params_from_theta(thp), Real(radius), points, order);
    const double dev = static_cast<double>(res);
    r.deviation(dev);
    std::ostringstream data;
    data.precision(17);
    data << "theta=(" << s.theta[0] << "," << s.theta[1] << "," << s.theta[2] << "," << s.theta[3]
         << ") t0=" << s.t0 << " y0=" << s.y0 << " y1=" << s.y1 << " residual=" << dev;
    if (!(dev < tol)) r.fail(key, data.str());
    const ThetaParams back = okamoto_theta(thp);
    for (std::size_t i = 0; i < 4; ++i)
      if ((back[i] - th[i]).abs() > Real(1e-15)) r.fail(key, "theta shift is not an involution");
  }
  return r.finish();
}

/// Haar-random SU(2) element from a normalized Gaussian 4-vector.
inline CMat2 random_su2(Rng& rng) {
  double q[4];
  double n = 0;
  do {
    n = 0;
    for (double& x : q) {
      x = rng.normal();
      n += x * x;
    }
  } while (n < 1e-12);
  n = std::sqrt(n);
  for (double& x : q) x /= n;
  return {{q[0], q[1]}, {q[2], q[3]}, {-q[2], q[3]}, {q[0], -q[1]}};
}

/// Spherical Regge map preserves realizability on random SU(2) triples.
inline Report verify_spherical(long samples, std::uint64_t seed, double tol = 1e-9) {
  Report r{"spherical"};
  r.config = {{"samples", std::to_string(samples)},
              {"seed", std::to_string(seed)},
              {"tolerance", "1e-9"},
              {"prng", Rng::kName}};
  Rng rng(seed);
  double worst_before = 1e300, worst_after = 1e300;
  for (long i = 0; i < samples; ++i) {
    const CMat2 m1 = random_su2(rng), m2 = random_su2(rng), m3 = random_su2(rng);
    const auto l = spherical_lengths(m1, m2, m3);
    ++r.instances;
    const std::string key = detail::sample_key(i);
    const double before = spherical_min_eigenvalue(l);
    worst_before = std::min(worst_before, before);
    if (before < -tol) r.fail(key, "lengths of an SU(2) triple are not realizable");
    EdgeLengths<double> g;
    try {
      g = regge_lengths(l);
    } catch (const Error& e) {
      r.fail(key, e.what());
      continue;
    }
    const double after = spherical_min_eigenvalue(g);
    worst_after = std::min(worst_after, after);
    r.deviation(std::max(0.0, -after));
    if (after < -tol) {
      std::ostringstream os;
      os.precision(17);
      os << "min eigenvalue after Regge " << after;
      r.fail(key, os.str());
    }
  }
  std::ostringstream b, a;
  b.precision(6);
  a.precision(6);
  b << worst_before;
  a << worst_after;
  r.stats = {{"min_eigenvalue_before", b.str()}, {"min_eigenvalue_after", a.str()}};
  return r.finish();
}

}  // namespace regge
