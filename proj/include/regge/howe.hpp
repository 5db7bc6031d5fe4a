#pragma once

// Coupling-basis oracle for 6j coefficients built from the polynomial model
// of GL_k x GL_3 duality on k x 3 matrices.
//
// The multiplicity space of the GL_k irrep lambda inside
// Sym^a (x) Sym^b (x) Sym^c is realized as the polynomials of column degrees
// (a,b,c) and row degrees lambda that are killed by the raising operators.
// Coupling bases are eigenbases of the quadratic Casimir acting on columns
// {1,2} (1-2 coupling) or {2,3} (2-3 coupling), and U is the Fock inner
// product of unit coupling vectors.

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "regge/error.hpp"
#include "regge/exact.hpp"
#include "regge/poly.hpp"
#include "regge/racah.hpp"
#include "regge/tableaux.hpp"

namespace regge {

enum class WeightKind { Highest, Lowest };
enum class Coupling { First12, Last23 };

inline constexpr std::size_t kMaxMonomials = 200000;

struct MultSpaceBasis {
  int k = 2;
  std::array<long, 3> mu{};           // column degrees (a, b, c)
  Partition irrep;                    // highest weight of the GL_k irrep
  WeightKind kind = WeightKind::Highest;
  std::array<long, 3> row_degrees{};  // weight of the extremal vectors
  std::vector<Monomial> monomials;    // monomial basis of the graded piece
  std::vector<MultiPoly> basis;

  std::size_t dim() const { return basis.size(); }
};

namespace detail {

inline std::array<long, 3> extremal_weight(int k, const Partition& lambda, WeightKind kind) {
  if (lambda.length() > k) return {-1, -1, -1};
  if (kind == WeightKind::Highest) return lambda.rows;
  std::array<long, 3> w{0, 0, 0};
  for (int i = 0; i < k; ++i) w[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(k - 1 - i)];
  return w;
}

inline MultiPoly monomial_poly(int k, const Monomial& m) {
  MultiPoly p(k);
  p.add_term(m, 1);
  return p;
}

inline ExactMatrix coefficient_matrix(const std::vector<Monomial>& monomials, const std::vector<MultiPoly>& polys) {
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < monomials.size(); ++i) index.emplace(monomials[i], i);
  ExactMatrix m(monomials.size(), polys.size());
  for (std::size_t j = 0; j < polys.size(); ++j)
    for (const auto& [mono, c] : polys[j].terms()) {
      auto it = index.find(mono);
      if (it == index.end()) throw Error(Errc::ClosureFailure, "polynomial leaves the graded component");
      m(it->second, j) = c;
    }
  return m;
}

}  // namespace detail

/// Basis of the multiplicity space of `lambda` in S^mu C^k, realized as the
/// highest-weight (or lowest-weight) vectors of that weight. Empty when the
/// irrep does not occur.
inline MultSpaceBasis multiplicity_space(int k, const std::array<long, 3>& mu, const Partition& lambda,
                                         WeightKind kind = WeightKind::Highest) {
  if (k != 2 && k != 3) throw Error(Errc::InvalidArgument, "k must be 2 or 3");
  for (long m : mu)
    if (m < 0) throw Error(Errc::InvalidArgument, "negative column degree");
  MultSpaceBasis space;
  space.k = k;
  space.mu = mu;
  space.irrep = lambda;
  space.kind = kind;
  space.row_degrees = detail::extremal_weight(k, lambda, kind);
  if (space.row_degrees[0] < 0) return space;

  space.monomials = monomials_with_degrees(k, space.row_degrees, mu);
  if (space.monomials.size() > kMaxMonomials)
    throw Error(Errc::SpaceTooLarge, std::to_string(space.monomials.size()) + " monomials exceed the limit");
  if (space.monomials.empty()) return space;

  // Stack the simple raising (or lowering) operators into one linear map.
  std::map<std::pair<int, Monomial>, std::size_t> target_index;
  std::vector<std::vector<std::pair<std::size_t, BigRational>>> columns(space.monomials.size());
  for (std::size_t j = 0; j < space.monomials.size(); ++j) {
    const MultiPoly src = detail::monomial_poly(k, space.monomials[j]);
    for (int i = 0; i + 1 < k; ++i) {
      const MultiPoly img = kind == WeightKind::Highest ? polarize(src, i, i + 1) : polarize(src, i + 1, i);
      for (const auto& [mono, c] : img.terms()) {
        auto [it, inserted] = target_index.try_emplace({i, mono}, target_index.size());
        columns[j].emplace_back(it->second, c);
      }
    }
  }
  if (target_index.empty()) {
    for (const auto& mono : space.monomials) space.basis.push_back(detail::monomial_poly(k, mono));
    return space;
  }
  ExactMatrix op(target_index.size(), space.monomials.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (const auto& [row, c] : columns[j]) op(row, j) = c;

  for (const auto& v : nullspace(op)) {
    MultiPoly p(k);
    for (std::size_t j = 0; j < v.size(); ++j) p.add_term(space.monomials[j], v[j]);
    space.basis.push_back(std::move(p));
  }
  return space;
}

/// The same space with its polynomials viewed on matrices with more rows.
inline MultSpaceBasis embed(const MultSpaceBasis& space, int k) {
  MultSpaceBasis out = space;
  out.k = k;
  out.basis.clear();
  for (const auto& p : space.basis) out.basis.push_back(p.with_rows(k));
  return out;
}

inline std::vector<int> coupling_columns(Coupling mode) {
  return mode == Coupling::First12 ? std::vector<int>{0, 1} : std::vector<int>{1, 2};
}

/// sum_{i,j} E_ij E_ji with E_ij acting on the given columns only.
inline MultiPoly apply_casimir(const MultiPoly& f, const std::vector<int>& columns) {
  MultiPoly out(f.k());
  for (int i = 0; i < f.k(); ++i)
    for (int j = 0; j < f.k(); ++j) out += polarize(polarize(f, j, i, columns), i, j, columns);
  return out;
}

/// Matrix of the partial Casimir in the given basis (columns = images).
inline ExactMatrix casimir_matrix(const MultSpaceBasis& space, Coupling mode = Coupling::First12) {
  if (space.basis.empty()) throw Error(Errc::InvalidArgument, "casimir_matrix on an empty space");
  const auto cols = coupling_columns(mode);
  std::vector<MultiPoly> images;
  images.reserve(space.basis.size());
  for (const auto& b : space.basis) images.push_back(apply_casimir(b, cols));
  const ExactMatrix basis = detail::coefficient_matrix(space.monomials, space.basis);
  const ExactMatrix targets = detail::coefficient_matrix(space.monomials, images);
  return solve_in_span(basis, targets);
}

inline ExactMatrix casimir12_matrix(const MultSpaceBasis& space) { return casimir_matrix(space, Coupling::First12); }

/// Scalar by which sum_{ij} E_ij E_ji acts on the GL_k irrep m:
///   sum m_i^2 + sum_{i<j} (m_i - m_j).
inline long casimir_eigenvalue(const Partition& m, int k) {
  long v = 0;
  for (int i = 0; i < k; ++i) {
    v += m[static_cast<std::size_t>(i)] * m[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) v += m[static_cast<std::size_t>(i)] - m[static_cast<std::size_t>(j)];
  }
  return v;
}

/// Intermediate irreps allowed by the Pieri rule for the given bracketing.
inline std::vector<Partition> intermediate_labels(const MultSpaceBasis& space, Coupling mode) {
  const long first = mode == Coupling::First12 ? space.mu[0] : space.mu[1];
  const long second = mode == Coupling::First12 ? space.mu[1] : space.mu[2];
  const long third = mode == Coupling::First12 ? space.mu[2] : space.mu[0];
  std::vector<Partition> out;
  for (const auto& rho : pieri(Partition(first), second)) {
    if (rho.length() > space.k) continue;
    const auto next = pieri(rho, third);
    if (std::find(next.begin(), next.end(), space.irrep) != next.end()) out.push_back(rho);
  }
  return out;
}

struct CouplingVector {
  Partition label;  // intermediate irrep (r, s, 0); for SU(2), e = r - s
  Coupling mode = Coupling::First12;
  MultiPoly vec;    // unnormalized eigenvector
  BigRational norm2;  // Fock norm squared of vec

  long su2_label() const { return label[0] - label[1]; }
};

/// Coupling basis of the space for the given bracketing. Vectors are signed so
/// that the coefficient of the lexicographically smallest monomial is positive.
inline std::vector<CouplingVector> coupling_basis(const MultSpaceBasis& space, Coupling mode) {
  std::vector<CouplingVector> out;
  if (space.basis.empty()) return out;
  const auto labels = intermediate_labels(space, mode);
  std::vector<long> eigenvalues;
  for (const auto& rho : labels) eigenvalues.push_back(casimir_eigenvalue(rho, space.k));
  const auto split = eigensplit(casimir_matrix(space, mode), eigenvalues);

  for (const auto& rho : labels) {
    const auto& eig = split.at(casimir_eigenvalue(rho, space.k));
    if (eig.size() > 1)
      throw Error(Errc::MultiplicityFailure, "eigenspace for " + rho.to_string() + " has dimension " +
                                                 std::to_string(eig.size()));
    if (eig.empty()) continue;
    MultiPoly v(space.k);
    for (std::size_t i = 0; i < eig[0].size(); ++i) v += space.basis[i] * eig[0][i];
    if (v.terms().begin()->second < 0) v *= BigRational(-1);
    BigRational n2 = fock_inner(v, v);
    out.push_back({rho, mode, std::move(v), std::move(n2)});
  }
  return out;
}

inline std::vector<CouplingVector> coupling_basis(int k, const std::array<long, 3>& mu, const Partition& lambda,
                                                  Coupling mode) {
  return coupling_basis(multiplicity_space(k, mu, lambda), mode);
}

/// <v/|v|, w/|w|> under the Fock form, as an exact surd.
inline SignedSqrt unit_inner(const CouplingVector& v, const CouplingVector& w) {
  const BigRational ip = fock_inner(v.vec, w.vec);
  return SignedSqrt(sgn(ip), ip * ip / (v.norm2 * w.norm2));
}

/// All U(a,b,c,d,e,f) for fixed (a,b,c,d), keyed by (e, f).
inline std::map<std::pair<long, long>, SignedSqrt> u_oracle_table(long a, long b, long c, long d) {
  std::map<std::pair<long, long>, SignedSqrt> table;
  const long total = a + b + c + d;
  if (a < 0 || b < 0 || c < 0 || d < 0 || total % 2 != 0 || d > a + b + c) return table;
  const long p = total / 2, q = p - d;
  const auto space = multiplicity_space(2, {a, b, c}, Partition(p, q));
  const auto vs = coupling_basis(space, Coupling::First12);
  const auto ws = coupling_basis(space, Coupling::Last23);
  for (const auto& v : vs)
    for (const auto& w : ws) table.emplace(std::make_pair(v.su2_label(), w.su2_label()), unit_inner(v, w));
  return table;
}

/// U(a,b,c,d,e,f) = <v_e, w_f> computed in the polynomial model (k = 2).
inline SignedSqrt u_oracle(const SixJLabels& l) {
  const auto table = u_oracle_table(l.a, l.b, l.c, l.d);
  auto it = table.find({l.e, l.f});
  return it == table.end() ? SignedSqrt{} : it->second;
}

/// All U3(a,b,c,(p,q),rs,tu) for fixed (a,b,c,p,q), keyed by (rs, tu).
inline std::map<std::pair<Partition, Partition>, SignedSqrt> u3_oracle_table(long a, long b, long c, long p,
                                                                              long q) {
  std::map<std::pair<Partition, Partition>, SignedSqrt> table;
  if (!(p >= q && q >= 0) || a < 0 || b < 0 || c < 0 || p + q != a + b + c) return table;
  const auto space = multiplicity_space(3, {a, b, c}, Partition(p, q, 0));
  const auto vs = coupling_basis(space, Coupling::First12);
  const auto ws = coupling_basis(space, Coupling::Last23);
  for (const auto& v : vs)
    for (const auto& w : ws) table.emplace(std::make_pair(v.label, w.label), unit_inner(v, w));
  return table;
}

/// U3(a,b,c,lambda,rs,tu) = <v_rs, w_tu> for SU(3), symmetric a,b,c.
inline SignedSqrt u3_oracle(long a, long b, long c, const Partition& lambda, const Partition& rs,
                            const Partition& tu) {
  const auto table = u3_oracle_table(a, b, c, lambda[0], lambda[1]);
  auto it = table.find({rs, tu});
  return it == table.end() ? SignedSqrt{} : it->second;
}

inline MultiPoly determinant_power(long p) {
  MultiPoly out = MultiPoly::constant(3, 1);
  const MultiPoly det = MultiPoly::determinant();
  for (long i = 0; i < p; ++i) out = out * det;
  return out;
}

/// Coefficient of f*g along det^p: <f g, det^p> / <det^p, det^p>.
inline BigRational duality_pairing(const MultiPoly& f, const MultiPoly& g, long p, const MultiPoly& det_p) {
  if (f.k() != 3 || g.k() != 3) throw Error(Errc::InvalidArgument, "duality pairing needs k = 3");
  const MultiPoly prod = f * g;
  if (prod.is_zero()) return 0;
  const auto cols = prod.column_degrees();
  if (cols != std::array<long, 3>{p, p, p})
    throw Error(Errc::DegreeMismatch, "column degrees of the product are not all " + std::to_string(p));
  return fock_inner(prod, det_p) / fock_inner(det_p, det_p);
}

inline BigRational duality_pairing(const MultiPoly& f, const MultiPoly& g, long p) {
  return duality_pairing(f, g, p, determinant_power(p));
}

struct DualityBlock {
  Coupling mode = Coupling::First12;
  std::vector<Partition> left_labels;
  std::vector<Partition> right_labels;
  std::vector<std::vector<BigRational>> pairing;  // [left][right]
  bool pass = false;
};

struct DualityReport {
  long a = 0, b = 0, c = 0, p = 0, q = 0;
  std::vector<DualityBlock> blocks;
  std::vector<std::string> problems;
  bool pass() const { return problems.empty(); }
};

/// Pairs the coupling bases of the highest-weight space for (a,b,c,(p,q)) with
/// those of the lowest-weight space for (p-a,p-b,p-c,(p,p-q)) under
/// duality_pairing. Passes iff the pairing matrix is nonzero exactly on the
/// label correspondence (r,s) <-> (p-s,p-r), for both bracketings.
inline DualityReport check_duality_bases(long a, long b, long c, long p, long q) {
  DualityReport report{a, b, c, p, q, {}, {}};
  if (a > p || b > p || c > p || q > p || q < 0 || a + b + c != p + q) {
    report.problems.push_back("labels outside the duality domain");
    return report;
  }
  const auto left = multiplicity_space(3, {a, b, c}, Partition(p, q, 0), WeightKind::Highest);
  const auto right = multiplicity_space(3, {p - a, p - b, p - c}, Partition(p, p - q, 0), WeightKind::Lowest);
  if (left.dim() != right.dim())
    report.problems.push_back("dimension mismatch " + std::to_string(left.dim()) + " vs " +
                              std::to_string(right.dim()));
  const MultiPoly det_p = determinant_power(p);

  for (Coupling mode : {Coupling::First12, Coupling::Last23}) {
    DualityBlock block;
    block.mode = mode;
    const auto lv = coupling_basis(left, mode);
    const auto rv = coupling_basis(right, mode);
    for (const auto& v : lv) block.left_labels.push_back(v.label);
    for (const auto& w : rv) block.right_labels.push_back(w.label);
    block.pass = lv.size() == rv.size();
    for (const auto& v : lv) {
      std::vector<BigRational> row;
      const Partition partner(p - v.label[1], p - v.label[0], 0);
      for (const auto& w : rv) {
        BigRational x = duality_pairing(v.vec, w.vec, p, det_p);
        const bool corresponds = w.label == partner;
        if (corresponds == (x == 0)) {
          block.pass = false;
          report.problems.push_back(std::string(mode == Coupling::First12 ? "12" : "23") + " pairing " +
                                    v.label.to_string() + " x " + w.label.to_string() + " = " + to_string(x));
        }
        row.push_back(std::move(x));
      }
      block.pairing.push_back(std::move(row));
    }
    if (lv.size() != rv.size())
      report.problems.push_back("coupling bases of different sizes in mode " +
                                std::string(mode == Coupling::First12 ? "12" : "23"));
    report.blocks.push_back(std::move(block));
  }
  return report;
}

inline DualityReport check_duality_bases(long a, long b, long c, const Partition& lambda) {
  return check_duality_bases(a, b, c, lambda[0], lambda[1]);
}

}  // namespace regge
