#include <gtest/gtest.h>

#include "regge/howe.hpp"
#include "regge/racah.hpp"

using namespace regge;

namespace {

MultiPoly x(int k, int row, int col) { return MultiPoly::variable(k, row - 1, col - 1); }

MultiPoly minor2(int k, int c1, int c2) { return x(k, 1, c1) * x(k, 2, c2) - x(k, 1, c2) * x(k, 2, c1); }

// Coefficient r with v = r w, or nullopt if the polynomials are not proportional.
std::optional<BigRational> ratio(const MultiPoly& v, const MultiPoly& w) {
  if (v.terms().size() != w.terms().size() || w.is_zero()) return std::nullopt;
  const BigRational r = v.terms().begin()->second / w.terms().begin()->second;
  if (!(v == w * r)) return std::nullopt;
  return r;
}

}  // namespace

TEST(Raising, Examples) {
  EXPECT_TRUE(raising_operator_apply(MultiPoly::constant(2, 1), 1, 2).is_zero());
  EXPECT_EQ(raising_operator_apply(x(2, 2, 1), 1, 2), x(2, 1, 1));
  EXPECT_TRUE(raising_operator_apply(x(2, 1, 1), 1, 2).is_zero());
  EXPECT_THROW(raising_operator_apply(x(2, 1, 1), 2, 1), Error);
  EXPECT_THROW(raising_operator_apply(x(2, 1, 1), 1, 3), Error);
}

TEST(Raising, IsADerivation) {
  const MultiPoly f = x(3, 2, 1) * x(3, 3, 2) + x(3, 1, 3);
  const MultiPoly g = x(3, 2, 2) * x(3, 2, 3) - x(3, 3, 1);
  for (auto [i, j] : {std::pair{1, 2}, std::pair{2, 3}, std::pair{1, 3}}) {
    const MultiPoly lhs = raising_operator_apply(f * g, i, j);
    const MultiPoly rhs = raising_operator_apply(f, i, j) * g + f * raising_operator_apply(g, i, j);
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(Raising, KillsDeterminant) {
  const MultiPoly det = MultiPoly::determinant();
  EXPECT_TRUE(raising_operator_apply(det, 1, 2).is_zero());
  EXPECT_TRUE(raising_operator_apply(det, 2, 3).is_zero());
  EXPECT_TRUE(raising_operator_apply(minor2(2, 1, 3), 1, 2).is_zero());
}

TEST(Fock, Examples) {
  const MultiPoly x11 = x(3, 1, 1);
  EXPECT_EQ(fock_inner(x11 * x11, x11 * x11), 2);
  EXPECT_EQ(fock_inner(x11, x(3, 1, 2)), 0);
  EXPECT_EQ(fock_inner(MultiPoly::determinant(), MultiPoly::determinant()), 6);
}

TEST(Fock, PolarizationsAreAdjoint) {
  // <E_ij f, g> = <f, E_ji g> for the Fock form.
  const MultiPoly f = x(3, 1, 1) * x(3, 1, 2) * x(3, 2, 3) + x(3, 1, 1) * x(3, 1, 1) * x(3, 3, 3);
  const MultiPoly g = x(3, 1, 1) * x(3, 2, 2) * x(3, 2, 3) - x(3, 2, 1) * x(3, 1, 1) * x(3, 3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) {
        EXPECT_EQ(fock_inner(polarize(f, i, j), g), fock_inner(f, polarize(g, j, i)));
      }
}

TEST(Monomials, CountMatchesContingencyTables) {
  // 2 x 3 tables with row sums (2,1) and column sums (1,1,1): choose which
  // column holds the single row-2 entry.
  EXPECT_EQ(monomials_with_degrees(2, {2, 1, 0}, {1, 1, 1}).size(), 3u);
  // 3 x 3 permutation matrices.
  EXPECT_EQ(monomials_with_degrees(3, {1, 1, 1}, {1, 1, 1}).size(), 6u);
  EXPECT_TRUE(monomials_with_degrees(2, {1, 1, 1}, {1, 1, 1}).empty());
}

TEST(MultiplicitySpace, Examples) {
  EXPECT_EQ(multiplicity_space(2, {1, 1, 1}, Partition(2, 1)).dim(), 2u);
  EXPECT_EQ(multiplicity_space(3, {1, 1, 1}, Partition(2, 1, 0)).dim(), 2u);
  const auto line = multiplicity_space(2, {1, 0, 0}, Partition(1));
  ASSERT_EQ(line.dim(), 1u);
  EXPECT_EQ(line.basis[0], x(2, 1, 1));
  EXPECT_EQ(multiplicity_space(2, {1, 0, 0}, Partition(0)).dim(), 0u);
  EXPECT_EQ(multiplicity_space(2, {1, 1, 1}, Partition(1, 1, 1)).dim(), 0u);
}

TEST(MultiplicitySpace, VectorsAreHighestWeight) {
  for (int k : {2, 3}) {
    const auto space = multiplicity_space(k, {2, 1, 2}, Partition(3, 2));
    EXPECT_GT(space.dim(), 0u);
    for (const auto& f : space.basis) {
      EXPECT_EQ(f.row_degrees(), (std::array<long, 3>{3, 2, 0}));
      EXPECT_EQ(f.column_degrees(), (std::array<long, 3>{2, 1, 2}));
      for (int i = 1; i < k; ++i) EXPECT_TRUE(raising_operator_apply(f, i, i + 1).is_zero());
    }
  }
}

TEST(MultiplicitySpace, LowestWeightVectors) {
  const auto space = multiplicity_space(3, {1, 1, 1}, Partition(2, 1, 0), WeightKind::Lowest);
  EXPECT_EQ(space.row_degrees, (std::array<long, 3>{0, 1, 2}));
  EXPECT_EQ(space.dim(), 2u);
  for (const auto& f : space.basis) {
    EXPECT_TRUE(polarize(f, 1, 0).is_zero());
    EXPECT_TRUE(polarize(f, 2, 1).is_zero());
  }
}

TEST(Casimir, EigenvalueFormula) {
  EXPECT_EQ(casimir_eigenvalue(Partition(1, 1), 2), 2);
  EXPECT_EQ(casimir_eigenvalue(Partition(2, 0), 2), 6);
  EXPECT_EQ(casimir_eigenvalue(Partition(2, 0), 3), 8);
  EXPECT_EQ(casimir_eigenvalue(Partition(), 3), 0);
}

TEST(Casimir, OneDimensionalSpace) {
  const auto space = multiplicity_space(2, {1, 0, 0}, Partition(1));
  const ExactMatrix m = casimir12_matrix(space);
  ASSERT_EQ(m.rows(), 1u);
  const auto labels = intermediate_labels(space, Coupling::First12);
  ASSERT_EQ(labels.size(), 1u);
  EXPECT_EQ(m(0, 0), casimir_eigenvalue(labels[0], 2));
}

TEST(Casimir, EigenvaluesForOneOneOneOne) {
  // (a,b,c,d) = (1,1,1,1): lambda = (2,1), e in {0,2} give (m1,m2) = (1,1), (2,0).
  const auto space = multiplicity_space(2, {1, 1, 1}, Partition(2, 1));
  const ExactMatrix m = casimir12_matrix(space);
  const auto split = eigensplit(m, {2, 6});
  EXPECT_EQ(split.at(2).size(), 1u);
  EXPECT_EQ(split.at(6).size(), 1u);
}

TEST(Casimir, ShiftBetweenRanks) {
  for (long a = 0; a <= 2; ++a)
    for (long b = 0; b <= 2; ++b)
      for (long c = 0; c <= 2; ++c)
        for (long q = 0; 2 * q <= a + b + c; ++q) {
          const Partition lambda(a + b + c - q, q);
          const auto s2 = multiplicity_space(2, {a, b, c}, lambda);
          if (s2.dim() == 0) continue;
          const ExactMatrix c2 = casimir12_matrix(s2);
          const ExactMatrix c3 = casimir12_matrix(embed(s2, 3));
          const ExactMatrix diff = c3 - c2;
          EXPECT_EQ(diff, [&] {
            ExactMatrix d = ExactMatrix::identity(s2.dim());
            for (std::size_t i = 0; i < s2.dim(); ++i) d(i, i) = a + b;
            return d;
          }());
        }
}

TEST(Coupling, LabelsForOneOneOneOne) {
  const auto vs = coupling_basis(2, {1, 1, 1}, Partition(2, 1), Coupling::First12);
  ASSERT_EQ(vs.size(), 2u);
  std::set<long> es;
  for (const auto& v : vs) es.insert(v.su2_label());
  EXPECT_EQ(es, (std::set<long>{0, 2}));

  // e = 0 is antisymmetric in the first two columns: proportional to D12 x13.
  for (const auto& v : vs)
    if (v.su2_label() == 0) {
      EXPECT_TRUE(ratio(v.vec, minor2(2, 1, 2) * x(2, 1, 3)).has_value());
    }

  const auto ws = coupling_basis(3, {1, 1, 1}, Partition(2, 1, 0), Coupling::First12);
  std::set<Partition> labels;
  for (const auto& w : ws) labels.insert(w.label);
  EXPECT_EQ(labels, (std::set<Partition>{Partition(2, 0), Partition(1, 1)}));

  EXPECT_TRUE(coupling_basis(2, {1, 0, 0}, Partition(0), Coupling::First12).empty());
}

TEST(Coupling, SignConventionAndOrthogonality) {
  for (Coupling mode : {Coupling::First12, Coupling::Last23}) {
    const auto vs = coupling_basis(3, {2, 2, 1}, Partition(3, 2, 0), mode);
    ASSERT_GE(vs.size(), 2u);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      EXPECT_GT(vs[i].vec.terms().begin()->second, 0);
      EXPECT_EQ(vs[i].norm2, fock_inner(vs[i].vec, vs[i].vec));
      EXPECT_EQ(unit_inner(vs[i], vs[i]), SignedSqrt(1, 1));
      for (std::size_t j = i + 1; j < vs.size(); ++j) EXPECT_EQ(fock_inner(vs[i].vec, vs[j].vec), 0);
    }
  }
}

TEST(UOracle, Examples) {
  EXPECT_EQ(u_oracle({0, 0, 0, 0, 0, 0}), SignedSqrt(1, 1));
  EXPECT_TRUE(u_oracle({1, 1, 1, 1, 2, 1}).is_zero());
  EXPECT_TRUE(u_oracle({1, 1, 1, 1, 4, 0}).is_zero());
  // <D12 x13, D23 x11> / (|.| |.|) = -1/2 by hand.
  EXPECT_EQ(u_oracle({1, 1, 1, 1, 0, 0}).square(), make_rational(1, 4));
}

TEST(UOracle, MagnitudeMatchesRacah) {
  for (const auto& l : valid_labels(3))
    EXPECT_EQ(u_oracle(l).square(), u_coeff(l).square()) << l.to_string();
}

TEST(U3Oracle, Examples) {
  EXPECT_EQ(u3_oracle(0, 0, 0, Partition(0, 0), Partition(0, 0), Partition(0, 0)), SignedSqrt(1, 1));
  // (3,0) is not in S^1 x S^1.
  EXPECT_TRUE(u3_oracle(1, 1, 1, Partition(2, 1), Partition(3, 0), Partition(1, 1)).is_zero());
}

TEST(U3Oracle, LabelMapToRankTwo) {
  // q = p - d, r = (a+b+e)/2, s = r - e, t = (b+c+f)/2, u = t - f.
  for (const auto& l : valid_labels(3)) {
    if (l.perimeter() % 2) continue;
    const long p = l.perimeter() / 2, q = p - l.d;
    if (q < 0 || q > p) continue;
    const long r = (l.a + l.b + l.e) / 2, t = (l.b + l.c + l.f) / 2;
    const auto u3 = u3_oracle(l.a, l.b, l.c, Partition(p, q), Partition(r, r - l.e), Partition(t, t - l.f));
    EXPECT_EQ(u3.square(), u_coeff(l).square()) << l.to_string();
  }
}

TEST(Duality, PairingExamples) {
  const MultiPoly one = MultiPoly::constant(3, 1);
  EXPECT_EQ(duality_pairing(one, one, 0), 1);
  EXPECT_EQ(duality_pairing(MultiPoly::determinant(), one, 1), 1);
  const MultiPoly cof = x(3, 2, 2) * x(3, 3, 3) - x(3, 2, 3) * x(3, 3, 2);
  EXPECT_EQ(duality_pairing(x(3, 1, 1), cof, 1), make_rational(1, 3));
  try {
    duality_pairing(x(3, 1, 1), one, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DegreeMismatch);
  }
}

TEST(Duality, BasesPairDiagonally) {
  const auto trivial = check_duality_bases(0, 0, 0, Partition(0, 0));
  EXPECT_TRUE(trivial.pass());
  ASSERT_EQ(trivial.blocks.size(), 2u);
  ASSERT_EQ(trivial.blocks[0].pairing.size(), 1u);
  EXPECT_EQ(trivial.blocks[0].pairing[0][0], 1);

  const auto rep = check_duality_bases(1, 1, 1, Partition(2, 1));
  EXPECT_TRUE(rep.pass()) << (rep.problems.empty() ? "" : rep.problems[0]);
  for (const auto& block : rep.blocks) {
    ASSERT_EQ(block.pairing.size(), 2u);
    std::size_t nonzero = 0;
    for (const auto& row : block.pairing)
      for (const auto& v : row) nonzero += v != 0;
    EXPECT_EQ(nonzero, 2u);
  }
  EXPECT_FALSE(check_duality_bases(3, 0, 0, Partition(2, 1)).pass());
}
