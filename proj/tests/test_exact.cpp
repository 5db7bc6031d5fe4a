#include <gtest/gtest.h>

#include <random>

#include "regge/exact.hpp"
#include "regge/random.hpp"

using namespace regge;

namespace {

ExactVector vec(std::initializer_list<long> xs) {
  ExactVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

bool is_zero_vector(const ExactVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

TEST(Rational, ParseForms) {
  EXPECT_EQ(parse_rational("3/6"), make_rational(1, 2));
  EXPECT_EQ(parse_rational("-4"), BigRational(-4));
  EXPECT_EQ(parse_rational("0.25"), make_rational(1, 4));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
}

TEST(Rational, SquareDetection) {
  EXPECT_TRUE(is_square(make_rational(9, 4)));
  EXPECT_FALSE(is_square(make_rational(2, 1)));
  EXPECT_FALSE(is_square(BigRational(-1)));
  EXPECT_EQ(rational_sqrt(make_rational(49, 16)), make_rational(7, 4));
  try {
    rational_sqrt(BigRational(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotASquare);
  }
}

TEST(Rational, FactorialMatchesProduct) {
  BigInt acc = 1;
  for (long n = 0; n <= 40; ++n) {
    if (n > 0) acc *= n;
    EXPECT_EQ(factorial(n), acc) << n;
  }
}

TEST(SignedSqrt, DivisionExamples) {
  EXPECT_EQ(surd_div(SignedSqrt(1, make_rational(1, 6)), SignedSqrt(1, make_rational(1, 6))), SignedSqrt(1, 1));
  EXPECT_EQ(surd_div(SignedSqrt(-1, 4), SignedSqrt(1, 1)), SignedSqrt(-1, 4));
  EXPECT_EQ(surd_div(SignedSqrt(1, 3), SignedSqrt(-1, 2)), SignedSqrt(-1, make_rational(3, 2)));
  try {
    surd_div(SignedSqrt(1, 1), SignedSqrt());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DivisionByZero);
  }
}

TEST(SignedSqrt, RejectsMalformed) {
  EXPECT_THROW(SignedSqrt(1, 0), Error);
  EXPECT_THROW(SignedSqrt(0, 1), Error);
  EXPECT_THROW(SignedSqrt(1, -1), Error);
  EXPECT_THROW(SignedSqrt(2, 1), Error);
}

TEST(SignedSqrt, SumsInOneSquareClass) {
  // sqrt(8) + sqrt(2) = 3 sqrt(2) = sqrt(18)
  EXPECT_EQ(SignedSqrt(1, 8) + SignedSqrt(1, 2), SignedSqrt(1, 18));
  EXPECT_EQ(SignedSqrt(1, 2) - SignedSqrt(1, 2), SignedSqrt());
  try {
    (void)(SignedSqrt(1, 2) + SignedSqrt(1, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::IncommensurableSum);
  }
}

TEST(SignedSqrt, ProductAgreesWithDoubles) {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const SignedSqrt x(rng.uniform_int(0, 1) ? 1 : -1, rng.rational(1, 5, 7));
    const SignedSqrt y(rng.uniform_int(0, 1) ? 1 : -1, rng.rational(1, 5, 7));
    EXPECT_NEAR((x * y).to_double(), x.to_double() * y.to_double(), 1e-12);
    EXPECT_NEAR((x / y).to_double(), x.to_double() / y.to_double(), 1e-12);
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ((x * y) / y, x);
  }
}

TEST(SurdSum, IndependentClasses) {
  SurdSum s;
  s += SignedSqrt(1, 2);
  s += SignedSqrt(1, 3);
  s += SignedSqrt(-1, 8);  // -2 sqrt 2
  s += SignedSqrt(1, 2);
  EXPECT_FALSE(s.is_zero());
  EXPECT_EQ(s.value(), SignedSqrt(1, 3));
  s += SignedSqrt(-1, 3);
  EXPECT_TRUE(s.is_zero());
  EXPECT_NEAR(s.to_double(), 0.0, 1e-15);
}

TEST(SurdSum, ValueThrowsAcrossClasses) {
  SurdSum s;
  s += SignedSqrt(1, 2);
  s += SignedSqrt(1, 5);
  EXPECT_THROW(s.value(), Error);
  EXPECT_NEAR(s.to_double(), std::sqrt(2.0) + std::sqrt(5.0), 1e-14);
}

TEST(Gaussian, FieldOperations) {
  const GaussianRational i(0, 1), one(1);
  EXPECT_EQ(i * i, GaussianRational(-1));
  EXPECT_EQ(one / i, GaussianRational(0, -1));
  const GaussianRational z(make_rational(3, 2), make_rational(-1, 3));
  EXPECT_EQ(z * conj(z), GaussianRational(make_rational(9, 4) + make_rational(1, 9)));
  EXPECT_EQ((z / z), one);
}

TEST(Nullspace, Examples) {
  auto zero = nullspace(ExactMatrix{{0}});
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_EQ(zero[0], vec({1}));
  EXPECT_TRUE(nullspace(ExactMatrix::identity(2)).empty());
  auto line = nullspace(ExactMatrix{{1, 1}});
  ASSERT_EQ(line.size(), 1u);
  EXPECT_EQ(line[0], vec({1, -1}));
}

TEST(Nullspace, RandomMatricesRankNullity) {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(rng.uniform_int(1, 5));
    const std::size_t cols = static_cast<std::size_t>(rng.uniform_int(1, 6));
    ExactMatrix m(rows, cols);
    // Low-rank products give nontrivial kernels often.
    const std::size_t inner = static_cast<std::size_t>(rng.uniform_int(1, 4));
    ExactMatrix u(rows, inner), v(inner, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t k = 0; k < inner; ++k) u(i, k) = rng.rational(-3, 3, 3);
    for (std::size_t k = 0; k < inner; ++k)
      for (std::size_t j = 0; j < cols; ++j) v(k, j) = rng.rational(-3, 3, 3);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t k = 0; k < inner; ++k) m(i, j) += u(i, k) * v(k, j);

    const auto ker = nullspace(m);
    EXPECT_EQ(ker.size() + rank(m), cols);
    for (const auto& x : ker) {
      EXPECT_TRUE(is_zero_vector(m.apply(x)));
      auto lead = std::find_if(x.begin(), x.end(), [](const BigRational& q) { return q != 0; });
      ASSERT_NE(lead, x.end());
      EXPECT_EQ(*lead, 1);
    }
    // Kernel vectors are independent.
    if (!ker.empty()) {
      ExactMatrix k(ker.size(), cols);
      for (std::size_t i = 0; i < ker.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) k(i, j) = ker[i][j];
      EXPECT_EQ(rank(k), ker.size());
    }
  }
}

TEST(Eigensplit, Examples) {
  auto d = eigensplit(ExactMatrix{{2, 0}, {0, 3}}, {2, 3});
  ASSERT_EQ(d.at(2).size(), 1u);
  ASSERT_EQ(d.at(3).size(), 1u);
  EXPECT_EQ(d.at(2)[0], vec({1, 0}));
  EXPECT_EQ(d.at(3)[0], vec({0, 1}));

  auto s = eigensplit(ExactMatrix{{0, 1}, {1, 0}}, {1, -1});
  EXPECT_EQ(s.at(1)[0], vec({1, 1}));
  EXPECT_EQ(s.at(-1)[0], vec({1, -1}));
}

TEST(Eigensplit, MissingEigenvalueIsSpanFailure) {
  try {
    eigensplit(ExactMatrix{{2, 0}, {0, 3}}, {2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SpanFailure);
  }
}

TEST(Eigensplit, ConjugatedDiagonal) {
  // m = P D P^-1 with P unimodular, so the eigenvectors are the columns of P.
  const ExactMatrix p{{1, 1, 0}, {0, 1, 1}, {0, 0, 1}};
  const ExactMatrix pinv{{1, -1, 1}, {0, 1, -1}, {0, 0, 1}};
  const long eig[3] = {-2, 1, 5};
  ExactMatrix m(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) m(i, j) += p(i, k) * eig[k] * pinv(k, j);
  const auto split = eigensplit(m, {5, -2, 1});
  for (std::size_t k = 0; k < 3; ++k) {
    const auto& space = split.at(eig[k]);
    ASSERT_EQ(space.size(), 1u);
    const auto image = m.apply(space[0]);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(image[i], eig[k] * space[0][i]);
  }
}

TEST(SolveInSpan, RecoversCoordinates) {
  const ExactMatrix basis{{1, 0}, {1, 1}, {0, 2}};
  const ExactMatrix targets{{3}, {5}, {4}};
  const ExactMatrix x = solve_in_span(basis, targets);
  EXPECT_EQ(x(0, 0), 3);
  EXPECT_EQ(x(1, 0), 2);
  try {
    solve_in_span(basis, ExactMatrix{{1}, {0}, {0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ClosureFailure);
  }
}
