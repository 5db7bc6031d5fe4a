#include <gtest/gtest.h>

#include "oracles.hpp"
#include "regge/tableaux.hpp"

using namespace regge;

TEST(Partition, Validation) {
  EXPECT_THROW(Partition(1, 2, 0), Error);
  EXPECT_THROW(Partition(1, 0, -1), Error);
  EXPECT_EQ(Partition(3, 1).length(), 2);
  EXPECT_EQ(Partition(3, 1, 1).size(), 5);
}

TEST(Pieri, Examples) {
  EXPECT_EQ(pieri(Partition(1), 1), (std::vector<Partition>{Partition(1, 1), Partition(2)}));
  for (long a = 0; a <= 5; ++a) EXPECT_EQ(pieri(Partition(), a), std::vector<Partition>{Partition(a)});
}

TEST(Pieri, MatchesHorizontalStripEnumeration) {
  // Brute force: nu contains lambda, |nu/lambda| = n and nu/lambda has at most
  // one box per column, i.e. nu_{i+1} <= lambda_i.
  for (long l0 = 0; l0 <= 3; ++l0)
    for (long l1 = 0; l1 <= l0; ++l1)
      for (long l2 = 0; l2 <= l1; ++l2)
        for (long n = 0; n <= 3; ++n) {
          const Partition lambda(l0, l1, l2);
          std::vector<Partition> expected;
          for (long a = 0; a <= 6; ++a)
            for (long b = 0; b <= a; ++b)
              for (long c = 0; c <= b; ++c) {
                if (a + b + c != lambda.size() + n) continue;
                if (a < l0 || b < l1 || c < l2) continue;
                if (b > l0 || c > l1) continue;
                expected.emplace_back(a, b, c);
              }
          std::sort(expected.begin(), expected.end());
          EXPECT_EQ(pieri(lambda, n), expected) << lambda.to_string() << " + " << n;
        }
}

TEST(LittlewoodRichardson, Examples) {
  for (long a = 0; a <= 4; ++a) EXPECT_EQ(lr_contains(Partition(a), Partition(), Partition(a)), 1);
  EXPECT_EQ(lr_contains(Partition(1), Partition(1, 1), Partition(2, 1)), 1);
  EXPECT_EQ(lr_contains(Partition(2, 1), Partition(2, 1), Partition(3, 2, 1)), 2);
}

TEST(LittlewoodRichardson, DualityCondition) {
  for (long p = 0; p <= 4; ++p)
    for (long r = 0; r <= p; ++r)
      for (long s = 0; s <= r; ++s)
        for (long x = 0; x <= p; ++x)
          for (long y = 0; y <= x; ++y) {
            const long want = (x == p - s && y == p - r) ? 1 : 0;
            EXPECT_EQ(lr_contains(Partition(r, s), Partition(x, y), Partition(p, p)), want)
                << p << " " << r << " " << s << " " << x << " " << y;
          }
}

TEST(LittlewoodRichardson, RowPartitionIsPieri) {
  for (long l0 = 0; l0 <= 3; ++l0)
    for (long l1 = 0; l1 <= l0; ++l1)
      for (long n = 0; n <= 3; ++n) {
        const Partition lambda(l0, l1);
        const auto strip = pieri(lambda, n);
        for (long a = 0; a <= 6; ++a)
          for (long b = 0; b <= a; ++b)
            for (long c = 0; c <= b; ++c) {
              if (a + b + c != lambda.size() + n) continue;
              const Partition nu(a, b, c);
              const long want = std::count(strip.begin(), strip.end(), nu);
              EXPECT_EQ(lr_contains(lambda, Partition(n), nu), want);
              EXPECT_EQ(lr_contains(Partition(n), lambda, nu), want);
            }
      }
}

TEST(GelfandTsetlin, Examples) {
  EXPECT_EQ(gt_count(2, 1, {1, 1, 1}), 2);
  EXPECT_EQ(gt_count(0, 0, {0, 0, 0}), 1);
  for (long p = 0; p <= 4; ++p)
    for (long q = 0; q <= p; ++q) EXPECT_EQ(gt_count(p, q, {p + q, 0, 0}), q == 0 ? 1 : 0);
}

TEST(GelfandTsetlin, CountEqualsKostkaNumber) {
  for (long p = 0; p <= 5; ++p)
    for (long q = 0; q <= p; ++q)
      for (long a = 0; a <= p + q; ++a)
        for (long b = 0; a + b <= p + q; ++b) {
          const std::array<long, 3> mu{a, b, p + q - a - b};
          EXPECT_EQ(gt_count(p, q, mu), oracle::kostka(p, q, mu)) << p << "," << q;
        }
}

TEST(GelfandTsetlin, PatternsInterlaceWithWeight) {
  for (const auto& pat : gt_patterns(4, 2, {2, 2, 2})) {
    EXPECT_TRUE(pat.interlaces());
    EXPECT_EQ(pat.weight(), (std::array<long, 3>{2, 2, 2}));
  }
}

TEST(GelfandTsetlin, DualIsInvolution) {
  const GTPattern zero{{0, 0, 0}, {0, 0}, 0};
  EXPECT_EQ(gt_dual(zero, 0), zero);
  for (long p = 0; p <= 4; ++p)
    for (long q = 0; q <= p; ++q)
      for (long a = 0; a <= p + q; ++a)
        for (long b = 0; a + b <= p + q; ++b) {
          const std::array<long, 3> mu{a, b, p + q - a - b};
          for (const auto& pat : gt_patterns(p, q, mu)) {
            const GTPattern d = gt_dual(pat, p);
            EXPECT_TRUE(d.interlaces());
            EXPECT_EQ(d.top, (std::array<long, 3>{p, p - q, 0}));
            EXPECT_EQ(d.weight(), (std::array<long, 3>{p - mu[0], p - mu[1], p - mu[2]}));
            EXPECT_EQ(gt_dual(d, p), pat);
          }
        }
  EXPECT_THROW(gt_dual(GTPattern{{3, 0, 0}, {1, 0}, 0}, 2), Error);
}
