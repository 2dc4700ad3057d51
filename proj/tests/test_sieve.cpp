#include <gtest/gtest.h>

#include "oracles.hpp"
#include "vpal/sieve.hpp"

using namespace vpal;

TEST(Sieve, PrimesUpTo) {
  EXPECT_TRUE(primes_up_to(1).empty());
  EXPECT_EQ(primes_up_to(30), (std::vector<std::uint32_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29}));
  EXPECT_EQ(primes_up_to(100000).size(), 9592U);
}

TEST(Sieve, PrimesInRangeMatchesTrialDivision) {
  const auto base = primes_up_to(1000);
  for (auto [lo, hi] : {std::pair<std::uint64_t, std::uint64_t>{0, 100}, {999'000, 1'000'000}, {1, 1}, {2, 2}}) {
    std::vector<std::uint64_t> expected;
    for (std::uint64_t n = lo; n <= hi; ++n) {
      if (oracle::is_prime(n)) expected.push_back(n);
    }
    EXPECT_EQ(primes_in_range(lo, hi, base), expected) << lo << ".." << hi;
  }
}

TEST(Sieve, SegmentedVMatchesOracle) {
  const auto base = primes_up_to(2000);
  for (auto [lo, hi] : {std::pair<std::uint64_t, std::uint64_t>{1, 5000}, {3'000'000, 3'010'000}}) {
    const auto table = v_segment(lo, hi, base);
    ASSERT_EQ(table.size(), hi - lo + 1);
    for (std::uint64_t n = lo; n <= hi; ++n) ASSERT_EQ(table[n - lo], oracle::v(n)) << n;
  }
  EXPECT_THROW(v_segment(0, 10, base), DomainError);
}

TEST(Sieve, SpfTable) {
  const SpfTable table(100000);
  EXPECT_TRUE(table.covers(100000));
  EXPECT_FALSE(table.covers(0));
  EXPECT_FALSE(table.covers(100001));
  for (std::uint64_t n = 1; n <= 100000; ++n) {
    ASSERT_EQ(table.v(n), oracle::v(n)) << n;
  }
  const auto f = table.factorize(891);
  ASSERT_EQ(f.size(), 2U);
  EXPECT_EQ(f[0], (SmallFactorization::Entry{3, 4}));
  EXPECT_EQ(f[1], (SmallFactorization::Entry{11, 1}));
}

TEST(Sieve, Isqrt) {
  EXPECT_EQ(isqrt(0), 0U);
  EXPECT_EQ(isqrt(99), 9U);
  EXPECT_EQ(isqrt(100), 10U);
  EXPECT_EQ(isqrt(UINT64_MAX), 0xFFFFFFFFU);
  EXPECT_EQ(isqrt(0xFFFFFFFE00000001ULL), 0xFFFFFFFFU);
  EXPECT_EQ(isqrt(0xFFFFFFFE00000000ULL), 0xFFFFFFFEU);
}
