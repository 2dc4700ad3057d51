#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "vpal/digits.hpp"

using namespace vpal;

TEST(Digits, ToDigits) {
  EXPECT_EQ(to_digits(Natural(198), 10), DigitVector(10, {8, 9, 1}));
  EXPECT_EQ(to_digits(Natural(0), 10).size(), 0U);
  EXPECT_EQ(to_digits(Natural(5), 2), DigitVector(2, {1, 0, 1}));
  EXPECT_EQ(to_digits(Natural(1000), 100), DigitVector(100, {0, 10}));
  EXPECT_EQ(to_digits(Natural(255), 16).str(), "15,15");
  EXPECT_EQ(to_digits(Natural(198), 10).str(), "198");
  EXPECT_THROW(to_digits(Natural(5), 1), DomainError);
}

TEST(Digits, LargeRadixUsesDivisionPath) {
  const Natural n = Natural::pow(1000, 5) + Natural(7);
  EXPECT_EQ(to_digits(n, 1000), DigitVector(1000, {7, 0, 0, 0, 0, 1}));
  EXPECT_EQ(from_digits(to_digits(n, 1000)), n);
  EXPECT_EQ(to_digits(Natural(61 * 62 + 35), 62), DigitVector(62, {35, 61}));
}

TEST(Digits, FromDigits) {
  EXPECT_EQ(from_digits(DigitVector(10, {8, 9, 1})), Natural(198));
  EXPECT_EQ(from_digits(DigitVector(10, {})), Natural(0));
  EXPECT_EQ(from_digits(DigitVector(10, {7, 9, 9, 9, 4})), Natural(49997));
  const std::vector<std::uint32_t> padded = {8, 9, 1, 0, 0};
  EXPECT_EQ(from_digits(10, padded), Natural(198));
  EXPECT_EQ(DigitVector(10, padded).size(), 3U);
  const std::vector<std::uint32_t> bad = {8, 10};
  EXPECT_THROW(from_digits(10, bad), DigitOutOfRange);
  EXPECT_THROW(DigitVector(10, bad), DigitOutOfRange);
}

TEST(Digits, Length) {
  EXPECT_EQ(length(Natural(198)), 3U);
  EXPECT_EQ(length(Natural(0)), 0U);
  for (unsigned k = 0; k < 40; ++k) {
    EXPECT_EQ(length(Natural::pow(10, k)), k + 1);
    if (k > 0) EXPECT_EQ(length(Natural::pow(10, k) - Natural(1)), k);
  }
  EXPECT_EQ(length(std::uint64_t{UINT64_MAX}), 20U);
  EXPECT_EQ(length(Natural(8), 2), 4U);
  EXPECT_THROW(length(Natural(8), 0), DomainError);
}

TEST(Digits, DigitAccess) {
  EXPECT_EQ(digit(Natural(198), 0), 8U);
  EXPECT_EQ(digit(Natural(198), 1), 9U);
  EXPECT_EQ(digit(Natural(198), 2), 1U);
  EXPECT_THROW(digit(Natural(198), 3), IndexOutOfRange);
  EXPECT_THROW(digit(Natural(0), 0), IndexOutOfRange);
}

TEST(Digits, Reverse) {
  EXPECT_EQ(reverse(Natural(198)), Natural(891));
  EXPECT_EQ(reverse(Natural(8712)), Natural(2178));
  EXPECT_EQ(Natural(8712), Natural(4) * reverse(Natural(8712)));
  EXPECT_EQ(Natural(9801), Natural(9) * reverse(Natural(9801)));
  EXPECT_EQ(reverse(Natural(100)), Natural(1));
  EXPECT_EQ(reverse(Natural(6), 2), Natural(3));
  EXPECT_THROW(reverse(Natural(0)), DomainError);
  EXPECT_EQ(reverse_u64(UINT64_MAX), std::nullopt);
  EXPECT_EQ(reverse(Natural(UINT64_MAX)), Natural::parse("51615590737044764481"));
}

TEST(Digits, FourTimesReversalFamily) {
  for (std::uint64_t n : {2178ULL, 21978ULL, 219978ULL, 2199978ULL}) {
    EXPECT_EQ(reverse(Natural(n)), Natural(4 * n)) << n;
  }
}

// Hardy's observation, checked exhaustively over four-digit numbers.
TEST(Digits, OnlyTwoFourDigitMultiplesOfTheirReversal) {
  std::vector<std::uint64_t> found;
  for (std::uint64_t n = 1000; n < 10000; ++n) {
    if (n % 10 == 0) continue;
    const std::uint64_t r = *reverse_u64(n);
    if (r < n && n % r == 0) found.push_back(n);
  }
  EXPECT_EQ(found, (std::vector<std::uint64_t>{8712, 9801}));
}

TEST(DigitProperties, RoundTripAndInvolution) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint32_t> base_dist(2, 200);
  for (int i = 0; i < 20000; ++i) {
    const std::uint32_t b = base_dist(rng);
    Natural n(rng());
    if (i % 2 == 0) n = n * Natural(rng()) + Natural(rng());
    ASSERT_EQ(from_digits(to_digits(n, b)), n);
    if (n.is_zero() || n.divisible_by(b)) continue;
    ASSERT_EQ(reverse(reverse(n, b), b), n);
    ASSERT_EQ(length(reverse(n, b), b), length(n, b));
  }
}

TEST(DigitProperties, AgreesWithStringReversal) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 20000; ++i) {
    const std::uint64_t n = rng() % 10'000'000'000'000'000'000ULL + 1;
    ASSERT_EQ(*reverse_u64(n), oracle::reverse10(n));
    ASSERT_EQ(length(n), oracle::length10(n));
  }
}

TEST(DigitProperties, LengthIsMonotone) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20000; ++i) {
    std::uint64_t a = rng() >> (rng() % 64), b = rng() >> (rng() % 64);
    if (a > b) std::swap(a, b);
    ASSERT_LE(length(a), length(b));
  }
}

TEST(DigitProperties, ProductLengthIdentity) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 20000; ++i) {
    const Natural m(rng() >> (rng() % 63)), n(rng() >> (rng() % 63));
    if (m.is_zero() || n.is_zero()) continue;
    const std::size_t lm = length(m), ln = length(n);
    const Natural mn = m * n;
    const std::size_t drop = mn < Natural::pow(10, lm + ln - 1) ? 1 : 0;
    ASSERT_EQ(length(mn), lm + ln - drop) << m << " * " << n;
  }
}

TEST(DigitProperties, MultiFactorLengthBound) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 5000; ++i) {
    const std::size_t k = 1 + rng() % 8;
    Natural product(1);
    std::size_t total = 0;
    for (std::size_t j = 0; j < k; ++j) {
      const Natural f(1 + (rng() >> (rng() % 63)));
      product *= f;
      total += length(f);
    }
    ASSERT_GE(length(product) + (k - 1), total);
  }
}
