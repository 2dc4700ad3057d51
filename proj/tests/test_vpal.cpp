#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "vpal/digits.hpp"
#include "vpal/vpal.hpp"

using namespace vpal;

namespace {

std::vector<std::uint64_t> values(const std::vector<VPalindromeHit>& hits) {
  std::vector<std::uint64_t> out;
  for (const auto& h : hits) out.push_back(h.n.to_u64());
  return out;
}

}  // namespace

TEST(Predicate, Examples) {
  EXPECT_TRUE(is_v_palindrome(Natural(198)));
  EXPECT_TRUE(is_v_palindrome(Natural(891)));
  EXPECT_TRUE(is_v_palindrome(Natural(18)));
  EXPECT_FALSE(is_v_palindrome(Natural(121)));
  EXPECT_FALSE(is_v_palindrome(Natural(19)));
  EXPECT_FALSE(is_v_palindrome(Natural(1980)));
  EXPECT_THROW(is_v_palindrome(Natural(0)), DomainError);
  EXPECT_THROW(is_v_palindrome(Natural(5), 1), DomainError);
}

TEST(Enumerate, CanonicalTableBelowOneHundredThousand) {
  EnumerationOptions options;
  options.mode = EnumerationMode::canonical;
  EXPECT_EQ(fixture::kCanonicalTable.size(), 46U);
  EXPECT_EQ(values(enumerate(1, 100000, options)), fixture::kCanonicalTable);
}

TEST(Enumerate, SmallRanges) {
  EXPECT_TRUE(enumerate(1, 17).empty());
  const auto single = enumerate(576, 576);
  ASSERT_EQ(single.size(), 1U);
  EXPECT_EQ(single[0], (VPalindromeHit{Natural(576), Natural(675), Natural(13), 10}));
  EXPECT_EQ(values(enumerate(0, 100)), (std::vector<std::uint64_t>{18, 81}));
  EXPECT_THROW(enumerate(10, 9), DomainError);
  EXPECT_THROW(enumerate(1, kMaxEnumerationBound + 1), DomainError);
}

TEST(Enumerate, CompleteAgainstOracle) {
  std::vector<std::uint64_t> expected;
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    if (oracle::is_v_palindrome10(n)) expected.push_back(n);
  }
  EXPECT_EQ(expected.size(), 26U);
  EXPECT_EQ(values(enumerate(1, 10000)), expected);
}

TEST(Enumerate, EveryHitIsSymmetric) {
  const auto hits = enumerate(1, 200000);
  for (const auto& h : hits) {
    EXPECT_EQ(reverse(h.n), h.reversal);
    EXPECT_EQ(v(h.n), h.shared_v);
    EXPECT_EQ(v(h.reversal), h.shared_v);
    if (h.reversal.to_u64() <= 200000) {
      EXPECT_TRUE(std::any_of(hits.begin(), hits.end(), [&](const auto& o) { return o.n == h.reversal; }));
    }
  }
}

TEST(Enumerate, ResultIndependentOfShardingAndThreads) {
  const auto reference = enumerate(123, 300000);
  for (unsigned threads : {2U, 5U}) {
    for (std::uint64_t shard : {std::uint64_t{1000}, std::uint64_t{77777}}) {
      EnumerationOptions options;
      options.threads = threads;
      options.shard_size = shard;
      EXPECT_EQ(enumerate(123, 300000, options), reference) << threads << " " << shard;
    }
  }
}

TEST(Enumerate, LargeOffsetsAgreeWithPredicate) {
  const std::uint64_t lo = 10'000'000'000ULL, hi = lo + 200'000;
  const auto hits = enumerate(lo, hi);
  std::size_t expected = 0;
  for (std::uint64_t n = lo; n <= hi; ++n) {
    if (is_v_palindrome(Natural(n))) ++expected;
  }
  EXPECT_EQ(hits.size(), expected);
}

TEST(Enumerate, OtherBasesMatchThePredicate) {
  for (std::uint32_t base : {2U, 3U, 16U}) {
    EnumerationOptions options;
    options.base = base;
    std::vector<std::uint64_t> expected;
    for (std::uint64_t n = 1; n <= 5000; ++n) {
      if (is_v_palindrome(Natural(n), base)) expected.push_back(n);
    }
    EXPECT_EQ(values(enumerate(1, 5000, options)), expected) << base;
  }
}

TEST(Families, Examples) {
  EXPECT_EQ(family_nines(1), Natural(18));
  EXPECT_EQ(family_nines(2), Natural(198));
  EXPECT_EQ(family_nines(3), Natural(1998));
  EXPECT_EQ(family_repeat18(1), Natural(18));
  EXPECT_EQ(family_repeat18(2), Natural(1818));
  EXPECT_EQ(family_repeat18(3), Natural(181818));
  EXPECT_THROW(family_nines(0), DomainError);
  EXPECT_THROW(family_repeat18(0), DomainError);
}

TEST(Families, MembersAreVPalindromes) {
  for (std::uint32_t k = 1; k <= 10; ++k) {
    EXPECT_TRUE(is_v_palindrome(family_nines(k))) << k;
    EXPECT_TRUE(is_v_palindrome(family_repeat18(k))) << k;
  }
}
