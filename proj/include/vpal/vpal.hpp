#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "vpal/arith.hpp"
#include "vpal/natural.hpp"

namespace vpal {

/// A confirmed v-palindrome: base does not divide n, n differs from its
/// reversal, and both share the same v value.
struct VPalindromeHit {
  Natural n;
  Natural reversal;
  Natural shared_v;
  std::uint32_t base = 10;

  friend bool operator==(const VPalindromeHit&, const VPalindromeHit&) = default;
};

/// Multiples of the base and fixed points of the reversal are reported as
/// false, not as errors. Throws DomainError for n = 0 or base < 2.
bool is_v_palindrome(const Natural& n, std::uint32_t base = 10, EffortBudget budget = {});

enum class EnumerationMode {
  all,        // every v-palindrome (OEIS A338039 in base 10)
  canonical,  // only hits with n < reversal
};

struct EnumerationOptions {
  std::uint32_t base = 10;
  EnumerationMode mode = EnumerationMode::all;
  unsigned threads = 1;
  EffortBudget budget{};
  /// Numbers per shard. Output does not depend on it or on `threads`.
  std::uint64_t shard_size = 1U << 16;
};

/// Largest accepted `hi` for enumerate().
inline constexpr std::uint64_t kMaxEnumerationBound = 10'000'000'000'000'000ULL;

/// Streams every v-palindrome in [lo, hi] to `sink`, ascending by n.
/// Shards are sieved in parallel and handed to the sink in order.
void enumerate(std::uint64_t lo, std::uint64_t hi, const EnumerationOptions& options,
               const std::function<void(const VPalindromeHit&)>& sink);

std::vector<VPalindromeHit> enumerate(std::uint64_t lo, std::uint64_t hi, const EnumerationOptions& options = {});

/// 2 * 10^k - 2: the digits 1, then k-1 nines, then 8.
Natural family_nines(std::uint32_t k);

/// 18 * (100^j - 1) / 99: "18" written j times.
Natural family_repeat18(std::uint32_t j);

}  // namespace vpal
