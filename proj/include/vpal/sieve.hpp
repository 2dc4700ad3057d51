#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "vpal/arith.hpp"

namespace vpal {

/// floor(sqrt(n)) for n < 2^64.
std::uint32_t isqrt(std::uint64_t n);

/// Primes p <= limit by the sieve of Eratosthenes.
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

/// Primes in [lo, hi]. `base_primes` must contain every prime <= sqrt(hi).
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi,
                                           std::span<const std::uint32_t> base_primes);

/// v(n) for every n in [lo, hi], lo >= 1, by sieving prime powers over the
/// segment. `base_primes` must contain every prime <= sqrt(hi).
std::vector<std::uint64_t> v_segment(std::uint64_t lo, std::uint64_t hi,
                                     std::span<const std::uint32_t> base_primes);

/// Smallest-prime-factor table over [0, limit]. Immutable after
/// construction and safe to share between threads.
class SpfTable {
 public:
  explicit SpfTable(std::uint32_t limit);

  std::uint32_t limit() const noexcept { return limit_; }
  bool covers(std::uint64_t n) const noexcept { return n >= 1 && n <= limit_; }

  /// Requires covers(n).
  SmallFactorization factorize(std::uint64_t n) const;

  /// Requires covers(n).
  std::uint64_t v(std::uint64_t n) const;

 private:
  std::uint32_t limit_;
  std::vector<std::uint32_t> spf_;
};

}  // namespace vpal
