#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "vpal/errors.hpp"
#include "vpal/natural.hpp"

namespace vpal {

struct PrimePower {
  Natural prime;
  std::uint32_t exponent = 1;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization, ascending by prime. The empty factorization is 1.
class Factorization {
 public:
  Factorization() = default;
  /// Validates ordering and exponents; primality of the entries is the
  /// caller's responsibility.
  explicit Factorization(std::vector<PrimePower> factors);

  std::span<const PrimePower> factors() const noexcept { return factors_; }
  std::size_t size() const noexcept { return factors_.size(); }
  bool empty() const noexcept { return factors_.empty(); }

  /// Multiplies in prime^exponent, merging with an existing entry.
  void multiply(const Natural& prime, std::uint32_t exponent = 1);

  /// Product of prime^exponent over all entries.
  Natural value() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::vector<PrimePower> factors_;
};

/// Factorization of a machine word. A 64-bit integer has at most 15
/// distinct prime factors, so storage is inline.
class SmallFactorization {
 public:
  struct Entry {
    std::uint64_t prime;
    std::uint32_t exponent;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  const Entry* begin() const noexcept { return entries_.data(); }
  const Entry* end() const noexcept { return entries_.data() + size_; }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  const Entry& operator[](std::size_t i) const noexcept { return entries_[i]; }

  /// Inserts keeping ascending order; merges repeated primes.
  void multiply(std::uint64_t prime, std::uint32_t exponent = 1);

  Factorization widen() const;

 private:
  std::array<Entry, 16> entries_{};
  std::uint8_t size_ = 0;
};

/// Operation-count limit for splitting composite cofactors. One unit is one
/// modular multiplication step of the splitting algorithm.
struct EffortBudget {
  std::uint64_t steps = 50'000'000;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(Factorization partial, Natural cofactor);

  /// Prime powers found before the budget ran out.
  const Factorization& partial() const noexcept { return partial_; }
  /// Unsplit remainder; partial().value() * cofactor() == n.
  const Natural& cofactor() const noexcept { return cofactor_; }

 private:
  Factorization partial_;
  Natural cofactor_;
};

enum class PrimalityStatus { prime, composite, probable_prime };

std::string_view to_string(PrimalityStatus status);
/// Inverse of to_string; throws DomainError on unknown names.
PrimalityStatus parse_primality_status(std::string_view name);

struct PrimalityVerdict {
  PrimalityStatus status = PrimalityStatus::composite;
  /// Probabilistic rounds passed; zero unless status is probable_prime.
  std::uint32_t certainty = 0;

  bool non_composite() const noexcept { return status != PrimalityStatus::composite; }
  friend bool operator==(const PrimalityVerdict&, const PrimalityVerdict&) = default;
};

/// Inputs below 2^kDeterministicBits get a proven verdict.
inline constexpr unsigned kDeterministicBits = 64;
inline constexpr std::uint32_t kDefaultRounds = 64;

/// Deterministic Miller-Rabin for the whole 64-bit range.
bool is_prime_u64(std::uint64_t n) noexcept;

/// Proven verdict below 2^64; Miller-Rabin with `rounds` pseudo-random bases
/// above, reported as probable_prime when all rounds pass. Bases are derived
/// from n so the verdict is reproducible.
PrimalityVerdict is_prime(const Natural& n, std::uint32_t rounds = kDefaultRounds);

/// Odd primes below 2^16, ascending, with 2 prepended.
std::span<const std::uint32_t> small_primes();

/// Throws DomainError for n = 0, BudgetExceeded if the budget runs out.
SmallFactorization factorize(std::uint64_t n, EffortBudget budget = {});
Factorization factorize(const Natural& n, EffortBudget budget = {});

/// alpha * [alpha > 1]
std::uint32_t iota(std::uint32_t alpha);

// Additive function: sum of p + iota(alpha) over prime powers p^alpha || n.
std::uint64_t v(const SmallFactorization& f) noexcept;
Natural v(const Factorization& f);
std::uint64_t v(std::uint64_t n, EffortBudget budget = {});
Natural v(const Natural& n, EffortBudget budget = {});

// Alladi-Erdos: sum of p * alpha.
Natural alladi_erdos_A(const Factorization& f);
Natural alladi_erdos_A(const Natural& n, EffortBudget budget = {});

// OEIS A008474: sum of (p + alpha).
Natural oeis_F(const Factorization& f);
Natural oeis_F(const Natural& n, EffortBudget budget = {});

// OEIS A000026: product of p * alpha; 1 for n = 1.
Natural oeis_G(const Factorization& f);
Natural oeis_G(const Natural& n, EffortBudget budget = {});

}  // namespace vpal
