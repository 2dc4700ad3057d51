#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vpal/natural.hpp"

namespace vpal {

/// Canonical base-b digits of a natural number, least significant first.
/// Zero is the empty sequence; otherwise the last stored digit is nonzero.
class DigitVector {
 public:
  /// Validates every digit against the base and strips leading zeros.
  /// Throws DomainError for base < 2, DigitOutOfRange for a bad digit.
  DigitVector(std::uint32_t base, std::vector<std::uint32_t> digits_lsf);

  std::uint32_t base() const noexcept { return base_; }
  std::span<const std::uint32_t> digits() const noexcept { return digits_; }
  std::size_t size() const noexcept { return digits_.size(); }

  /// Most significant digit first; comma-separated above base 10.
  std::string str() const;

  friend bool operator==(const DigitVector&, const DigitVector&) = default;

 private:
  std::uint32_t base_;
  std::vector<std::uint32_t> digits_;
};

DigitVector to_digits(const Natural& n, std::uint32_t base = 10);

/// Positional value; leading zeros are fine.
Natural from_digits(const DigitVector& d);
Natural from_digits(std::uint32_t base, std::span<const std::uint32_t> digits_lsf);

/// Number of base-b digits; length(0) = 0.
std::size_t length(const Natural& n, std::uint32_t base = 10);
std::size_t length(std::uint64_t n, std::uint32_t base = 10);

/// Coefficient of base^i. Throws IndexOutOfRange when i >= length(n).
std::uint32_t digit(const Natural& n, std::size_t i, std::uint32_t base = 10);

/// The base-b reverse; trailing zeros of n vanish. DomainError for n = 0.
Natural reverse(const Natural& n, std::uint32_t base = 10);

/// Machine-word reverse, or nullopt when the result exceeds 64 bits.
std::optional<std::uint64_t> reverse_u64(std::uint64_t n, std::uint32_t base = 10);

}  // namespace vpal
