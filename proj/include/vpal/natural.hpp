#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "vpal/errors.hpp"

namespace vpal {

/// Arbitrary-precision nonnegative integer.
///
/// Thin value wrapper over a GMP integer that keeps the sign invariant:
/// subtraction below zero and construction from negative values throw
/// DomainError instead of producing a negative number.
class Natural {
 public:
  Natural() = default;
  Natural(std::uint64_t value);  // NOLINT(google-explicit-constructor)

  template <std::signed_integral T>
  Natural(T value)  // NOLINT(google-explicit-constructor)
      : Natural(checked_unsigned(value)) {}

  explicit Natural(const mpz_class& value);
  explicit Natural(mpz_class&& value);

  /// Parses a plain decimal string (digits only, no sign, no whitespace).
  static Natural parse(std::string_view decimal);

  /// base^exponent
  static Natural pow(std::uint64_t base, std::uint64_t exponent);

  const mpz_class& mpz() const noexcept { return value_; }

  bool is_zero() const noexcept { return sgn(value_) == 0; }
  bool is_odd() const noexcept { return mpz_odd_p(value_.get_mpz_t()) != 0; }
  bool fits_u64() const noexcept;
  /// Throws DomainError when the value does not fit.
  std::uint64_t to_u64() const;
  std::size_t bit_width() const noexcept;
  std::string str() const { return value_.get_str(10); }

  Natural& operator+=(const Natural& rhs);
  Natural& operator-=(const Natural& rhs);
  Natural& operator*=(const Natural& rhs);
  Natural& operator/=(const Natural& rhs);
  Natural& operator%=(const Natural& rhs);

  friend Natural operator+(Natural lhs, const Natural& rhs) { return lhs += rhs; }
  friend Natural operator-(Natural lhs, const Natural& rhs) { return lhs -= rhs; }
  friend Natural operator*(Natural lhs, const Natural& rhs) { return lhs *= rhs; }
  friend Natural operator/(Natural lhs, const Natural& rhs) { return lhs /= rhs; }
  friend Natural operator%(Natural lhs, const Natural& rhs) { return lhs %= rhs; }

  /// Remainder modulo a machine word; cheaper than building a Natural divisor.
  std::uint64_t mod_u64(std::uint64_t divisor) const;
  bool divisible_by(std::uint64_t divisor) const;

  friend bool operator==(const Natural& a, const Natural& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Natural& n) { return os << n.str(); }

 private:
  template <std::signed_integral T>
  static std::uint64_t checked_unsigned(T value) {
    if (value < 0) throw DomainError("negative value cannot be a Natural");
    return static_cast<std::uint64_t>(value);
  }

  mpz_class value_;
};

}  // namespace vpal

template <>
struct std::hash<vpal::Natural> {
  std::size_t operator()(const vpal::Natural& n) const noexcept;
};
