#include "vpal/digits.hpp"

#include <algorithm>

#include "vpal/errors.hpp"

namespace vpal {

namespace {

void require_base(std::uint32_t base) {
  if (base < 2) throw DomainError("base must be at least 2");
}

}  // namespace

DigitVector::DigitVector(std::uint32_t base, std::vector<std::uint32_t> digits_lsf)
    : base_(base), digits_(std::move(digits_lsf)) {
  require_base(base_);
  for (std::uint32_t d : digits_) {
    if (d >= base_) {
      throw DigitOutOfRange("digit " + std::to_string(d) + " out of range for base " + std::to_string(base_));
    }
  }
  while (!digits_.empty() && digits_.back() == 0) digits_.pop_back();
}

std::string DigitVector::str() const {
  if (digits_.empty()) return "0";
  std::string out;
  for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) {
    if (base_ > 10 && !out.empty()) out += ',';
    out += std::to_string(*it);
  }
  return out;
}

DigitVector to_digits(const Natural& n, std::uint32_t base) {
  require_base(base);
  std::vector<std::uint32_t> digits;
  if (n.is_zero()) return DigitVector(base, std::move(digits));
  if (base <= 62) {
    // GMP's string conversion is subquadratic; decode its alphabet back.
    const std::string s = n.mpz().get_str(static_cast<int>(base));
    digits.reserve(s.size());
    for (auto it = s.rbegin(); it != s.rend(); ++it) {
      const char c = *it;
      std::uint32_t d = 0;
      if (c >= '0' && c <= '9') d = static_cast<std::uint32_t>(c - '0');
      else if (base <= 36) d = static_cast<std::uint32_t>((c >= 'a' ? c - 'a' : c - 'A') + 10);
      else if (c >= 'A' && c <= 'Z') d = static_cast<std::uint32_t>(c - 'A' + 10);
      else d = static_cast<std::uint32_t>(c - 'a' + 36);
      digits.push_back(d);
    }
  } else {
    mpz_class rest = n.mpz();
    while (sgn(rest) != 0) {
      digits.push_back(static_cast<std::uint32_t>(mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), base)));
    }
  }
  return DigitVector(base, std::move(digits));
}

Natural from_digits(std::uint32_t base, std::span<const std::uint32_t> digits_lsf) {
  require_base(base);
  mpz_class out = 0;
  for (auto it = digits_lsf.rbegin(); it != digits_lsf.rend(); ++it) {
    if (*it >= base) {
      throw DigitOutOfRange("digit " + std::to_string(*it) + " out of range for base " + std::to_string(base));
    }
    out *= base;
    out += *it;
  }
  return Natural(std::move(out));
}

Natural from_digits(const DigitVector& d) { return from_digits(d.base(), d.digits()); }

std::size_t length(const Natural& n, std::uint32_t base) {
  require_base(base);
  if (n.is_zero()) return 0;
  if (base <= 62) {
    // mpz_sizeinbase may overshoot by one for non-powers of two.
    std::size_t len = mpz_sizeinbase(n.mpz().get_mpz_t(), static_cast<int>(base));
    mpz_class bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), base, len - 1);
    if (n.mpz() < bound) --len;
    return len;
  }
  return to_digits(n, base).size();
}

std::size_t length(std::uint64_t n, std::uint32_t base) {
  require_base(base);
  std::size_t len = 0;
  for (; n != 0; n /= base) ++len;
  return len;
}

std::uint32_t digit(const Natural& n, std::size_t i, std::uint32_t base) {
  const DigitVector d = to_digits(n, base);
  if (i >= d.size()) {
    throw IndexOutOfRange("digit index " + std::to_string(i) + " out of range for length " +
                          std::to_string(d.size()));
  }
  return d.digits()[i];
}

Natural reverse(const Natural& n, std::uint32_t base) {
  require_base(base);
  if (n.is_zero()) throw DomainError("reverse is defined for n >= 1");
  if (n.fits_u64()) {
    if (auto r = reverse_u64(n.to_u64(), base)) return Natural(*r);
  }
  const DigitVector d = to_digits(n, base);
  std::vector<std::uint32_t> flipped(d.digits().rbegin(), d.digits().rend());
  return from_digits(base, flipped);
}

std::optional<std::uint64_t> reverse_u64(std::uint64_t n, std::uint32_t base) {
  require_base(base);
  if (n == 0) throw DomainError("reverse is defined for n >= 1");
  unsigned __int128 r = 0;
  constexpr auto kMax = static_cast<unsigned __int128>(UINT64_MAX);
  for (; n != 0; n /= base) {
    r = r * base + n % base;
    if (r > kMax) return std::nullopt;
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace vpal
