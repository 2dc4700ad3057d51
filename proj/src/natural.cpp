#include "vpal/natural.hpp"

#include <limits>

namespace vpal {

namespace {

void set_u64(mpz_class& z, std::uint64_t v) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t), "LP64 expected");
  mpz_set_ui(z.get_mpz_t(), static_cast<unsigned long>(v));
}

}  // namespace

Natural::Natural(std::uint64_t value) { set_u64(value_, value); }

Natural::Natural(const mpz_class& value) : value_(value) {
  if (sgn(value_) < 0) throw DomainError("negative value cannot be a Natural");
}

Natural::Natural(mpz_class&& value) : value_(std::move(value)) {
  if (sgn(value_) < 0) throw DomainError("negative value cannot be a Natural");
}

Natural Natural::parse(std::string_view decimal) {
  if (decimal.empty()) throw DomainError("empty number");
  for (char c : decimal) {
    if (c < '0' || c > '9') throw DomainError("not a decimal natural number: " + std::string(decimal));
  }
  Natural out;
  out.value_.set_str(std::string(decimal), 10);
  return out;
}

Natural Natural::pow(std::uint64_t base, std::uint64_t exponent) {
  Natural out;
  mpz_ui_pow_ui(out.value_.get_mpz_t(), base, exponent);
  return out;
}

bool Natural::fits_u64() const noexcept { return mpz_fits_ulong_p(value_.get_mpz_t()) != 0; }

std::uint64_t Natural::to_u64() const {
  if (!fits_u64()) throw DomainError("value exceeds 64 bits: " + str());
  return mpz_get_ui(value_.get_mpz_t());
}

std::size_t Natural::bit_width() const noexcept {
  return is_zero() ? 0 : mpz_sizeinbase(value_.get_mpz_t(), 2);
}

Natural& Natural::operator+=(const Natural& rhs) {
  value_ += rhs.value_;
  return *this;
}

Natural& Natural::operator-=(const Natural& rhs) {
  if (cmp(value_, rhs.value_) < 0) throw DomainError("Natural subtraction underflow");
  value_ -= rhs.value_;
  return *this;
}

Natural& Natural::operator*=(const Natural& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Natural& Natural::operator/=(const Natural& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  mpz_fdiv_q(value_.get_mpz_t(), value_.get_mpz_t(), rhs.value_.get_mpz_t());
  return *this;
}

Natural& Natural::operator%=(const Natural& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  mpz_fdiv_r(value_.get_mpz_t(), value_.get_mpz_t(), rhs.value_.get_mpz_t());
  return *this;
}

std::uint64_t Natural::mod_u64(std::uint64_t divisor) const {
  if (divisor == 0) throw DomainError("division by zero");
  return mpz_fdiv_ui(value_.get_mpz_t(), divisor);
}

bool Natural::divisible_by(std::uint64_t divisor) const {
  if (divisor == 0) return is_zero();
  return mpz_divisible_ui_p(value_.get_mpz_t(), divisor) != 0;
}

}  // namespace vpal

std::size_t std::hash<vpal::Natural>::operator()(const vpal::Natural& n) const noexcept {
  const auto* z = n.mpz().get_mpz_t();
  std::size_t h = static_cast<std::size_t>(z->_mp_size);
  for (int i = 0; i < z->_mp_size; ++i) {
    h ^= static_cast<std::size_t>(z->_mp_d[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}
