#include <array>
#include <random>

#include "vpal/arith.hpp"

namespace vpal {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// n odd, n > 3, d * 2^s = n - 1 with d odd.
bool strong_probable_prime(std::uint64_t n, std::uint64_t a, std::uint64_t d, unsigned s) noexcept {
  a %= n;
  if (a == 0) return true;
  std::uint64_t x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

bool strong_probable_prime(const mpz_class& n, const mpz_class& a, const mpz_class& d, unsigned long s) {
  const mpz_class n_minus_1 = n - 1;
  mpz_class x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

}  // namespace

std::string_view to_string(PrimalityStatus status) {
  switch (status) {
    case PrimalityStatus::prime:
      return "prime";
    case PrimalityStatus::composite:
      return "composite";
    case PrimalityStatus::probable_prime:
      return "probable_prime";
  }
  return "composite";
}

PrimalityStatus parse_primality_status(std::string_view name) {
  if (name == "prime") return PrimalityStatus::prime;
  if (name == "composite") return PrimalityStatus::composite;
  if (name == "probable_prime") return PrimalityStatus::probable_prime;
  throw DomainError("unknown primality status: " + std::string(name));
}

bool is_prime_u64(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  if (n < 37 * 37) return true;

  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  if (n < (1ULL << 32)) {
    for (std::uint64_t a : {2ULL, 7ULL, 61ULL}) {
      if (!strong_probable_prime(n, a, d, s)) return false;
    }
    return true;
  }
  // Sinclair's seven bases cover every n < 2^64.
  for (std::uint64_t a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    if (!strong_probable_prime(n, a, d, s)) return false;
  }
  return true;
}

PrimalityVerdict is_prime(const Natural& n, std::uint32_t rounds) {
  if (n.fits_u64()) {
    return {is_prime_u64(n.to_u64()) ? PrimalityStatus::prime : PrimalityStatus::composite, 0};
  }
  for (std::uint32_t p : small_primes()) {
    if (n.divisible_by(p)) return {PrimalityStatus::composite, 0};
  }
  if (rounds == 0) rounds = 1;

  const mpz_class& z = n.mpz();
  mpz_class d = z - 1;
  const unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  // Base 2 first; it rejects nearly every composite on its own.
  if (!strong_probable_prime(z, mpz_class(2), d, s)) return {PrimalityStatus::composite, 0};

  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(static_cast<unsigned long>(std::hash<Natural>{}(n)));
  const mpz_class span = z - 3;  // bases drawn from [2, n-2]
  for (std::uint32_t round = 1; round < rounds; ++round) {
    const mpz_class a = rng.get_z_range(span) + 2;
    if (!strong_probable_prime(z, a, d, s)) return {PrimalityStatus::composite, 0};
  }
  return {PrimalityStatus::probable_prime, rounds};
}

}  // namespace vpal
