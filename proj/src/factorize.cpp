#include <algorithm>
#include <numeric>
#include <vector>

#include "vpal/arith.hpp"

namespace vpal {

namespace {

using u128 = unsigned __int128;

constexpr std::uint32_t kSmallPrimeLimit = 1U << 16;
// Trial division bound for machine words before switching to rho.
constexpr std::uint32_t kTrialLimitU64 = 1024;

std::vector<std::uint32_t> sieve_small_primes() {
  std::vector<bool> composite(kSmallPrimeLimit, false);
  std::vector<std::uint32_t> primes;
  for (std::uint32_t i = 2; i < kSmallPrimeLimit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = std::uint64_t{i} * i; j < kSmallPrimeLimit; j += i) composite[j] = true;
  }
  return primes;
}

class StepCounter {
 public:
  explicit StepCounter(EffortBudget budget) : remaining_(budget.steps) {}

  // False once the budget is spent.
  bool consume(std::uint64_t steps) noexcept {
    if (steps > remaining_) {
      remaining_ = 0;
      return false;
    }
    remaining_ -= steps;
    return true;
  }

 private:
  std::uint64_t remaining_;
};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

// Brent's cycle detection with batched gcds. Returns a nontrivial factor of
// the odd composite n, or 0 when the budget runs out.
std::uint64_t brent_rho(std::uint64_t n, StepCounter& steps) {
  constexpr std::uint64_t kBatch = 128;
  for (std::uint64_t c = 1;; ++c) {
    auto f = [n, c](std::uint64_t x) {
      return static_cast<std::uint64_t>((static_cast<u128>(x) * x + c) % n);
    };
    std::uint64_t y = 2, x = 2, ys = 2, q = 1, g = 1;
    for (std::uint64_t r = 1; g == 1; r <<= 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      if (!steps.consume(r)) return 0;
      for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        const std::uint64_t batch = std::min(kBatch, r - k);
        for (std::uint64_t i = 0; i < batch; ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        if (!steps.consume(2 * batch)) return 0;
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      // Batch overshot; replay one step at a time.
      do {
        ys = f(ys);
        if (!steps.consume(1)) return 0;
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

mpz_class brent_rho(const mpz_class& n, StepCounter& steps) {
  constexpr unsigned long kBatch = 128;
  for (unsigned long c = 1;; ++c) {
    auto f = [&n, c](mpz_class& x) {
      x *= x;
      x += c;
      mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), n.get_mpz_t());
    };
    mpz_class y = 2, x = 2, ys = 2, q = 1, g = 1, diff;
    for (unsigned long r = 1; g == 1; r <<= 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) f(y);
      if (!steps.consume(r)) return 0;
      for (unsigned long k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        const unsigned long batch = std::min(kBatch, r - k);
        for (unsigned long i = 0; i < batch; ++i) {
          f(y);
          diff = x - y;
          q *= abs(diff);
          mpz_fdiv_r(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        if (!steps.consume(2 * batch)) return 0;
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
    }
    if (g == n) {
      do {
        f(ys);
        if (!steps.consume(1)) return 0;
        diff = x - ys;
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

// Writes r and returns k > 1 when m = r^k, otherwise returns 1. Rho stalls
// on prime powers, so these are peeled off first.
unsigned perfect_root(const mpz_class& m, mpz_class& r) {
  if (mpz_perfect_power_p(m.get_mpz_t()) == 0) return 1;
  const auto bits = static_cast<unsigned>(mpz_sizeinbase(m.get_mpz_t(), 2));
  for (unsigned k = 2; k <= bits; ++k) {
    if (mpz_root(r.get_mpz_t(), m.get_mpz_t(), k) != 0) return k;
  }
  return 1;
}

// Splits an odd cofactor with no prime factor below kTrialLimitU64.
// Returns false when the budget runs out; `pending` then holds the
// cofactors still to be split.
bool split_u64(std::uint64_t n, SmallFactorization& out, StepCounter& steps, std::vector<std::uint64_t>& pending) {
  pending.assign(1, n);
  while (!pending.empty()) {
    const std::uint64_t m = pending.back();
    if (m == 1) {
      pending.pop_back();
      continue;
    }
    if (m < std::uint64_t{kTrialLimitU64} * kTrialLimitU64 || is_prime_u64(m)) {
      out.multiply(m);
      pending.pop_back();
      continue;
    }
    mpz_class root;
    if (const unsigned k = perfect_root(Natural(m).mpz(), root); k > 1) {
      pending.pop_back();
      pending.insert(pending.end(), k, mpz_get_ui(root.get_mpz_t()));
      continue;
    }
    const std::uint64_t d = brent_rho(m, steps);
    if (d == 0) return false;
    pending.pop_back();
    pending.push_back(d);
    pending.push_back(m / d);
  }
  return true;
}

}  // namespace

std::span<const std::uint32_t> small_primes() {
  static const std::vector<std::uint32_t> primes = sieve_small_primes();
  return primes;
}

Factorization::Factorization(std::vector<PrimePower> factors) : factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].exponent == 0) throw DomainError("factorization exponent must be positive");
    if (factors_[i].prime < Natural(2)) throw DomainError("factorization entry is not a prime");
    if (i > 0 && !(factors_[i - 1].prime < factors_[i].prime)) {
      throw DomainError("factorization must be strictly ascending by prime");
    }
  }
}

void Factorization::multiply(const Natural& prime, std::uint32_t exponent) {
  if (exponent == 0) return;
  auto it = std::lower_bound(factors_.begin(), factors_.end(), prime,
                             [](const PrimePower& pp, const Natural& p) { return pp.prime < p; });
  if (it != factors_.end() && it->prime == prime) {
    it->exponent += exponent;
  } else {
    factors_.insert(it, PrimePower{prime, exponent});
  }
}

Natural Factorization::value() const {
  mpz_class out = 1;
  mpz_class power;
  for (const auto& [p, e] : factors_) {
    mpz_pow_ui(power.get_mpz_t(), p.mpz().get_mpz_t(), e);
    out *= power;
  }
  return Natural(std::move(out));
}

void SmallFactorization::multiply(std::uint64_t prime, std::uint32_t exponent) {
  if (exponent == 0) return;
  std::size_t i = 0;
  while (i < size_ && entries_[i].prime < prime) ++i;
  if (i < size_ && entries_[i].prime == prime) {
    entries_[i].exponent += exponent;
    return;
  }
  std::copy_backward(entries_.begin() + i, entries_.begin() + size_, entries_.begin() + size_ + 1);
  entries_[i] = Entry{prime, exponent};
  ++size_;
}

Factorization SmallFactorization::widen() const {
  std::vector<PrimePower> out;
  out.reserve(size_);
  for (const auto& [p, e] : *this) out.push_back(PrimePower{Natural(p), e});
  return Factorization(std::move(out));
}

BudgetExceeded::BudgetExceeded(Factorization partial, Natural cofactor)
    : Error("factorization budget exceeded; unsplit cofactor " + cofactor.str()),
      partial_(std::move(partial)),
      cofactor_(std::move(cofactor)) {}

SmallFactorization factorize(std::uint64_t n, EffortBudget budget) {
  if (n == 0) throw DomainError("cannot factorize 0");
  SmallFactorization out;
  if (n == 1) return out;

  const unsigned twos = static_cast<unsigned>(__builtin_ctzll(n));
  if (twos != 0) {
    out.multiply(2, twos);
    n >>= twos;
  }
  for (std::uint32_t p : small_primes().subspan(1)) {
    if (p >= kTrialLimitU64) break;
    if (std::uint64_t{p} * p > n) break;
    if (n % p != 0) continue;
    std::uint32_t e = 0;
    do {
      n /= p;
      ++e;
    } while (n % p == 0);
    out.multiply(p, e);
  }
  if (n == 1) return out;
  if (n < std::uint64_t{kTrialLimitU64} * kTrialLimitU64 || is_prime_u64(n)) {
    out.multiply(n);
    return out;
  }

  StepCounter steps(budget);
  std::vector<std::uint64_t> pending;
  if (!split_u64(n, out, steps, pending)) {
    mpz_class rest = 1;
    for (std::uint64_t m : pending) rest *= Natural(m).mpz();
    throw BudgetExceeded(out.widen(), Natural(std::move(rest)));
  }
  return out;
}

Factorization factorize(const Natural& n, EffortBudget budget) {
  if (n.is_zero()) throw DomainError("cannot factorize 0");
  if (n.fits_u64()) return factorize(n.to_u64(), budget).widen();

  Factorization out;
  mpz_class rest = n.mpz();
  for (std::uint32_t p : small_primes()) {
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p) == 0) continue;
    std::uint32_t e = 0;
    do {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    } while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0);
    out.multiply(Natural(std::uint64_t{p}), e);
  }

  StepCounter steps(budget);
  std::vector<mpz_class> pending{rest};
  while (!pending.empty()) {
    const mpz_class m = pending.back();
    if (m == 1) {
      pending.pop_back();
      continue;
    }
    if (mpz_fits_ulong_p(m.get_mpz_t()) != 0) {
      SmallFactorization small;
      std::vector<std::uint64_t> small_pending;
      if (!split_u64(mpz_get_ui(m.get_mpz_t()), small, steps, small_pending)) {
        for (const auto& [p, e] : small) out.multiply(Natural(p), e);
        mpz_class unsplit = 1;
        for (std::uint64_t s : small_pending) unsplit *= Natural(s).mpz();
        pending.pop_back();
        for (const auto& other : pending) unsplit *= other;
        throw BudgetExceeded(std::move(out), Natural(std::move(unsplit)));
      }
      for (const auto& [p, e] : small) out.multiply(Natural(p), e);
      pending.pop_back();
      continue;
    }
    const Natural as_natural(m);
    if (is_prime(as_natural).non_composite()) {
      out.multiply(as_natural);
      pending.pop_back();
      continue;
    }
    mpz_class root;
    if (const unsigned k = perfect_root(m, root); k > 1) {
      pending.pop_back();
      pending.insert(pending.end(), k, root);
      continue;
    }
    const mpz_class d = brent_rho(m, steps);
    if (d == 0) {
      mpz_class unsplit = 1;
      for (const auto& other : pending) unsplit *= other;
      throw BudgetExceeded(std::move(out), Natural(std::move(unsplit)));
    }
    pending.pop_back();
    pending.push_back(d);
    pending.push_back(m / d);
  }
  return out;
}

}  // namespace vpal
