#include "vpal/sieve.hpp"

#include <algorithm>
#include <cmath>

namespace vpal {

std::uint32_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  if (r > 0xFFFFFFFFULL) r = 0xFFFFFFFFULL;
  while (r * r > n) --r;
  while (r < 0xFFFFFFFFULL && (r + 1) * (r + 1) <= n) ++r;
  return static_cast<std::uint32_t>(r);
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
  std::vector<std::uint32_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(std::size_t{limit} + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi,
                                           std::span<const std::uint32_t> base_primes) {
  std::vector<std::uint64_t> out;
  if (hi < 2 || lo > hi) return out;
  lo = std::max<std::uint64_t>(lo, 2);
  std::vector<bool> composite(hi - lo + 1, false);
  for (std::uint64_t p : base_primes) {
    if (p * p > hi) break;
    std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
    for (std::uint64_t j = start; j <= hi; j += p) composite[j - lo] = true;
  }
  for (std::uint64_t n = lo; n <= hi; ++n) {
    if (!composite[n - lo]) out.push_back(n);
  }
  return out;
}

std::vector<std::uint64_t> v_segment(std::uint64_t lo, std::uint64_t hi,
                                     std::span<const std::uint32_t> base_primes) {
  if (lo == 0) throw DomainError("v is defined for n >= 1");
  if (lo > hi) return {};
  const std::size_t size = hi - lo + 1;
  std::vector<std::uint64_t> residual(size);
  std::vector<std::uint64_t> out(size, 0);
  for (std::size_t i = 0; i < size; ++i) residual[i] = lo + i;

  for (std::uint64_t p : base_primes) {
    if (p * p > hi) break;
    for (std::uint64_t j = (lo + p - 1) / p * p; j <= hi; j += p) {
      std::uint64_t& r = residual[j - lo];
      std::uint32_t e = 0;
      do {
        r /= p;
        ++e;
      } while (r % p == 0);
      out[j - lo] += p + (e > 1 ? e : 0);
    }
  }
  // At most one prime factor above sqrt(hi) remains.
  for (std::size_t i = 0; i < size; ++i) {
    if (residual[i] > 1) out[i] += residual[i];
  }
  return out;
}

SpfTable::SpfTable(std::uint32_t limit) : limit_(limit), spf_(std::size_t{limit} + 1, 0) {
  std::vector<std::uint32_t> primes;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::uint32_t>(i);
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    // Linear sieve: each composite is written once, by its smallest prime.
    for (std::uint32_t p : primes) {
      if (p > spf_[i] || i * p > limit) break;
      spf_[i * p] = p;
    }
  }
}

SmallFactorization SpfTable::factorize(std::uint64_t n) const {
  SmallFactorization out;
  while (n > 1) {
    const std::uint32_t p = spf_[n];
    std::uint32_t e = 0;
    do {
      n /= p;
      ++e;
    } while (n % p == 0);
    out.multiply(p, e);
  }
  return out;
}

std::uint64_t SpfTable::v(std::uint64_t n) const {
  std::uint64_t sum = 0;
  while (n > 1) {
    const std::uint32_t p = spf_[n];
    std::uint32_t e = 0;
    do {
      n /= p;
      ++e;
    } while (n % p == 0);
    sum += p + (e > 1 ? e : 0);
  }
  return sum;
}

}  // namespace vpal
