#include "vpal/vpal.hpp"

#include <algorithm>
#include <memory>
#include <optional>

#include "vpal/digits.hpp"
#include "vpal/parallel.hpp"
#include "vpal/sieve.hpp"

namespace vpal {

namespace {

// Reversal lookups above this go through on-demand factorization.
constexpr std::uint64_t kSpfTableCap = 1U << 24;

// Everything a shard worker reads; built once, shared read-only.
struct EnumerationContext {
  std::vector<std::uint32_t> base_primes;
  std::unique_ptr<SpfTable> reversal_table;
};

std::vector<VPalindromeHit> scan_shard(std::uint64_t lo, std::uint64_t hi, const EnumerationOptions& options,
                                       const EnumerationContext& context) {
  const std::uint32_t base = options.base;
  const std::vector<std::uint64_t> vs = v_segment(lo, hi, context.base_primes);
  std::vector<VPalindromeHit> hits;
  for (std::uint64_t n = lo;; ++n) {
    if (n % base != 0) {
      const std::optional<std::uint64_t> r = reverse_u64(n, base);
      const bool wanted = !r || (*r != n && (options.mode == EnumerationMode::all || n < *r));
      if (wanted) {
        const std::uint64_t vn = vs[n - lo];
        if (!r) {
          const Natural wide = reverse(Natural(n), base);
          const Natural vr = v(wide, options.budget);
          if (vr == Natural(vn)) hits.push_back({Natural(n), wide, vr, base});
        } else {
          std::uint64_t vr = 0;
          if (*r >= lo && *r <= hi) vr = vs[*r - lo];
          else if (context.reversal_table && context.reversal_table->covers(*r)) vr = context.reversal_table->v(*r);
          else vr = v(*r, options.budget);
          if (vr == vn) hits.push_back({Natural(n), Natural(*r), Natural(vn), base});
        }
      }
    }
    if (n == hi) break;
  }
  return hits;
}

}  // namespace

bool is_v_palindrome(const Natural& n, std::uint32_t base, EffortBudget budget) {
  if (base < 2) throw DomainError("base must be at least 2");
  if (n.is_zero()) throw DomainError("v-palindromes are defined for n >= 1");
  if (n.divisible_by(base)) return false;
  const Natural r = reverse(n, base);
  if (r == n) return false;
  if (n.fits_u64() && r.fits_u64()) return v(n.to_u64(), budget) == v(r.to_u64(), budget);
  return v(n, budget) == v(r, budget);
}

void enumerate(std::uint64_t lo, std::uint64_t hi, const EnumerationOptions& options,
               const std::function<void(const VPalindromeHit&)>& sink) {
  if (options.base < 2) throw DomainError("base must be at least 2");
  if (lo > hi) throw DomainError("enumeration range requires lo <= hi");
  if (hi > kMaxEnumerationBound) throw DomainError("enumeration bound exceeds " + std::to_string(kMaxEnumerationBound));
  if (options.shard_size == 0) throw DomainError("shard size must be positive");
  lo = std::max<std::uint64_t>(lo, 1);
  if (lo > hi) return;

  EnumerationContext context;
  context.base_primes = primes_up_to(isqrt(hi) + 1);
  // Reversals of n <= hi stay below base^length(hi).
  const Natural reversal_bound = Natural::pow(options.base, length(hi, options.base)) - Natural(1);
  const std::uint64_t table_limit =
      reversal_bound.fits_u64() ? std::min(reversal_bound.to_u64(), kSpfTableCap) : kSpfTableCap;
  if (table_limit > hi - lo + 1) {
    context.reversal_table = std::make_unique<SpfTable>(static_cast<std::uint32_t>(table_limit));
  }

  const std::uint64_t shard_count = (hi - lo) / options.shard_size + 1;
  const unsigned threads = std::max(1U, options.threads);
  // Shards are processed in waves so memory stays bounded for long ranges.
  const std::uint64_t wave = std::uint64_t{threads} * 4;
  for (std::uint64_t first = 0; first < shard_count; first += wave) {
    const std::uint64_t count = std::min(wave, shard_count - first);
    std::vector<std::vector<VPalindromeHit>> results(count);
    parallel_for(count, threads, [&](std::size_t i) {
      const std::uint64_t shard_lo = lo + (first + i) * options.shard_size;
      const std::uint64_t shard_hi = std::min(hi, shard_lo + (options.shard_size - 1));
      results[i] = scan_shard(shard_lo, shard_hi, options, context);
    });
    // Shards are disjoint and ascending, so the ordered merge is concatenation.
    for (const auto& shard : results) {
      for (const auto& hit : shard) sink(hit);
    }
  }
}

std::vector<VPalindromeHit> enumerate(std::uint64_t lo, std::uint64_t hi, const EnumerationOptions& options) {
  std::vector<VPalindromeHit> out;
  enumerate(lo, hi, options, [&](const VPalindromeHit& hit) { out.push_back(hit); });
  return out;
}

Natural family_nines(std::uint32_t k) {
  if (k == 0) throw DomainError("family_nines is defined for k >= 1");
  return Natural(2) * Natural::pow(10, k) - Natural(2);
}

Natural family_repeat18(std::uint32_t j) {
  if (j == 0) throw DomainError("family_repeat18 is defined for j >= 1");
  return Natural(18) * (Natural::pow(100, j) - Natural(1)) / Natural(99);
}

}  // namespace vpal
