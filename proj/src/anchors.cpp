#include "vpal/anchors.hpp"

#include <algorithm>

#include "vpal/checkpoint.hpp"
#include "vpal/digits.hpp"
#include "vpal/parallel.hpp"
#include "vpal/sieve.hpp"
#include "vpal/vpal.hpp"

namespace vpal {

namespace {

constexpr std::uint64_t kPrimeShard = 1U << 18;
constexpr std::uint64_t kSpfTableCap = 1U << 24;

}  // namespace

AnchorPair anchor(std::uint32_t m) {
  if (m == 0) throw DomainError("anchors are defined for m >= 1");
  const Natural five_pow = Natural(5) * Natural::pow(10, m);
  return {five_pow - Natural(1), five_pow - Natural(3)};
}

AnchorResult make_anchor_result(std::uint32_t m, PrimalityVerdict p_verdict, PrimalityVerdict q_verdict,
                                std::uint32_t floor) {
  auto [p, q] = anchor(m);
  AnchorResult r;
  r.m = m;
  r.p = std::move(p);
  r.q = std::move(q);
  r.p_verdict = p_verdict;
  r.q_verdict = q_verdict;
  r.meets_floor = m >= floor;
  r.is_candidate = p_verdict.non_composite() && q_verdict.non_composite() && r.meets_floor;
  return r;
}

AnchorResult check_anchor(std::uint32_t m, std::uint32_t rounds, std::uint32_t floor) {
  const auto [p, q] = anchor(m);
  const PrimalityVerdict pv = is_prime(p, rounds);
  // q only matters when p survives, but both verdicts are always reported.
  const PrimalityVerdict qv = is_prime(q, rounds);
  return make_anchor_result(m, pv, qv, floor);
}

bool converse_identity(std::uint32_t m) {
  const auto [p, q] = anchor(m);
  return reverse(p, 10) == Natural(2) * q;
}

std::vector<AnchorResult> search_anchors(std::uint32_t m_lo, std::uint32_t m_hi, const SearchOptions& options) {
  if (m_lo == 0) throw DomainError("anchors are defined for m >= 1");
  if (m_lo > m_hi) throw DomainError("anchor search requires m_lo <= m_hi");

  std::optional<AnchorCheckpoint> checkpoint;
  if (options.checkpoint) {
    checkpoint.emplace(AnchorCheckpoint::open(*options.checkpoint, {options.rounds, options.floor}));
  }

  std::vector<AnchorResult> results;
  results.reserve(m_hi - m_lo + 1);
  std::vector<std::uint32_t> missing;
  for (std::uint32_t m = m_lo;; ++m) {
    if (checkpoint && checkpoint->records().contains(m)) {
      const CheckpointRecord& rec = checkpoint->records().at(m);
      results.push_back(make_anchor_result(m, rec.p_verdict, rec.q_verdict, options.floor));
    } else {
      missing.push_back(m);
    }
    if (m == m_hi) break;
  }

  // Workers compute in any order; the single writer commits in ascending m.
  const unsigned threads = std::max(1U, options.threads);
  for (std::size_t first = 0; first < missing.size(); first += threads) {
    const std::size_t count = std::min<std::size_t>(threads, missing.size() - first);
    std::vector<AnchorResult> wave(count);
    parallel_for(count, threads, [&](std::size_t i) {
      wave[i] = check_anchor(missing[first + i], options.rounds, options.floor);
    });
    for (auto& r : wave) {
      if (checkpoint) checkpoint->append({r.m, r.p_verdict, r.q_verdict, options.rounds, utc_timestamp()});
      if (options.on_computed) options.on_computed(r);
      results.push_back(std::move(r));
    }
  }

  std::sort(results.begin(), results.end(), [](const AnchorResult& a, const AnchorResult& b) { return a.m < b.m; });
  return results;
}

VerificationReport verify_characterization(std::uint64_t bound, const VerifyOptions& options) {
  if (bound < 2) throw DomainError("verification bound must be at least 2");
  if (options.base < 2) throw DomainError("base must be at least 2");
  if (bound > kMaxEnumerationBound) throw DomainError("verification bound too large");

  const std::vector<std::uint32_t> base_primes = primes_up_to(isqrt(bound) + 1);
  const Natural reversal_bound = Natural::pow(options.base, length(bound, options.base)) - Natural(1);
  const std::uint64_t table_limit =
      reversal_bound.fits_u64() ? std::min(reversal_bound.to_u64(), kSpfTableCap) : kSpfTableCap;
  const SpfTable table(static_cast<std::uint32_t>(table_limit));

  // A prime p has v(p) = p, so p is a v-palindrome iff v(reverse(p)) = p.
  const std::uint64_t shard_count = (bound - 2) / kPrimeShard + 1;
  std::vector<std::vector<Natural>> shard_hits(shard_count);
  parallel_for(shard_count, options.threads, [&](std::size_t s) {
    const std::uint64_t lo = 2 + s * kPrimeShard;
    const std::uint64_t hi = std::min(bound, lo + kPrimeShard - 1);
    for (std::uint64_t p : primes_in_range(lo, hi, base_primes)) {
      if (p % options.base == 0) continue;
      const std::optional<std::uint64_t> r = reverse_u64(p, options.base);
      if (!r) {
        if (v(reverse(Natural(p), options.base), options.budget) == Natural(p)) shard_hits[s].emplace_back(p);
        continue;
      }
      if (*r == p) continue;
      const std::uint64_t vr = table.covers(*r) ? table.v(*r) : v(*r, options.budget);
      if (vr == p) shard_hits[s].emplace_back(p);
    }
  });

  VerificationReport report;
  report.bound = Natural(bound);
  for (auto& hits : shard_hits) {
    for (auto& p : hits) report.brute_force_hits.push_back(std::move(p));
  }

  const Natural limit(bound);
  for (std::uint32_t m = 1;; ++m) {
    const AnchorPair pair = anchor(m);
    if (pair.p > limit) break;
    if (m >= options.floor) {
      if (check_anchor(m, options.rounds, options.floor).is_candidate) report.characterization_hits.push_back(pair.p);
    } else if (std::binary_search(report.brute_force_hits.begin(), report.brute_force_hits.end(), pair.p)) {
      report.characterization_hits.push_back(pair.p);
    }
  }
  report.consistent = report.brute_force_hits == report.characterization_hits;
  return report;
}

}  // namespace vpal
