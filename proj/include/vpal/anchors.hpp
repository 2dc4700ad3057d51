#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <vector>

#include "vpal/arith.hpp"
#include "vpal/natural.hpp"

namespace vpal {

// Prime v-palindromes are exactly the primes p = 5*10^m - 1 (digits 4 9...9)
// with m at or above a floor, for which q = p - 2 = 5*10^m - 3 (digits
// 4 9...9 7) is prime as well. The floor records how far brute force has
// ruled out short primes; it is data, not logic.
inline constexpr std::uint32_t kDefaultAnchorFloor = 4;

struct AnchorPair {
  Natural p;  // 5*10^m - 1
  Natural q;  // 5*10^m - 3
};

struct AnchorResult {
  std::uint32_t m = 0;
  Natural p;
  Natural q;
  PrimalityVerdict p_verdict;
  PrimalityVerdict q_verdict;
  bool is_candidate = false;  // both non-composite and meets_floor
  bool meets_floor = false;

  friend bool operator==(const AnchorResult&, const AnchorResult&) = default;
};

struct VerificationReport {
  Natural bound;
  std::vector<Natural> brute_force_hits;
  std::vector<Natural> characterization_hits;
  bool consistent = false;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// DomainError for m = 0.
AnchorPair anchor(std::uint32_t m);

/// Assembles a result from known verdicts (used when restoring checkpoints).
AnchorResult make_anchor_result(std::uint32_t m, PrimalityVerdict p_verdict, PrimalityVerdict q_verdict,
                                std::uint32_t floor = kDefaultAnchorFloor);

AnchorResult check_anchor(std::uint32_t m, std::uint32_t rounds = kDefaultRounds,
                          std::uint32_t floor = kDefaultAnchorFloor);

/// reverse(5*10^m - 1) == 2 * (5*10^m - 3), evaluated on the digits.
bool converse_identity(std::uint32_t m);

struct SearchOptions {
  std::uint32_t rounds = kDefaultRounds;
  std::uint32_t floor = kDefaultAnchorFloor;
  unsigned threads = 1;
  std::optional<std::filesystem::path> checkpoint;
  /// Called on the searching thread for each freshly computed result, after
  /// it has been checkpointed. Results restored from the checkpoint skip it.
  std::function<void(const AnchorResult&)> on_computed;
};

/// One result per m in [m_lo, m_hi], ascending. With a checkpoint, values
/// already recorded are restored instead of recomputed and new ones are
/// appended in ascending m. Throws CheckpointCorrupt rather than restart.
std::vector<AnchorResult> search_anchors(std::uint32_t m_lo, std::uint32_t m_hi, const SearchOptions& options = {});

struct VerifyOptions {
  std::uint32_t base = 10;
  std::uint32_t rounds = kDefaultRounds;
  std::uint32_t floor = kDefaultAnchorFloor;
  unsigned threads = 1;
  EffortBudget budget{};
};

/// Brute force over every prime <= bound against the anchor
/// characterization. Anchors are always the base-10 family; other bases
/// only change the brute-force side.
VerificationReport verify_characterization(std::uint64_t bound, const VerifyOptions& options = {});

}  // namespace vpal
