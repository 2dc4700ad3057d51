#pragma once

#include <cstdint>
#include <vector>

#include "vpal/errors.hpp"

namespace vpal {

// Finiteness estimate for prime v-palindromes. If the chance that x and x+2
// are both prime is at most C / ln^2 x, the m-th anchor pair contributes at
// most C / ln^2(5*10^m - 3), which is itself at most 100*C / m^2. The
// logarithm is natural throughout.

inline constexpr double kDefaultModelConstant = 1.0;

struct HeuristicReport {
  double C = kDefaultModelConstant;
  std::uint64_t n_start = 1;
  std::uint64_t N = 1;
  std::vector<double> terms;  // pair_probability(n, C) for n in [n_start, N]
  double partial_sum = 0.0;
  double envelope_sum = 0.0;  // sum of 100*C/n^2 over the same range
  double tail_bound = 0.0;    // 100*C/N bounds the envelope beyond N

  friend bool operator==(const HeuristicReport&, const HeuristicReport&) = default;
};

/// C / ln^2(5*10^n - 3). DomainError for n = 0 or C <= 0.
double pair_probability(std::uint64_t n, double C = kDefaultModelConstant);

/// 100*C / n^2.
double envelope_term(std::uint64_t n, double C = kDefaultModelConstant);

/// Sums in ascending n with Neumaier-compensated accumulation.
HeuristicReport expected_count(std::uint64_t n_start, std::uint64_t N, double C = kDefaultModelConstant);

/// ln(5*10^n - 3) without forming the power.
double log_anchor(std::uint64_t n);

}  // namespace vpal
