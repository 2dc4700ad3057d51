#include "vpal/heuristic.hpp"

#include <cmath>
#include <numbers>

#include "vpal/errors.hpp"

namespace vpal {

namespace {

void require_index(std::uint64_t n) {
  if (n == 0) throw DomainError("heuristic terms are indexed from n = 1");
}

void require_constant(double C) {
  if (!(C > 0.0) || !std::isfinite(C)) throw DomainError("model constant C must be positive and finite");
}

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

}  // namespace

double log_anchor(std::uint64_t n) {
  require_index(n);
  // 5*10^n - 3 is exact in a double up to n = 15.
  if (n <= 15) return std::log(5.0 * std::pow(10.0, static_cast<double>(n)) - 3.0);
  return static_cast<double>(n) * std::numbers::ln10 + std::log(5.0) +
         std::log1p(-0.6 * std::pow(10.0, -static_cast<double>(n)));
}

double pair_probability(std::uint64_t n, double C) {
  require_index(n);
  require_constant(C);
  const double l = log_anchor(n);
  return C / (l * l);
}

double envelope_term(std::uint64_t n, double C) {
  require_index(n);
  require_constant(C);
  const double dn = static_cast<double>(n);
  return 100.0 * C / (dn * dn);
}

HeuristicReport expected_count(std::uint64_t n_start, std::uint64_t N, double C) {
  require_index(n_start);
  require_constant(C);
  if (N < n_start) throw DomainError("expected_count requires n_start <= N");

  HeuristicReport report;
  report.C = C;
  report.n_start = n_start;
  report.N = N;
  report.terms.reserve(N - n_start + 1);
  CompensatedSum partial;
  CompensatedSum envelope;
  for (std::uint64_t n = n_start;; ++n) {
    const double term = pair_probability(n, C);
    report.terms.push_back(term);
    partial.add(term);
    envelope.add(envelope_term(n, C));
    if (n == N) break;
  }
  report.partial_sum = partial.value();
  report.envelope_sum = envelope.value();
  report.tail_bound = 100.0 * C / static_cast<double>(N);
  return report;
}

}  // namespace vpal
