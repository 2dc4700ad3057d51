#include "vpal/arith.hpp"

namespace vpal {

std::uint32_t iota(std::uint32_t alpha) {
  if (alpha == 0) throw DomainError("iota is defined for alpha >= 1");
  return alpha > 1 ? alpha : 0;
}

std::uint64_t v(const SmallFactorization& f) noexcept {
  std::uint64_t sum = 0;
  for (const auto& [p, e] : f) sum += p + (e > 1 ? e : 0);
  return sum;
}

Natural v(const Factorization& f) {
  Natural sum;
  for (const auto& [p, e] : f.factors()) sum += p + Natural(std::uint64_t{iota(e)});
  return sum;
}

std::uint64_t v(std::uint64_t n, EffortBudget budget) { return v(factorize(n, budget)); }

Natural v(const Natural& n, EffortBudget budget) { return v(factorize(n, budget)); }

Natural alladi_erdos_A(const Factorization& f) {
  Natural sum;
  for (const auto& [p, e] : f.factors()) sum += p * Natural(std::uint64_t{e});
  return sum;
}

Natural alladi_erdos_A(const Natural& n, EffortBudget budget) { return alladi_erdos_A(factorize(n, budget)); }

Natural oeis_F(const Factorization& f) {
  Natural sum;
  for (const auto& [p, e] : f.factors()) sum += p + Natural(std::uint64_t{e});
  return sum;
}

Natural oeis_F(const Natural& n, EffortBudget budget) { return oeis_F(factorize(n, budget)); }

Natural oeis_G(const Factorization& f) {
  Natural product = 1U;
  for (const auto& [p, e] : f.factors()) product *= p * Natural(std::uint64_t{e});
  return product;
}

Natural oeis_G(const Natural& n, EffortBudget budget) { return oeis_G(factorize(n, budget)); }

}  // namespace vpal
