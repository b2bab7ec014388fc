#include "bellows/exact/multipoly.hpp"

namespace bellows {

std::pair<MultiPoly, Integer> clear_denominators(const RationalPoly& p) {
  Integer lcd = 1;
  for (const auto& [e, c] : p.terms()) mpz_lcm(lcd.get_mpz_t(), lcd.get_mpz_t(), c.get_den_mpz_t());
  std::vector<std::pair<Exponents, Integer>> terms;
  terms.reserve(p.term_count());
  for (const auto& [e, c] : p.terms()) terms.emplace_back(e, c.get_num() * (lcd / c.get_den()));
  return {MultiPoly::from_terms(p.variables(), terms), lcd};
}

}  // namespace bellows
