#include "bellows/exact/determinant.hpp"

namespace bellows {

namespace {

template <class C>
BasicPoly<C> poly_det_impl(const Grid<BasicPoly<C>>& m, std::size_t term_cap) {
  detail::require_square(m);
  bool all_constant = true;
  for (const auto& row : m) {
    for (const auto& e : row) all_constant = all_constant && e.is_constant();
  }
  if (all_constant) {
    Grid<C> numeric(m.size(), std::vector<C>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m.size(); ++j) numeric[i][j] = m[i][j].constant_term();
    }
    return BasicPoly<C>::constant(det_bareiss(std::move(numeric)));
  }
  if (m.size() <= 12) return det_cofactor(m, term_cap);
  return det_bareiss(m);
}

}  // namespace

MultiPoly poly_det(const Grid<MultiPoly>& m, std::size_t term_cap) { return poly_det_impl(m, term_cap); }

RationalPoly poly_det(const Grid<RationalPoly>& m, std::size_t term_cap) { return poly_det_impl(m, term_cap); }

Integer int_det(const Grid<Integer>& m) { return det_bareiss(m); }

Rational rational_det(const Grid<Rational>& m) {
  // Clearing row denominators keeps Bareiss in the integers.
  detail::require_square(m);
  Grid<Integer> scaled(m.size(), std::vector<Integer>(m.size()));
  Integer denominator = 1;
  for (std::size_t i = 0; i < m.size(); ++i) {
    Integer lcm = 1;
    for (const auto& e : m[i]) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.get_den_mpz_t());
    for (std::size_t j = 0; j < m.size(); ++j) scaled[i][j] = m[i][j].get_num() * (lcm / m[i][j].get_den());
    denominator *= lcm;
  }
  Rational r(det_bareiss(std::move(scaled)), denominator);
  r.canonicalize();
  return r;
}

}  // namespace bellows
