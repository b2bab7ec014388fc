#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bellows/errors.hpp"
#include "bellows/exact/multipoly.hpp"
#include "bellows/exact/rational.hpp"

namespace bellows {

template <class T>
using Grid = std::vector<std::vector<T>>;

namespace detail {

template <class T>
void require_square(const Grid<T>& m) {
  for (const auto& row : m) {
    if (row.size() != m.size()) throw DimensionError("determinant of a non-square matrix");
  }
}

inline Integer exact_quotient(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Rational exact_quotient(const Rational& a, const Rational& b) { return a / b; }

template <class C>
BasicPoly<C> exact_quotient(const BasicPoly<C>& a, const BasicPoly<C>& b) {
  auto q = a.divide_exact(b);
  if (!q) throw InternalConsistencyError("Bareiss step produced an inexact polynomial division");
  return *std::move(q);
}

template <class T>
bool is_zero_entry(const T& x) {
  if constexpr (requires { x.is_zero(); }) {
    return x.is_zero();
  } else {
    return x == 0;
  }
}

template <class T>
std::size_t entry_size(const T& x) {
  if constexpr (requires { x.term_count(); }) {
    return x.term_count();
  } else {
    return 1;
  }
}

}  // namespace detail

/// Fraction-free Bareiss elimination. Every division is exact, so entries stay
/// in the coefficient ring (integers, or polynomials over the integers).
template <class T>
T det_bareiss(Grid<T> m) {
  detail::require_square(m);
  const std::size_t n = m.size();
  if (n == 0) return T(1);
  T prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (detail::is_zero_entry(m[k][k])) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && detail::is_zero_entry(m[swap_row][k])) ++swap_row;
      if (swap_row == n) return T(0);
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = detail::exact_quotient(num, prev);
      }
    }
    prev = m[k][k];
  }
  T d = m[n - 1][n - 1];
  return negate ? T(-d) : d;
}

/// Laplace expansion along rows, memoized over column subsets (2^n states).
/// Division-free, so it works over any commutative ring. Throws
/// ResourceError when an intermediate minor exceeds `term_cap` terms
/// (0 disables the cap).
template <class T>
T det_cofactor(const Grid<T>& m, std::size_t term_cap = 0) {
  detail::require_square(m);
  const std::size_t n = m.size();
  if (n == 0) return T(1);
  if (n > 20) throw ResourceError("cofactor expansion limited to 20x20 matrices");
  // minors[S] = det of the last |S| rows restricted to the columns in S.
  std::unordered_map<std::uint32_t, T> minors;
  minors.emplace(0u, T(1));
  for (std::size_t size = 1; size <= n; ++size) {
    const std::size_t row = n - size;
    std::unordered_map<std::uint32_t, T> next;
    for (const auto& [sub, minor] : minors) {
      if (detail::is_zero_entry(minor)) continue;
      std::size_t below = 0;
      for (std::size_t col = 0; col < n; ++col) {
        const std::uint32_t bit = 1u << col;
        if (sub & bit) {
          ++below;
          continue;
        }
        if (detail::is_zero_entry(m[row][col])) continue;
        // Position of `col` among the columns of sub ∪ {col} gives the sign.
        T term = m[row][col] * minor;
        auto [it, inserted] = next.try_emplace(sub | bit, T(0));
        if (below % 2 == 0) {
          it->second = it->second + term;
        } else {
          it->second = it->second - term;
        }
        if (term_cap && detail::entry_size(it->second) > term_cap) {
          throw ResourceError("determinant minor exceeded the term cap");
        }
      }
    }
    minors = std::move(next);
  }
  const std::uint32_t full = n == 32 ? ~0u : ((1u << n) - 1u);
  auto it = minors.find(full);
  return it == minors.end() ? T(0) : it->second;
}

/// Default cap on terms of any intermediate symbolic minor.
inline constexpr std::size_t kDefaultTermCap = 2'000'000;

/// Exact determinant of a polynomial matrix. Constant matrices go through
/// integer Bareiss; symbolic ones through memoized cofactor expansion (with
/// the term cap) up to 12x12 and polynomial Bareiss beyond.
MultiPoly poly_det(const Grid<MultiPoly>& m, std::size_t term_cap = kDefaultTermCap);
RationalPoly poly_det(const Grid<RationalPoly>& m, std::size_t term_cap = kDefaultTermCap);

Integer int_det(const Grid<Integer>& m);
Rational rational_det(const Grid<Rational>& m);

}  // namespace bellows
