#pragma once

#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include "bellows/exact/determinant.hpp"
#include "bellows/exact/laurent.hpp"
#include "bellows/exact/rational.hpp"

namespace bellows {

using Complex = std::complex<double>;

/// Absolute tolerance for float fields on W-scale quantities.
inline constexpr double kFloatTolerance = 1e-9;

enum class Field { rational, float64, complex, laurent };

std::string field_name(Field f);
Field parse_field(const std::string& name);

/// The scalar contract shared by every coordinate field.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr Field field = Field::rational;
  static constexpr bool exact = true;
  static Rational from_rational(const Rational& q) { return q; }
  static bool is_zero(const Rational& x, double = kFloatTolerance) { return x == 0; }
  static double magnitude(const Rational& x) { return std::fabs(x.get_d()); }
  static std::string str(const Rational& x) { return x.get_str(); }
};

template <>
struct ScalarTraits<double> {
  static constexpr Field field = Field::float64;
  static constexpr bool exact = false;
  static double from_rational(const Rational& q) { return q.get_d(); }
  static bool is_zero(double x, double tol = kFloatTolerance) { return std::fabs(x) <= tol; }
  static double magnitude(double x) { return std::fabs(x); }
  static std::string str(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
  }
};

template <>
struct ScalarTraits<Complex> {
  static constexpr Field field = Field::complex;
  static constexpr bool exact = false;
  static Complex from_rational(const Rational& q) { return {q.get_d(), 0.0}; }
  static bool is_zero(const Complex& x, double tol = kFloatTolerance) { return std::abs(x) <= tol; }
  static double magnitude(const Complex& x) { return std::abs(x); }
  static std::string str(const Complex& x) {
    return ScalarTraits<double>::str(x.real()) + (x.imag() < 0 ? "" : "+") + ScalarTraits<double>::str(x.imag()) + "i";
  }
};

template <>
struct ScalarTraits<LaurentScalar> {
  static constexpr Field field = Field::laurent;
  static constexpr bool exact = true;
  static LaurentScalar from_rational(const Rational& q) { return LaurentScalar(q); }
  static bool is_zero(const LaurentScalar& x, double = kFloatTolerance) { return x.is_exact_zero(); }
  static double magnitude(const LaurentScalar&) { return std::nan(""); }
  static std::string str(const LaurentScalar& x) { return x.to_string(); }
};

namespace detail {

template <class S>
S float_det(Grid<S> m) {
  const std::size_t n = m.size();
  S det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(m[i][k]) > std::abs(m[pivot][k])) pivot = i;
    }
    if (m[pivot][k] == S(0.0)) return S(0.0);
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const S f = m[i][k] / m[k][k];
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

}  // namespace detail

/// Determinant in the scalar's own field: exact Bareiss for rationals,
/// partial-pivot elimination for floats, cofactor expansion for series.
inline Rational scalar_det(const Grid<Rational>& m) { return rational_det(m); }
inline double scalar_det(const Grid<double>& m) {
  detail::require_square(m);
  return detail::float_det(m);
}
inline Complex scalar_det(const Grid<Complex>& m) {
  detail::require_square(m);
  return detail::float_det(m);
}
inline LaurentScalar scalar_det(const Grid<LaurentScalar>& m) { return det_cofactor(m); }

}  // namespace bellows
