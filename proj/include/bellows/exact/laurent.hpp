#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bellows/exact/rational.hpp"

namespace bellows {

/// Truncated Laurent series in t over the rationals.
///
/// A value is known modulo t^cap: the stored coefficients cover exponents
/// low, low+1, ..., cap-1 and the rest is unknown. Exact values (no cap) have
/// every nonzero term stored. When every known coefficient cancels the value
/// becomes O(t^cap): arithmetic with it stays well defined, but asking for
/// its order raises PrecisionError.
class LaurentScalar {
 public:
  static constexpr unsigned kDefaultPrecision = 16;

  LaurentScalar() = default;
  LaurentScalar(long value) : LaurentScalar(Rational(value)) {}  // NOLINT(google-explicit-constructor)
  LaurentScalar(const Rational& value);                          // NOLINT(google-explicit-constructor)

  /// sum_k coefficients[k] t^(base_order + k), known up to (excluding)
  /// t^(base_order + coefficients.size()) unless `exact`.
  static LaurentScalar series(long base_order, std::vector<Rational> coefficients, bool exact = false);
  /// O(t^cap): nothing known below t^cap.
  static LaurentScalar big_o(long cap);

  bool is_exact() const { return !cap_.has_value(); }
  bool is_exact_zero() const { return is_exact() && coeffs_.empty(); }
  /// True when a nonzero leading coefficient is known.
  bool has_known_order() const { return !coeffs_.empty(); }

  /// Exponent of the leading nonzero term. Throws PrecisionError for O(t^cap)
  /// and for exact zero.
  long order() const;
  /// Relative precision: number of known coefficients from the leading one on.
  std::optional<long> relative_precision() const;
  std::optional<long> absolute_precision() const { return cap_; }
  /// Stored coefficients, starting at the leading exponent (or at the cap
  /// when nothing is known).
  const std::vector<Rational>& known_coefficients() const { return coeffs_; }
  long leading_exponent() const { return low_; }
  /// Coefficient of t^k; throws PrecisionError beyond the known window.
  Rational coefficient(long k) const;

  LaurentScalar inverse(unsigned precision = kDefaultPrecision) const;

  friend LaurentScalar operator+(const LaurentScalar& a, const LaurentScalar& b);
  friend LaurentScalar operator-(const LaurentScalar& a, const LaurentScalar& b);
  friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b);
  friend LaurentScalar operator/(const LaurentScalar& a, const LaurentScalar& b) { return a * b.inverse(); }
  LaurentScalar operator-() const;

  LaurentScalar& operator+=(const LaurentScalar& o) { return *this = *this + o; }
  LaurentScalar& operator-=(const LaurentScalar& o) { return *this = *this - o; }
  LaurentScalar& operator*=(const LaurentScalar& o) { return *this = *this * o; }

  /// Equality of the known parts (same order, cap and coefficients).
  friend bool operator==(const LaurentScalar& a, const LaurentScalar& b) = default;

  std::string to_string() const;

 private:
  long low_ = 0;
  std::vector<Rational> coeffs_;
  std::optional<long> cap_;

  void normalize();
};

/// Value of the simulated place: a rational or infinity.
struct PlaceValue {
  bool infinite = false;
  Rational value;

  friend bool operator==(const PlaceValue&, const PlaceValue&) = default;
};

/// phi(a): infinity for negative order, 0 for positive order or exact zero,
/// else the t^0 coefficient. O(t^cap) with cap >= 1 provably maps to 0;
/// with cap <= 0 the value is undetermined and PrecisionError is raised.
PlaceValue laurent_place(const LaurentScalar& a);

/// |a|_phi <= |b|_phi, i.e. order(a) >= order(b); exact zero is smallest.
bool valuation_leq(const LaurentScalar& a, const LaurentScalar& b);

/// phi(a) is finite, i.e. order(a) >= 0.
bool is_finite_at_place(const LaurentScalar& a);

}  // namespace bellows
