#include "bellows/exact/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "bellows/errors.hpp"

namespace bellows {

LaurentScalar::LaurentScalar(const Rational& value) {
  if (value != 0) coeffs_.push_back(value);
}

LaurentScalar LaurentScalar::series(long base_order, std::vector<Rational> coefficients, bool exact) {
  LaurentScalar s;
  s.low_ = base_order;
  if (!exact) s.cap_ = base_order + static_cast<long>(coefficients.size());
  s.coeffs_ = std::move(coefficients);
  s.normalize();
  return s;
}

LaurentScalar LaurentScalar::big_o(long cap) {
  LaurentScalar s;
  s.low_ = cap;
  s.cap_ = cap;
  return s;
}

void LaurentScalar::normalize() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c != 0; });
  low_ += static_cast<long>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  if (cap_) {
    if (low_ >= *cap_) {
      coeffs_.clear();
      low_ = *cap_;
    } else if (low_ + static_cast<long>(coeffs_.size()) > *cap_) {
      coeffs_.resize(static_cast<std::size_t>(*cap_ - low_));
    }
  } else {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.empty()) low_ = 0;
  }
}

long LaurentScalar::order() const {
  if (coeffs_.empty()) {
    if (is_exact()) throw PrecisionError("order of an exact zero is infinite");
    throw PrecisionError("series cancelled to O(t^" + std::to_string(*cap_) + "); order unknown");
  }
  return low_;
}

std::optional<long> LaurentScalar::relative_precision() const {
  if (!cap_) return std::nullopt;
  return *cap_ - low_;
}

Rational LaurentScalar::coefficient(long k) const {
  if (cap_ && k >= *cap_) throw PrecisionError("coefficient of t^" + std::to_string(k) + " is beyond the known window");
  if (k < low_ || k >= low_ + static_cast<long>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k - low_)];
}

LaurentScalar LaurentScalar::operator-() const {
  LaurentScalar r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

namespace {

std::optional<long> min_cap(const std::optional<long>& a, const std::optional<long>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

}  // namespace

LaurentScalar operator+(const LaurentScalar& a, const LaurentScalar& b) {
  LaurentScalar r;
  r.cap_ = min_cap(a.cap_, b.cap_);
  const long a_end = a.low_ + static_cast<long>(a.coeffs_.size());
  const long b_end = b.low_ + static_cast<long>(b.coeffs_.size());
  long lo = a.coeffs_.empty() ? b.low_ : (b.coeffs_.empty() ? a.low_ : std::min(a.low_, b.low_));
  long hi = r.cap_ ? *r.cap_ : std::max(a_end, b_end);
  if (r.cap_) lo = std::min(lo, *r.cap_);
  r.low_ = lo;
  if (hi > lo) {
    r.coeffs_.resize(static_cast<std::size_t>(hi - lo));
    for (long k = lo; k < hi; ++k) {
      Rational& c = r.coeffs_[static_cast<std::size_t>(k - lo)];
      if (k >= a.low_ && k < a_end) c += a.coeffs_[static_cast<std::size_t>(k - a.low_)];
      if (k >= b.low_ && k < b_end) c += b.coeffs_[static_cast<std::size_t>(k - b.low_)];
    }
  }
  r.normalize();
  return r;
}

LaurentScalar operator-(const LaurentScalar& a, const LaurentScalar& b) { return a + (-b); }

LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b) {
  if (a.is_exact_zero() || b.is_exact_zero()) return LaurentScalar();
  if (a.coeffs_.empty() || b.coeffs_.empty()) {
    // At least one factor is O(t^cap); only a lower bound on the order survives.
    const long la = a.coeffs_.empty() ? *a.cap_ : a.low_;
    const long lb = b.coeffs_.empty() ? *b.cap_ : b.low_;
    return LaurentScalar::big_o(la + lb);
  }
  LaurentScalar r;
  r.low_ = a.low_ + b.low_;
  const auto ra = a.relative_precision();
  const auto rb = b.relative_precision();
  std::size_t len;
  if (!ra && !rb) {
    len = a.coeffs_.size() + b.coeffs_.size() - 1;
  } else {
    const long rel = std::min(ra.value_or(*rb), rb.value_or(*ra));
    len = static_cast<std::size_t>(rel);
    r.cap_ = r.low_ + rel;
  }
  r.coeffs_.assign(len, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size() && i < len; ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size() && i + j < len; ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  r.normalize();
  return r;
}

LaurentScalar LaurentScalar::inverse(unsigned precision) const {
  if (is_exact_zero()) throw DegenerateInputError("inverse of zero");
  if (coeffs_.empty()) throw PrecisionError("inverse of a series with unknown leading term");
  if (is_exact() && coeffs_.size() == 1) return series(-low_, {1 / coeffs_[0]}, true);
  long rel = static_cast<long>(precision);
  if (cap_) rel = std::min(rel, *cap_ - low_);
  std::vector<Rational> out(static_cast<std::size_t>(rel));
  const Rational lead_inv = 1 / coeffs_[0];
  out[0] = lead_inv;
  for (std::size_t k = 1; k < out.size(); ++k) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= k && i < coeffs_.size(); ++i) acc += coeffs_[i] * out[k - i];
    out[k] = -lead_inv * acc;
  }
  return series(-low_, std::move(out), false);
}

std::string LaurentScalar::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    const long k = low_ + static_cast<long>(i);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    const Rational mag = abs(c);
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 't';
    if (k != 1) os << '^' << k;
  }
  if (cap_) {
    if (!first) os << " + ";
    os << "O(t^" << *cap_ << ')';
  } else if (first) {
    os << '0';
  }
  return os.str();
}

PlaceValue laurent_place(const LaurentScalar& a) {
  if (a.is_exact_zero()) return {};
  if (!a.has_known_order()) {
    if (*a.absolute_precision() >= 1) return {};
    throw PrecisionError("place of " + a.to_string() + " is undetermined at this precision");
  }
  const long ord = a.order();
  if (ord < 0) return {true, Rational(0)};
  if (ord > 0) return {};
  return {false, a.coefficient(0)};
}

bool valuation_leq(const LaurentScalar& a, const LaurentScalar& b) {
  if (a.is_exact_zero()) return true;
  if (b.is_exact_zero()) return false;
  return a.order() >= b.order();
}

bool is_finite_at_place(const LaurentScalar& a) {
  if (a.is_exact_zero()) return true;
  if (!a.has_known_order()) {
    if (*a.absolute_precision() >= 0) return true;
    throw PrecisionError("finiteness of " + a.to_string() + " is undetermined at this precision");
  }
  return a.order() >= 0;
}

}  // namespace bellows
