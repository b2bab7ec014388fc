#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bellows/errors.hpp"
#include "bellows/exact/rational.hpp"

namespace bellows {

using Exponents = std::vector<unsigned>;

/// Graded lexicographic order, greatest first.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    const unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da > db;
    return a > b;
  }
};

namespace detail {

inline bool divide_coefficient(const Integer& a, const Integer& b, Integer& q) {
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) return false;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return true;
}

inline bool divide_coefficient(const Rational& a, const Rational& b, Rational& q) {
  q = a / b;
  return true;
}

inline void canonicalize_coefficient(Integer&) {}
inline void canonicalize_coefficient(Rational& q) { q.canonicalize(); }

}  // namespace detail

/// Sparse multivariate polynomial with coefficients in `Coeff`.
///
/// Canonical form: the variable list is sorted and holds exactly the
/// variables that occur; no zero coefficient is stored; terms iterate in
/// graded-lex order, leading term first. Two equal polynomials therefore have
/// identical representations and print identically.
template <class Coeff>
class BasicPoly {
 public:
  using Terms = std::map<Exponents, Coeff, GrlexGreater>;

  BasicPoly() = default;
  BasicPoly(long value) {  // NOLINT(google-explicit-constructor)
    if (value != 0) terms_.emplace(Exponents{}, Coeff(value));
  }

  BasicPoly(Coeff c) {  // NOLINT(google-explicit-constructor)
    detail::canonicalize_coefficient(c);
    if (c != 0) terms_.emplace(Exponents{}, std::move(c));
  }

  static BasicPoly constant(const Coeff& c) { return BasicPoly(c); }

  static BasicPoly variable(std::string name) {
    BasicPoly p;
    p.vars_.push_back(std::move(name));
    p.terms_.emplace(Exponents{1}, Coeff(1));
    return p;
  }

  /// Builds from explicit (variables, terms); variables need not be sorted.
  static BasicPoly from_terms(std::vector<std::string> vars, const std::vector<std::pair<Exponents, Coeff>>& terms) {
    BasicPoly p;
    p.vars_ = std::move(vars);
    for (const auto& [e, c] : terms) {
      if (e.size() != p.vars_.size()) throw DimensionError("exponent vector length does not match variable count");
      Coeff value = c;
      detail::canonicalize_coefficient(value);
      if (value != 0) p.terms_[e] += value;
    }
    p.canonicalize();
    return p;
  }

  const std::vector<std::string>& variables() const { return vars_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return vars_.empty(); }
  bool has_variable(std::string_view name) const { return index_of(name).has_value(); }

  Coeff constant_term() const {
    if (!is_constant()) {
      auto it = terms_.find(Exponents(vars_.size(), 0u));
      return it == terms_.end() ? Coeff(0) : it->second;
    }
    return terms_.empty() ? Coeff(0) : terms_.begin()->second;
  }

  /// Degree in `name`; -1 for the zero polynomial.
  int degree(std::string_view name) const {
    if (is_zero()) return -1;
    auto idx = index_of(name);
    if (!idx) return 0;
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[*idx]);
    return static_cast<int>(d);
  }

  int total_degree() const {
    if (is_zero()) return -1;
    const auto& e = terms_.begin()->first;
    return static_cast<int>(std::accumulate(e.begin(), e.end(), 0u));
  }

  /// Coefficients c_k with this = sum_k c_k * name^k; c_k free of `name`.
  std::vector<BasicPoly> coefficients_in(std::string_view name) const {
    auto idx = index_of(name);
    if (!idx) return {*this};
    std::vector<std::string> rest = vars_;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(*idx));
    std::vector<BasicPoly> out(static_cast<std::size_t>(degree(name)) + 1);
    for (auto& o : out) o.vars_ = rest;
    for (const auto& [e, c] : terms_) {
      Exponents r = e;
      const unsigned k = r[*idx];
      r.erase(r.begin() + static_cast<std::ptrdiff_t>(*idx));
      out[k].terms_.emplace(std::move(r), c);
    }
    for (auto& o : out) o.canonicalize();
    return out;
  }

  BasicPoly coefficient(std::string_view name, unsigned k) const {
    auto cs = coefficients_in(name);
    return k < cs.size() ? cs[k] : BasicPoly();
  }

  BasicPoly substitute(std::string_view name, const BasicPoly& value) const {
    auto cs = coefficients_in(name);
    BasicPoly acc;
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * value + *it;
    return acc;
  }

  BasicPoly pow(unsigned k) const {
    BasicPoly result(1), base = *this;
    while (k) {
      if (k & 1u) result = result * base;
      k >>= 1u;
      if (k) base = base * base;
    }
    return result;
  }

  /// Exact division by a scalar; nullopt when some coefficient is not divisible.
  std::optional<BasicPoly> divide_exact(const Coeff& d) const {
    if (d == 0) throw DegenerateInputError("division by zero constant");
    BasicPoly q;
    q.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
      Coeff r;
      if (!detail::divide_coefficient(c, d, r)) return std::nullopt;
      q.terms_.emplace(e, std::move(r));
    }
    return q;
  }

  /// Exact division by a polynomial; nullopt when `d` does not divide.
  std::optional<BasicPoly> divide_exact(const BasicPoly& d) const {
    if (d.is_zero()) throw DegenerateInputError("division by zero polynomial");
    if (d.is_constant()) return divide_exact(d.terms_.begin()->second);
    const auto vars = merge_variables(vars_, d.vars_);
    Terms rem = remap(vars);
    const Terms div = d.remap(vars);
    const auto& [lead_e, lead_c] = *div.begin();
    Terms quot;
    while (!rem.empty()) {
      const auto& [re, rc] = *rem.begin();
      Exponents qe(re.size());
      for (std::size_t i = 0; i < re.size(); ++i) {
        if (re[i] < lead_e[i]) return std::nullopt;
        qe[i] = re[i] - lead_e[i];
      }
      Coeff qc;
      if (!detail::divide_coefficient(rc, lead_c, qc)) return std::nullopt;
      for (const auto& [de, dc] : div) {
        Exponents pe(de.size());
        for (std::size_t i = 0; i < de.size(); ++i) pe[i] = de[i] + qe[i];
        auto [it, inserted] = rem.try_emplace(std::move(pe), 0);
        it->second -= qc * dc;
        if (it->second == 0) rem.erase(it);
      }
      quot.emplace(std::move(qe), std::move(qc));
    }
    BasicPoly q;
    q.vars_ = vars;
    q.terms_ = std::move(quot);
    q.canonicalize();
    return q;
  }

  template <class Other>
  BasicPoly<Other> convert() const {
    std::vector<std::pair<Exponents, Other>> ts;
    ts.reserve(terms_.size());
    for (const auto& [e, c] : terms_) ts.emplace_back(e, Other(c));
    return BasicPoly<Other>::from_terms(vars_, ts);
  }

  /// Binds some variables to rational values; the rest stay symbolic.
  BasicPoly<Rational> specialize(const std::map<std::string, Rational, std::less<>>& values) const {
    std::vector<int> bound(vars_.size(), -1);
    std::vector<Rational> val(vars_.size());
    std::vector<std::string> rest;
    std::vector<std::size_t> rest_pos;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (auto it = values.find(vars_[i]); it != values.end()) {
        bound[i] = 1;
        val[i] = it->second;
      } else {
        rest.push_back(vars_[i]);
        rest_pos.push_back(i);
      }
    }
    std::vector<std::pair<Exponents, Rational>> ts;
    ts.reserve(terms_.size());
    for (const auto& [e, c] : terms_) {
      Rational coeff(c);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (bound[i] > 0 && e[i] > 0) coeff *= rpow(val[i], e[i]);
      }
      if (coeff == 0) continue;
      Exponents r;
      r.reserve(rest_pos.size());
      for (auto p : rest_pos) r.push_back(e[p]);
      ts.emplace_back(std::move(r), std::move(coeff));
    }
    return BasicPoly<Rational>::from_terms(rest, ts);
  }

  /// Full evaluation; throws PreconditionError when a variable is unbound.
  Rational evaluate(const std::map<std::string, Rational, std::less<>>& values) const {
    for (const auto& v : vars_) {
      if (!values.count(v)) throw PreconditionError("no value bound for variable '" + v + "'");
    }
    return specialize(values).constant_term();
  }

  BasicPoly operator-() const {
    BasicPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  friend BasicPoly operator+(const BasicPoly& a, const BasicPoly& b) { return combine(a, b, false); }
  friend BasicPoly operator-(const BasicPoly& a, const BasicPoly& b) { return combine(a, b, true); }

  friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
    if (a.is_zero() || b.is_zero()) return BasicPoly();
    const auto vars = merge_variables(a.vars_, b.vars_);
    const Terms ta = a.remap(vars);
    const Terms tb = b.remap(vars);
    BasicPoly r;
    r.vars_ = vars;
    Exponents e(vars.size());
    for (const auto& [ea, ca] : ta) {
      for (const auto& [eb, cb] : tb) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        auto [it, inserted] = r.terms_.try_emplace(e, 0);
        it->second += ca * cb;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
    r.canonicalize();
    return r;
  }

  BasicPoly scaled(const Coeff& s) const {
    if (s == 0) return BasicPoly();
    BasicPoly r = *this;
    for (auto& [e, c] : r.terms_) c *= s;
    return r;
  }

  BasicPoly& operator+=(const BasicPoly& o) { return *this = *this + o; }
  BasicPoly& operator-=(const BasicPoly& o) { return *this = *this - o; }
  BasicPoly& operator*=(const BasicPoly& o) { return *this = *this * o; }

  friend bool operator==(const BasicPoly& a, const BasicPoly& b) { return a.vars_ == b.vars_ && a.terms_ == b.terms_; }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Coeff mag = c < 0 ? Coeff(-c) : c;
      if (first) {
        if (c < 0) os << '-';
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      bool monomial_empty = std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
      bool wrote = false;
      if (mag != 1 || monomial_empty) {
        os << mag.get_str();
        wrote = true;
      }
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (wrote) os << '*';
        os << vars_[i];
        if (e[i] > 1) os << '^' << e[i];
        wrote = true;
      }
    }
    return os.str();
  }

 private:
  template <class>
  friend class BasicPoly;

  std::vector<std::string> vars_;
  Terms terms_;

  std::optional<std::size_t> index_of(std::string_view name) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
    if (it == vars_.end() || *it != name) return std::nullopt;
    return static_cast<std::size_t>(it - vars_.begin());
  }

  static std::vector<std::string> merge_variables(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    if (a == b) return a;
    std::vector<std::string> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }

  Terms remap(const std::vector<std::string>& target) const {
    if (target == vars_) return terms_;
    std::vector<std::size_t> pos(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      pos[i] = static_cast<std::size_t>(std::lower_bound(target.begin(), target.end(), vars_[i]) - target.begin());
    }
    Terms out;
    for (const auto& [e, c] : terms_) {
      Exponents r(target.size(), 0u);
      for (std::size_t i = 0; i < e.size(); ++i) r[pos[i]] = e[i];
      out.emplace(std::move(r), c);
    }
    return out;
  }

  static BasicPoly combine(const BasicPoly& a, const BasicPoly& b, bool subtract) {
    const auto vars = merge_variables(a.vars_, b.vars_);
    BasicPoly r;
    r.vars_ = vars;
    r.terms_ = a.remap(vars);
    for (auto& [e, c] : b.remap(vars)) {
      auto [it, inserted] = r.terms_.try_emplace(e, 0);
      if (subtract) {
        it->second -= c;
      } else {
        it->second += c;
      }
      if (it->second == 0) r.terms_.erase(it);
    }
    r.canonicalize();
    return r;
  }

  /// Sorts variables and drops the ones that no longer occur.
  void canonicalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
      it = it->second == 0 ? terms_.erase(it) : std::next(it);
    }
    const std::size_t n = vars_.size();
    std::vector<bool> used(n, false);
    for (const auto& [e, c] : terms_) {
      for (std::size_t i = 0; i < n; ++i) used[i] = used[i] || e[i] > 0;
    }
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) order.push_back(i);
    }
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return vars_[x] < vars_[y]; });
    for (std::size_t i = 1; i < order.size(); ++i) {
      if (vars_[order[i]] == vars_[order[i - 1]]) throw DimensionError("duplicate variable '" + vars_[order[i]] + "'");
    }
    bool identity = order.size() == n;
    for (std::size_t i = 0; identity && i < n; ++i) identity = order[i] == i;
    if (identity) return;
    std::vector<std::string> nv;
    for (auto i : order) nv.push_back(vars_[i]);
    Terms nt;
    for (auto& [e, c] : terms_) {
      Exponents r;
      r.reserve(order.size());
      for (auto i : order) r.push_back(e[i]);
      nt.emplace(std::move(r), std::move(c));
    }
    vars_ = std::move(nv);
    terms_ = std::move(nt);
  }
};

using MultiPoly = BasicPoly<Integer>;
using RationalPoly = BasicPoly<Rational>;

/// Multiplies by the least common denominator; returns (integer poly, lcd).
std::pair<MultiPoly, Integer> clear_denominators(const RationalPoly& p);

}  // namespace bellows
