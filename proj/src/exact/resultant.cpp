#include "bellows/exact/resultant.hpp"

#include <string>

#include "bellows/errors.hpp"

namespace bellows {

template <class C>
Grid<BasicPoly<C>> sylvester_matrix(const BasicPoly<C>& p, const BasicPoly<C>& q, std::string_view var) {
  if (p.is_zero() || q.is_zero()) throw DegenerateInputError("resultant with a zero polynomial");
  if (!p.has_variable(var) && !q.has_variable(var)) {
    throw DegenerateInputError("resultant variable '" + std::string(var) + "' occurs in neither polynomial");
  }
  const auto pc = p.coefficients_in(var);
  const auto qc = q.coefficients_in(var);
  const std::size_t m = pc.size() - 1;
  const std::size_t n = qc.size() - 1;
  const std::size_t size = m + n;
  Grid<BasicPoly<C>> s(size, std::vector<BasicPoly<C>>(size));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k <= m; ++k) s[r][r + k] = pc[m - k];
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t k = 0; k <= n; ++k) s[n + r][r + k] = qc[n - k];
  }
  return s;
}

template Grid<MultiPoly> sylvester_matrix(const MultiPoly&, const MultiPoly&, std::string_view);
template Grid<RationalPoly> sylvester_matrix(const RationalPoly&, const RationalPoly&, std::string_view);

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, std::string_view var, std::size_t term_cap) {
  return poly_det(sylvester_matrix(p, q, var), term_cap);
}

RationalPoly resultant(const RationalPoly& p, const RationalPoly& q, std::string_view var, std::size_t term_cap) {
  return poly_det(sylvester_matrix(p, q, var), term_cap);
}

std::vector<Rational> interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) throw DimensionError("interpolation needs as many values as nodes");
  const std::size_t n = xs.size();
  std::vector<Rational> dd = ys;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      const Rational gap = xs[i] - xs[i - level];
      if (gap == 0) throw DegenerateInputError("interpolation nodes must be distinct");
      dd[i] = (dd[i] - dd[i - 1]) / gap;
    }
  }
  // Horner on the Newton form.
  std::vector<Rational> coeffs(n);
  for (std::size_t k = n; k-- > 0;) {
    for (std::size_t j = n - 1; j > 0; --j) coeffs[j] = coeffs[j - 1] - xs[k] * coeffs[j];
    coeffs[0] = dd[k] - xs[k] * coeffs[0];
  }
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

RationalPoly univariate(std::string_view var, const std::vector<Rational>& coefficients) {
  std::vector<std::pair<Exponents, Rational>> terms;
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    if (coefficients[k] != 0) terms.emplace_back(Exponents{static_cast<unsigned>(k)}, coefficients[k]);
  }
  return RationalPoly::from_terms({std::string(var)}, terms);
}

RationalPoly resultant_by_interpolation(const RationalPoly& p, const RationalPoly& q, std::string_view var) {
  std::vector<std::string> others;
  for (const auto* poly : {&p, &q}) {
    for (const auto& v : poly->variables()) {
      if (v != var && std::find(others.begin(), others.end(), v) == others.end()) others.push_back(v);
    }
  }
  if (others.size() > 1) throw PreconditionError("interpolated resultant supports one free variable");
  if (others.empty()) return resultant(p, q, var);
  const std::string& free_var = others.front();

  // Work with integer polynomials; res(cp p, cq q) = cp^deg q * cq^deg p * res(p, q).
  auto [pi, p_scale] = clear_denominators(p);
  auto [qi, q_scale] = clear_denominators(q);
  const auto rows = sylvester_matrix(pi, qi, var);
  const unsigned m = static_cast<unsigned>(std::max(p.degree(var), 0));
  const unsigned n = static_cast<unsigned>(std::max(q.degree(var), 0));
  const unsigned bound = n * static_cast<unsigned>(std::max(p.degree(free_var), 0)) +
                         m * static_cast<unsigned>(std::max(q.degree(free_var), 0));

  std::vector<Rational> xs, ys;
  for (unsigned i = 0; i <= bound; ++i) {
    const long node = (i % 2 == 0) ? static_cast<long>(i / 2) : -static_cast<long>((i + 1) / 2);
    const std::map<std::string, Rational, std::less<>> at{{free_var, Rational(node)}};
    Grid<Integer> numeric(rows.size(), std::vector<Integer>(rows.size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t c = 0; c < rows.size(); ++c) {
        numeric[r][c] = rows[r][c].is_zero() ? Integer(0) : rows[r][c].specialize(at).constant_term().get_num();
      }
    }
    xs.emplace_back(node);
    ys.emplace_back(int_det(std::move(numeric)));
  }
  Rational scale(ipow(p_scale, n) * ipow(q_scale, m));
  scale.canonicalize();
  auto coeffs = interpolate(xs, ys);
  for (auto& c : coeffs) c /= scale;
  return univariate(free_var, coeffs);
}

}  // namespace bellows
