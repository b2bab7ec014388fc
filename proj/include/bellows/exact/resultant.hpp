#pragma once

#include <string_view>
#include <vector>

#include "bellows/exact/determinant.hpp"
#include "bellows/exact/multipoly.hpp"

namespace bellows {

/// Sylvester matrix of p and q in `var`: deg_q(var) shifted rows of p's
/// coefficients (leading first) followed by deg_p(var) rows of q's.
/// With this convention res_x(x - a, x - b) = a - b.
template <class C>
Grid<BasicPoly<C>> sylvester_matrix(const BasicPoly<C>& p, const BasicPoly<C>& q, std::string_view var);

/// Eliminates `var` from p and q. Throws DegenerateInputError when `var`
/// occurs in neither input or either input is zero.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, std::string_view var,
                    std::size_t term_cap = kDefaultTermCap);
RationalPoly resultant(const RationalPoly& p, const RationalPoly& q, std::string_view var,
                       std::size_t term_cap = kDefaultTermCap);

/// Same resultant for inputs with at most one variable besides `var`,
/// computed by evaluating that variable at integer points, taking integer
/// determinants, and interpolating. Keeps the formal degrees in `var`, so
/// the answer matches the symbolic Sylvester determinant exactly.
RationalPoly resultant_by_interpolation(const RationalPoly& p, const RationalPoly& q, std::string_view var);

/// Newton interpolation through (xs[i], ys[i]); xs pairwise distinct.
/// Returns dense coefficients, constant term first.
std::vector<Rational> interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

RationalPoly univariate(std::string_view var, const std::vector<Rational>& coefficients);

}  // namespace bellows
