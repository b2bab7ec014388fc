#pragma once

#include <map>
#include <string>
#include <vector>

#include "bellows/exact/multipoly.hpp"
#include "bellows/geometry/embedding.hpp"
#include "bellows/geometry/volume.hpp"

namespace bellows {

/// Name of the squared-length variable of the pair {u, v}: "l(u,v)" with u < v.
std::string length_variable(const Vertex& u, const Vertex& v);

/// Bordered determinant of a symmetric zero-diagonal grid of squared
/// distances. Throws PreconditionError on asymmetric or nonzero-diagonal
/// input (exact comparison for exact fields, kFloatTolerance otherwise).
template <class S>
S cayley_menger_from_lengths(const Grid<S>& l) {
  const std::size_t k = l.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (l[i].size() != k) throw DimensionError("squared-distance grid is not square");
    if (!ScalarTraits<S>::is_zero(l[i][i])) throw PreconditionError("squared-distance grid has a nonzero diagonal");
    for (std::size_t j = i + 1; j < k; ++j) {
      if (!ScalarTraits<S>::is_zero(l[i][j] - l[j][i])) throw PreconditionError("squared-distance grid is not symmetric");
    }
  }
  const S zero = ScalarTraits<S>::from_rational(Rational(0));
  const S one = ScalarTraits<S>::from_rational(Rational(1));
  Grid<S> m(k + 1, std::vector<S>(k + 1, one));
  m[0][0] = zero;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i + 1][j + 1] = l[i][j];
  }
  return scalar_det(m);
}

/// CM(v_0, ..., v_k) of points given by coordinates.
template <class S>
S cayley_menger(const std::vector<std::vector<S>>& points) {
  const std::size_t k = points.size();
  Grid<S> l(k, std::vector<S>(k, ScalarTraits<S>::from_rational(Rational(0))));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (points[i].size() != points[j].size()) throw DimensionError("points of different dimensions");
      S sum = ScalarTraits<S>::from_rational(Rational(0));
      for (std::size_t c = 0; c < points[i].size(); ++c) {
        const S d = points[i][c] - points[j][c];
        sum += d * d;
      }
      l[i][j] = l[j][i] = sum;
    }
  }
  return cayley_menger_from_lengths(l);
}

template <class S>
S cayley_menger(const Embedding<S>& e, const std::vector<Vertex>& vertices) {
  std::vector<std::vector<S>> pts;
  for (const auto& v : vertices) pts.push_back(e.point(v));
  return cayley_menger(pts);
}

/// CM(v_0, ..., v_k) as an integer polynomial in the variables l(v_i,v_j).
MultiPoly cayley_menger_symbolic(const std::vector<Vertex>& vertices, std::size_t term_cap = kDefaultTermCap);

/// V^2 - (-1)^{n+1} CM / (2^n (n!)^2) for n+1 points in n-space, where V is
/// the oriented volume of the simplex. Zero by the Cayley-Menger formula.
template <class S>
S cm_volume_identity(const std::vector<std::vector<S>>& points) {
  const std::size_t n = points.size() - 1;
  Grid<S> m(n, std::vector<S>(n));
  for (std::size_t r = 0; r < n; ++r) {
    if (points[r + 1].size() != n) throw DimensionError("n+1 points in n-space expected");
    for (std::size_t c = 0; c < n; ++c) m[r][c] = points[r + 1][c] - points[0][c];
  }
  const Rational fact(factorial(static_cast<unsigned>(n)));
  const S v = scalar_det(m) * ScalarTraits<S>::from_rational(1 / fact);
  Rational scale = 1 / (Rational(ipow(Integer(2), static_cast<unsigned>(n))) * fact * fact);
  if (n % 2 == 0) scale = -scale;
  return v * v - ScalarTraits<S>::from_rational(scale) * cayley_menger(points);
}

/// 2^n det(x_{v_i} - x_{v_0})^2 - (-1)^{n+1} CM(l(x)) over the polynomial ring
/// in the coordinates; the symbolic form of cm_volume_identity scaled by
/// 2^n (n!)^2. Zero iff the identity holds as a polynomial identity.
MultiPoly cm_volume_identity_symbolic(int n);

/// The monic relation between W of an n-simplex on v0..vn and its squared
/// edge lengths: W^2 + CM for even n, W^2 - CM/2 for odd n. Variables "W"
/// and l(vi,vj). Throws InternalConsistencyError if CM/2 is not integral.
MultiPoly simplex_monic_relation(int n, std::size_t term_cap = kDefaultTermCap);

/// Vertex names used by simplex_monic_relation.
std::vector<Vertex> simplex_vertex_names(int n);

/// Values of every l(u,v) over the given vertices, for specialization.
std::map<std::string, Rational, std::less<>> length_values(const Embedding<Rational>& e,
                                                           const std::vector<Vertex>& vertices);

}  // namespace bellows
