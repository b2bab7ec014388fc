#pragma once

#include <set>
#include <vector>

#include "bellows/exact/rational.hpp"
#include "bellows/geometry/embedding.hpp"
#include "bellows/geometry/scalar.hpp"

namespace bellows {

/// sum_i (x_{u,i} - x_{v,i})^2. Over the complex numbers this is the
/// orthogonal squared length, no conjugation.
template <class S>
S sq_dist(const Embedding<S>& e, const Vertex& u, const Vertex& v) {
  const auto& a = e.point(u);
  const auto& b = e.point(v);
  S sum = ScalarTraits<S>::from_rational(Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    const S d = a[i] - b[i];
    sum += d * d;
  }
  return sum;
}

/// Hermitian squared length sum_i |x_{u,i} - x_{v,i}|^2.
double hermitian_sq_dist(const Embedding<Complex>& e, const Vertex& u, const Vertex& v);

/// 2^floor(n/2).
inline long volume_power_of_two(int n) { return 1L << (n / 2); }

/// det(p_1 - O, ..., p_n - O) for the listed vertices.
template <class S>
S cone_determinant(const Embedding<S>& e, const std::vector<Vertex>& vertices, const std::vector<S>& origin) {
  const std::size_t n = static_cast<std::size_t>(e.dim);
  if (vertices.size() != n) throw DimensionError("cone over a face needs exactly n vertices");
  Grid<S> m(n, std::vector<S>(n));
  for (std::size_t r = 0; r < n; ++r) {
    const auto& x = e.point(vertices[r]);
    for (std::size_t c = 0; c < n; ++c) m[r][c] = x[c] - origin[c];
  }
  return scalar_det(m);
}

template <class S>
std::vector<S> zero_point(int dim) {
  return std::vector<S>(static_cast<std::size_t>(dim), ScalarTraits<S>::from_rational(Rational(0)));
}

/// sum_i c_i det(p(v_1^i) - O, ..., p(v_n^i) - O): n! times the oriented volume.
template <class S>
S scaled_cone_sum(const Polyhedron<S>& p, const std::vector<S>& origin) {
  validate_polyhedron(p);
  if (static_cast<int>(origin.size()) != p.dim()) throw DimensionError("origin has the wrong dimension");
  S sum = ScalarTraits<S>::from_rational(Rational(0));
  for (const auto& [s, c] : p.cycle.terms()) {
    sum += ScalarTraits<S>::from_rational(Rational(c)) * cone_determinant(p.embedding, s, origin);
  }
  return sum;
}

/// Generalized oriented volume by the cone formula; O defaults to 0.
template <class S>
S oriented_volume(const Polyhedron<S>& p, const std::vector<S>& origin) {
  const S sum = scaled_cone_sum(p, origin);
  return sum * ScalarTraits<S>::from_rational(Rational(1) / Rational(factorial(static_cast<unsigned>(p.dim()))));
}

template <class S>
S oriented_volume(const Polyhedron<S>& p) {
  return oriented_volume(p, zero_point<S>(p.dim()));
}

/// W = 2^floor(n/2) n! V, computed without division.
template <class S>
S normalized_volume(const Polyhedron<S>& p, const std::vector<S>& origin) {
  return ScalarTraits<S>::from_rational(Rational(volume_power_of_two(p.dim()))) * scaled_cone_sum(p, origin);
}

template <class S>
S normalized_volume(const Polyhedron<S>& p) {
  return normalized_volume(p, zero_point<S>(p.dim()));
}

/// W of the boundary of the oriented n-simplex (v_0, ..., v_n):
/// 2^floor(n/2) det(v_1 - v_0, ..., v_n - v_0).
template <class S>
S simplex_normalized_volume(const Embedding<S>& e, const std::vector<Vertex>& ordered) {
  if (static_cast<int>(ordered.size()) != e.dim + 1) throw DimensionError("an n-simplex needs n+1 vertices");
  const std::vector<Vertex> rest(ordered.begin() + 1, ordered.end());
  return ScalarTraits<S>::from_rational(Rational(volume_power_of_two(e.dim))) *
         cone_determinant(e, rest, e.point(ordered.front()));
}

/// sum_i c_i W(d Delta_i) over the n-chain Y.
template <class S>
S chain_normalized_volume(const Embedding<S>& e, const Chain& y) {
  if (y.dimension() != e.dim) throw DimensionError("filling chain must have the ambient dimension");
  S sum = ScalarTraits<S>::from_rational(Rational(0));
  for (const auto& [s, c] : y.terms()) sum += ScalarTraits<S>::from_rational(Rational(c)) * simplex_normalized_volume(e, s);
  return sum;
}

/// W_Z = sum_i c_i W(d Delta_i) for a filling dY = Z. Throws
/// PreconditionError when dY != Z and InternalConsistencyError when the
/// result disagrees with the direct cone formula (beyond kFloatTolerance
/// relative to the scale for float fields).
template <class S>
S volume_via_filling(const Polyhedron<S>& p, const Chain& y) {
  validate_polyhedron(p);
  if (boundary(y) != p.cycle) throw PreconditionError("filling chain does not bound the cycle");
  const S filled = chain_normalized_volume(p.embedding, y);
  const S direct = normalized_volume(p);
  const double scale = std::max(1.0, ScalarTraits<S>::magnitude(direct));
  if (!ScalarTraits<S>::is_zero(filled - direct, kFloatTolerance * scale)) {
    throw InternalConsistencyError("volume via filling " + ScalarTraits<S>::str(filled) + " differs from direct " +
                                   ScalarTraits<S>::str(direct));
  }
  return filled;
}

enum class LengthKind { automatic, orthogonal, hermitian };

struct VolumeBound {
  double bound = 0;
  double volume_abs = 0;
  double max_length = 0;  // max l (real / orthogonal) or max h (Hermitian)
  long c_sigma = 0;
  long m = 0;
  bool satisfied = false;
};

/// |V| <= c_Sigma m^n / n! * (max l_uv)^{n/2} over the edges of supp(Z).
/// For complex embeddings `automatic` uses the Hermitian lengths h_uv;
/// `orthogonal` uses |l_uv| instead, for which no such bound holds in general.
VolumeBound volume_upper_bound(const Polyhedron<Rational>& p, LengthKind kind = LengthKind::automatic);
VolumeBound volume_upper_bound(const Polyhedron<double>& p, LengthKind kind = LengthKind::automatic);
VolumeBound volume_upper_bound(const Polyhedron<Complex>& p, LengthKind kind = LengthKind::automatic);

/// Edges {u,v} of supp(Z), sorted.
std::vector<std::pair<Vertex, Vertex>> support_edges(const Chain& z);

}  // namespace bellows
