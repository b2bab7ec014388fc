#include "bellows/geometry/cayley_menger.hpp"

#include <algorithm>

namespace bellows {

std::string length_variable(const Vertex& u, const Vertex& v) {
  if (u == v) throw PreconditionError("squared length of a vertex with itself");
  return u < v ? "l(" + u + "," + v + ")" : "l(" + v + "," + u + ")";
}

MultiPoly cayley_menger_symbolic(const std::vector<Vertex>& vertices, std::size_t term_cap) {
  const std::size_t k = vertices.size();
  Grid<MultiPoly> m(k + 1, std::vector<MultiPoly>(k + 1, MultiPoly(1)));
  m[0][0] = MultiPoly(0);
  for (std::size_t i = 0; i < k; ++i) {
    m[i + 1][i + 1] = MultiPoly(0);
    for (std::size_t j = i + 1; j < k; ++j) {
      m[i + 1][j + 1] = m[j + 1][i + 1] = MultiPoly::variable(length_variable(vertices[i], vertices[j]));
    }
  }
  return poly_det(m, term_cap);
}

std::vector<Vertex> simplex_vertex_names(int n) {
  std::vector<Vertex> out;
  for (int i = 0; i <= n; ++i) out.push_back("v" + std::to_string(i));
  return out;
}

MultiPoly simplex_monic_relation(int n, std::size_t term_cap) {
  if (n < 1) throw PreconditionError("simplex dimension must be at least 1");
  const MultiPoly cm = cayley_menger_symbolic(simplex_vertex_names(n), term_cap);
  const MultiPoly w = MultiPoly::variable("W");
  if (n % 2 == 0) return w * w + cm;
  auto half = cm.divide_exact(Integer(2));
  if (!half) throw InternalConsistencyError("odd-order Cayley-Menger determinant has an odd coefficient");
  return w * w - *half;
}

MultiPoly cm_volume_identity_symbolic(int n) {
  const auto names = simplex_vertex_names(n);
  auto coord = [&](std::size_t v, int i) { return MultiPoly::variable("x(" + names[v] + "," + std::to_string(i) + ")"); };
  Grid<MultiPoly> m(static_cast<std::size_t>(n), std::vector<MultiPoly>(static_cast<std::size_t>(n)));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) m[r][c] = coord(r + 1, c) - coord(0, c);
  }
  const MultiPoly det = poly_det(m);
  MultiPoly cm = cayley_menger_symbolic(names);
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = i + 1; j < names.size(); ++j) {
      MultiPoly l;
      for (int c = 0; c < n; ++c) {
        const MultiPoly d = coord(i, c) - coord(j, c);
        l += d * d;
      }
      cm = cm.substitute(length_variable(names[i], names[j]), l);
    }
  }
  const MultiPoly lhs = det * det * MultiPoly(1L << n);
  return n % 2 == 1 ? lhs - cm : lhs + cm;
}

std::map<std::string, Rational, std::less<>> length_values(const Embedding<Rational>& e,
                                                           const std::vector<Vertex>& vertices) {
  std::map<std::string, Rational, std::less<>> out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      out[length_variable(vertices[i], vertices[j])] = sq_dist(e, vertices[i], vertices[j]);
    }
  }
  return out;
}

}  // namespace bellows
