#include "bellows/geometry/volume.hpp"

#include <cmath>

#include "bellows/simplicial/complex.hpp"

namespace bellows {

double hermitian_sq_dist(const Embedding<Complex>& e, const Vertex& u, const Vertex& v) {
  const auto& a = e.point(u);
  const auto& b = e.point(v);
  double sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::norm(a[i] - b[i]);
  return sum;
}

std::vector<std::pair<Vertex, Vertex>> support_edges(const Chain& z) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const auto& e : support(z).simplices(1)) out.emplace_back(e[0], e[1]);
  return out;
}

namespace {

template <class S, class LengthFn>
VolumeBound bound_with(const Polyhedron<S>& p, LengthFn length) {
  validate_polyhedron(p);
  VolumeBound b;
  for (const auto& [s, c] : p.cycle.terms()) b.c_sigma += std::labs(c.get_si());
  b.m = static_cast<long>(p.cycle.vertices().size());
  for (const auto& [u, v] : support_edges(p.cycle)) b.max_length = std::max(b.max_length, length(u, v));
  const int n = p.dim();
  const double fact = factorial(static_cast<unsigned>(n)).get_d();
  b.bound = static_cast<double>(b.c_sigma) * std::pow(static_cast<double>(b.m), n) / fact * std::pow(b.max_length, n / 2.0);
  b.volume_abs = ScalarTraits<S>::magnitude(oriented_volume(p));
  b.satisfied = b.volume_abs <= b.bound;
  return b;
}

}  // namespace

VolumeBound volume_upper_bound(const Polyhedron<Rational>& p, LengthKind) {
  return bound_with(p, [&](const Vertex& u, const Vertex& v) { return sq_dist(p.embedding, u, v).get_d(); });
}

VolumeBound volume_upper_bound(const Polyhedron<double>& p, LengthKind) {
  return bound_with(p, [&](const Vertex& u, const Vertex& v) { return sq_dist(p.embedding, u, v); });
}

VolumeBound volume_upper_bound(const Polyhedron<Complex>& p, LengthKind kind) {
  if (kind == LengthKind::orthogonal) {
    return bound_with(p, [&](const Vertex& u, const Vertex& v) { return std::abs(sq_dist(p.embedding, u, v)); });
  }
  return bound_with(p, [&](const Vertex& u, const Vertex& v) { return hermitian_sq_dist(p.embedding, u, v); });
}

}  // namespace bellows
