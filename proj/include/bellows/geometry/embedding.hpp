#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "bellows/errors.hpp"
#include "bellows/geometry/scalar.hpp"
#include "bellows/simplicial/chain.hpp"

namespace bellows {

/// Vertex -> coordinate vector in an n-dimensional space over S.
template <class S>
struct Embedding {
  int dim = 0;
  std::map<Vertex, std::vector<S>> coords;

  Embedding() = default;
  explicit Embedding(int dimension) : dim(dimension) {}

  void set(const Vertex& v, std::vector<S> x) {
    if (static_cast<int>(x.size()) != dim) {
      throw DimensionError("vertex '" + v + "' has " + std::to_string(x.size()) + " coordinates, expected " +
                           std::to_string(dim));
    }
    coords[v] = std::move(x);
  }

  const std::vector<S>& point(const Vertex& v) const {
    auto it = coords.find(v);
    if (it == coords.end()) throw PreconditionError("vertex '" + v + "' is not embedded");
    return it->second;
  }

  bool contains(const Vertex& v) const { return coords.count(v) > 0; }

  template <class T, class F>
  Embedding<T> map(F&& f) const {
    Embedding<T> out(dim);
    for (const auto& [v, x] : coords) {
      std::vector<T> y;
      y.reserve(x.size());
      for (const auto& c : x) y.push_back(f(c));
      out.coords.emplace(v, std::move(y));
    }
    return out;
  }
};

/// A cycle Z of dimension n-1 with an embedding of its vertices in n-space.
template <class S>
struct Polyhedron {
  Chain cycle;
  Embedding<S> embedding;

  int dim() const { return embedding.dim; }
};

/// Checks dZ = 0, dim Z = n - 1 and that every vertex is embedded.
template <class S>
void validate_polyhedron(const Polyhedron<S>& p) {
  if (p.cycle.dimension() != p.embedding.dim - 1) {
    throw DimensionError("cycle of dimension " + std::to_string(p.cycle.dimension()) + " in " +
                         std::to_string(p.embedding.dim) + "-space");
  }
  if (!boundary(p.cycle).is_zero()) throw PreconditionError("polyhedron chain is not a cycle");
  for (const auto& v : p.cycle.vertices()) {
    if (!p.embedding.contains(v)) throw PreconditionError("vertex '" + v + "' is not embedded");
  }
}

template <class S>
Polyhedron<S> make_polyhedron(Chain cycle, Embedding<S> embedding) {
  Polyhedron<S> p{std::move(cycle), std::move(embedding)};
  validate_polyhedron(p);
  return p;
}

using AnyEmbedding =
    std::variant<Embedding<Rational>, Embedding<double>, Embedding<Complex>, Embedding<LaurentScalar>>;

Field field_of(const AnyEmbedding& e);

/// {"dim":3, "field":"rational", "coords":{"a":["0","0","1/2"], ...}}.
/// Rationals are "p/q" or decimal strings; complex values ["re","im"] pairs;
/// float64 accepts strings or JSON numbers; laurent values are
/// {"order":k, "coeffs":[...], "exact":false}.
AnyEmbedding parse_embedding_json(const std::string& text);
AnyEmbedding load_embedding(const std::filesystem::path& path);
std::string embedding_to_json(const AnyEmbedding& e);

Embedding<double> to_float(const Embedding<Rational>& e);

}  // namespace bellows
