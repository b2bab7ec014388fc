#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bellows/simplicial/chain.hpp"

namespace bellows {

/// Face-closed set of simplices. Always contains the empty simplex.
class SimplicialComplex {
 public:
  SimplicialComplex();

  /// Closure of the given simplices under taking faces.
  static SimplicialComplex from_simplices(const std::vector<Simplex>& simplices);

  /// Inserts s and all of its faces.
  void insert(const Simplex& s);

  bool contains(const Simplex& s) const;
  /// Highest simplex dimension; -1 for the complex {∅}.
  int dimension() const { return static_cast<int>(by_dim_.size()) - 2; }
  /// All k-simplices, sorted. k = -1 gives the empty simplex.
  std::vector<Simplex> simplices(int k) const;
  std::size_t count(int k) const;
  /// Simplices not contained in any other, sorted by (dimension, vertices).
  std::vector<Simplex> maximal_simplices() const;
  std::vector<Vertex> vertices() const;
  /// Number of nonempty simplices.
  std::size_t size() const;

  bool is_subcomplex_of(const SimplicialComplex& other) const;
  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) { return a.by_dim_ == b.by_dim_; }

 private:
  // by_dim_[k + 1] holds the k-simplices.
  std::vector<std::set<Simplex>> by_dim_;
};

/// Complex of all simplices with nonzero coefficient together with their faces.
SimplicialComplex support(const Chain& c);

struct PseudomanifoldReport {
  bool is_pseudomanifold = false;
  bool is_strongly_connected = false;
  /// Maximal simplices of the wrong dimension and (k-1)-simplices not in
  /// exactly two k-simplices.
  std::vector<Simplex> offending;
};

PseudomanifoldReport validate_pseudomanifold(const SimplicialComplex& k_complex, int k);

/// Propagates the orientation of `seed` breadth-first across shared facets
/// and returns the sum of the consistently oriented top simplices.
/// Throws PreconditionError unless K is a strongly connected k-pseudo-manifold
/// containing the seed, and OrientabilityError when propagation conflicts.
Chain fundamental_cycle(const SimplicialComplex& k_complex, const OrientedSimplex& seed);

/// Simple undirected graph.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::vector<Vertex> vertices);

  void add_vertex(const Vertex& v);
  void add_edge(const Vertex& u, const Vertex& v);
  bool has_edge(const Vertex& u, const Vertex& v) const;
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::set<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
  std::vector<Vertex> neighbors(const Vertex& v) const;

  static Graph complete(const std::vector<Vertex>& vertices);
  /// 1-skeleton of a complex.
  static Graph skeleton(const SimplicialComplex& k_complex);

 private:
  std::vector<Vertex> vertices_;
  std::set<std::pair<Vertex, Vertex>> edges_;
};

inline constexpr int kDefaultCliqueDimensionCap = 8;

/// Clique (flag) complex. Throws ResourceError when a clique exceeds the
/// dimension cap.
SimplicialComplex clique_complex(const Graph& g, int dimension_cap = kDefaultCliqueDimensionCap);

}  // namespace bellows
