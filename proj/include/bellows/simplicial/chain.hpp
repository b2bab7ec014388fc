#pragma once

#include <map>
#include <string>
#include <vector>

#include "bellows/exact/rational.hpp"

namespace bellows {

/// Vertices are opaque strings ordered lexicographically.
using Vertex = std::string;

/// Sorted, duplicate-free vertex list.
using Simplex = std::vector<Vertex>;

/// Sorts and checks for duplicates; throws PreconditionError on a repeat.
Simplex make_simplex(std::vector<Vertex> vertices);

int simplex_dimension(const Simplex& s);

/// A simplex with the orientation of some vertex ordering, stored as the
/// sorted simplex plus the sign of the sorting permutation.
struct OrientedSimplex {
  Simplex vertices;
  int parity = 1;

  static OrientedSimplex from_ordered(const std::vector<Vertex>& ordered);
  int dimension() const { return simplex_dimension(vertices); }
};

/// Integer chain of one fixed dimension. Zero coefficients are never stored.
class Chain {
 public:
  using Terms = std::map<Simplex, Integer>;

  explicit Chain(int dimension = 0) : dim_(dimension) {}

  static Chain single(const Simplex& s, const Integer& coeff = 1);
  static Chain single(const OrientedSimplex& s, const Integer& coeff = 1);

  int dimension() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Integer coefficient(const Simplex& s) const;

  /// Adds coeff * s; throws DimensionError on a dimension mismatch.
  void add(const Simplex& s, const Integer& coeff);
  void add(const OrientedSimplex& s, const Integer& coeff);

  /// Sorted union of the vertices of all simplices with nonzero coefficient.
  std::vector<Vertex> vertices() const;

  Chain operator-() const;
  friend Chain operator+(const Chain& a, const Chain& b);
  friend Chain operator-(const Chain& a, const Chain& b);
  friend Chain operator*(const Integer& k, const Chain& c);
  Chain& operator+=(const Chain& o);

  friend bool operator==(const Chain& a, const Chain& b) { return a.dim_ == b.dim_ && a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  int dim_;
  Terms terms_;
};

/// Alternating-sign boundary. The boundary of a 0-chain is the zero
/// (-1)-chain.
Chain boundary(const Chain& c);

/// apex * z with simplices containing the apex dropped. For a cycle z
/// (augmentation zero in degree 0) on vertices of a full simplex,
/// d(apex * z) = z.
Chain cone(const Vertex& apex, const Chain& z);

}  // namespace bellows
