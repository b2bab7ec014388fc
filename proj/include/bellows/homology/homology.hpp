#pragma once

#include <utility>
#include <vector>

#include "bellows/errors.hpp"
#include "bellows/homology/snf.hpp"
#include "bellows/simplicial/chain.hpp"
#include "bellows/simplicial/complex.hpp"

namespace bellows {

/// Matrix of the boundary map C_k(K) -> C_{k-1}(K) in the sorted simplex
/// bases (rows: (k-1)-simplices, columns: k-simplices). Empty for k <= 0.
IntMatrix boundary_matrix(const SimplicialComplex& k_complex, int k);

struct HomologyGroup {
  long betti = 0;
  /// Invariant factors greater than one.
  std::vector<Integer> torsion;

  bool is_trivial() const { return betti == 0 && torsion.empty(); }
};

/// H_k(K; Z) of the ordinary (non-augmented) chain complex.
HomologyGroup homology(const SimplicialComplex& k_complex, int k);

/// Raised when a cycle is not a boundary in the given complex. The
/// obstruction lists, for each coordinate of U*z that blocks a solution,
/// the invariant factor (0 for a free direction) and the offending value.
class UnfillableError : public Error {
 public:
  UnfillableError(Chain cycle, std::vector<std::pair<Integer, Integer>> obstruction);
  const Chain& cycle() const { return cycle_; }
  const std::vector<std::pair<Integer, Integer>>& obstruction() const { return obstruction_; }

 private:
  Chain cycle_;
  std::vector<std::pair<Integer, Integer>> obstruction_;
};

/// Solves dY = Z over the integers inside K through the Smith form of the
/// boundary matrix. The result is re-verified before it is returned.
/// Preconditions: dZ = 0 and support(Z) in K (PreconditionError otherwise).
Chain fill_boundary(const Chain& z, const SimplicialComplex& k_complex);

}  // namespace bellows
