#pragma once

#include <cstddef>
#include <vector>

#include "bellows/exact/determinant.hpp"
#include "bellows/exact/rational.hpp"

namespace bellows {

using IntMatrix = Grid<Integer>;

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... .
struct SnfDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  std::size_t rank = 0;
  /// The nonzero diagonal entries d_1, ..., d_rank (all positive).
  std::vector<Integer> invariant_factors;
};

/// Full decomposition; pivots on the entry of least absolute value.
SnfDecomposition smith_normal_form(const IntMatrix& a);

/// Invariant factors only. Runs in 64-bit arithmetic while no step can
/// overflow and falls back to arbitrary precision otherwise.
std::vector<Integer> invariant_factors(const IntMatrix& a);

/// Matrix product helper for checks.
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

IntMatrix identity_matrix(std::size_t n);

}  // namespace bellows
