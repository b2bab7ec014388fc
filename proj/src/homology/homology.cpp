#include "bellows/homology/homology.hpp"

#include <map>

namespace bellows {

namespace {

std::map<Simplex, std::size_t> index_simplices(const std::vector<Simplex>& simplices) {
  std::map<Simplex, std::size_t> index;
  for (std::size_t i = 0; i < simplices.size(); ++i) index.emplace(simplices[i], i);
  return index;
}

}  // namespace

IntMatrix boundary_matrix(const SimplicialComplex& complex, int k) {
  if (k <= 0) return {};
  const auto cols = complex.simplices(k);
  const auto rows = complex.simplices(k - 1);
  const auto row_index = index_simplices(rows);
  IntMatrix m(rows.size(), std::vector<Integer>(cols.size(), 0));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t i = 0; i < cols[j].size(); ++i) {
      Simplex face = cols[j];
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      m[row_index.at(face)][j] = i % 2 == 0 ? 1 : -1;
    }
  }
  return m;
}

HomologyGroup homology(const SimplicialComplex& complex, int k) {
  HomologyGroup h;
  if (k < 0) return h;
  const long chains = static_cast<long>(complex.count(k));
  if (chains == 0) return h;
  long rank_k = 0;
  if (k > 0) {
    const auto m = boundary_matrix(complex, k);
    if (!m.empty() && !m[0].empty()) rank_k = static_cast<long>(invariant_factors(m).size());
  }
  long rank_next = 0;
  const auto next = boundary_matrix(complex, k + 1);
  if (!next.empty() && !next[0].empty()) {
    const auto factors = invariant_factors(next);
    rank_next = static_cast<long>(factors.size());
    for (const auto& d : factors) {
      if (d > 1) h.torsion.push_back(d);
    }
  }
  h.betti = chains - rank_k - rank_next;
  return h;
}

UnfillableError::UnfillableError(Chain cycle, std::vector<std::pair<Integer, Integer>> obstruction)
    : Error("cycle " + cycle.to_string() + " is not a boundary in the complex"),
      cycle_(std::move(cycle)),
      obstruction_(std::move(obstruction)) {}

Chain fill_boundary(const Chain& z, const SimplicialComplex& complex) {
  const int d = z.dimension();
  if (d >= 1 && !boundary(z).is_zero()) throw PreconditionError("chain to fill is not a cycle");
  if (!support(z).is_subcomplex_of(complex)) throw PreconditionError("cycle is not supported in the complex");
  Chain y(d + 1);
  if (z.is_zero()) return y;

  const auto rows = complex.simplices(d);
  const auto cols = complex.simplices(d + 1);
  const auto row_index = index_simplices(rows);
  std::vector<Integer> target(rows.size(), 0);
  for (const auto& [s, c] : z.terms()) target[row_index.at(s)] = c;

  if (cols.empty()) {
    std::vector<std::pair<Integer, Integer>> obstruction;
    for (const auto& t : target) {
      if (t != 0) obstruction.emplace_back(0, t);
    }
    throw UnfillableError(z, std::move(obstruction));
  }

  const auto snf = smith_normal_form(boundary_matrix(complex, d + 1));
  // D (V^-1 y) = U z.
  std::vector<Integer> w(rows.size(), 0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (snf.U[i][j] != 0 && target[j] != 0) w[i] += snf.U[i][j] * target[j];
    }
  }
  std::vector<std::pair<Integer, Integer>> obstruction;
  std::vector<Integer> y_prime(cols.size(), 0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i < snf.rank) {
      const Integer& di = snf.invariant_factors[i];
      if (mpz_divisible_p(w[i].get_mpz_t(), di.get_mpz_t())) {
        mpz_divexact(y_prime[i].get_mpz_t(), w[i].get_mpz_t(), di.get_mpz_t());
      } else {
        obstruction.emplace_back(di, w[i]);
      }
    } else if (w[i] != 0) {
      obstruction.emplace_back(0, w[i]);
    }
  }
  if (!obstruction.empty()) throw UnfillableError(z, std::move(obstruction));

  for (std::size_t j = 0; j < cols.size(); ++j) {
    Integer coeff = 0;
    for (std::size_t i = 0; i < snf.rank; ++i) {
      if (snf.V[j][i] != 0 && y_prime[i] != 0) coeff += snf.V[j][i] * y_prime[i];
    }
    y.add(cols[j], coeff);
  }
  if (boundary(y) != z) throw InternalConsistencyError("Smith-form filling failed re-verification");
  return y;
}

}  // namespace bellows
