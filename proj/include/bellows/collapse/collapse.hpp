#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "bellows/errors.hpp"
#include "bellows/exact/laurent.hpp"
#include "bellows/geometry/embedding.hpp"
#include "bellows/simplicial/complex.hpp"

namespace bellows {

/// A simplex on at most 64 vertices, bit i = vertex i.
using Mask = std::uint64_t;

inline int mask_dimension(Mask s) { return __builtin_popcountll(s) - 1; }

/// Face-closed family of simplices, stored by dimension.
class MaskComplex {
 public:
  static MaskComplex clique(const std::vector<std::vector<bool>>& adjacency);

  bool contains(Mask s) const { return all_.count(s) > 0; }
  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
  const std::vector<Mask>& simplices(int k) const;
  std::size_t size() const { return all_.size(); }
  void insert(Mask s);
  void erase(Mask s);
  /// Simplices of dimension dim(s) + 1 containing s.
  std::vector<Mask> cofacets(Mask s, int vertex_count) const;
  SimplicialComplex to_complex(const std::vector<Vertex>& names) const;

 private:
  std::vector<std::vector<Mask>> by_dim_;
  std::unordered_set<Mask> all_;
  void trim();
};

std::string mask_to_string(Mask s, const std::vector<Vertex>& names);

/// "v0".."v{m-1}", zero-padded so that lexicographic order is index order.
std::vector<Vertex> simulation_vertex_names(int m);

/// Leading orders of the coordinates and the cancellation structure of a
/// simulated place. Vertices of one class share, with the first vertex of
/// the class, their coordinate orders and every coefficient of t^e for
/// e < share_below, so their differences vanish to higher order.
struct OrderProfile {
  int n = 3;
  int m = 4;
  std::map<std::pair<int, int>, long> orders;  // (vertex, coordinate) -> base order, default 0
  std::vector<std::vector<int>> classes;
  long share_below = 0;
  unsigned precision = LaurentScalar::kDefaultPrecision;
};

OrderProfile parse_profile_json(const std::string& text);
OrderProfile load_profile(const std::filesystem::path& path);
/// Random orders in [-2, 1] and random classes; the suites draw from this.
OrderProfile random_profile(int n, int m, std::mt19937_64& rng);

/// Order of a value that may be an exact zero (nullopt = +infinity).
using Order = std::optional<long>;

/// -1, 0, 1 for a < b, a == b, a > b with nullopt as +infinity.
int compare_orders(const Order& a, const Order& b);

struct PlaceSimulation {
  int n = 0;
  int m = 0;
  std::uint64_t seed = 0;
  unsigned precision = 0;  // precision that succeeded
  std::vector<Vertex> names;
  Embedding<LaurentScalar> embedding;
  std::vector<std::vector<Order>> length_order;  // ord(l_uv)
  std::vector<std::vector<Order>> first_coordinate_order;  // ord(x_{u,1} - x_{v,1})
  std::vector<std::vector<Order>> max_square_order;  // min_i 2 ord(x_{u,i} - x_{v,i})
  std::vector<std::vector<bool>> graph;  // G_phi
  MaskComplex k_phi;
};

/// Laurent coordinates with the profile's leading orders and seeded random
/// rational coefficients (numerators up to 2^31, one stream per (seed,
/// vertex, coordinate)); ord(l_uv) for every pair; G_phi and K_phi. Retries
/// once at twice the precision, then throws PrecisionError.
PlaceSimulation simulate_place(const OrderProfile& profile, std::uint64_t seed);

/// Orders on every K_phi^k, greatest simplex first, with cached mu.
struct DimOrdering {
  std::vector<std::vector<Mask>> levels;
  std::unordered_map<Mask, std::size_t> position;
  std::unordered_map<Mask, Mask> mu_cache;

  /// a > b for simplices of the same dimension.
  bool greater(Mask a, Mask b) const { return position.at(a) < position.at(b); }
  /// Maximal facet of s; s must have dimension > 0.
  Mask mu(Mask s) const { return mu_cache.at(s); }
  bool covers(Mask s) const { return position.count(s) > 0; }

  /// Wraps explicit per-dimension orders (greatest first), computing mu.
  static DimOrdering from_levels(std::vector<std::vector<Mask>> levels);
};

/// The inductive construction: lexicographic vertex order (first name is
/// greatest); for even n the edges by greater vertex, then by
/// |x_{u,1} - x_{v,1}|_phi descending; above that grouping by mu and the
/// greedy max-|l|_phi choice within each group. Ties go lexicographically.
DimOrdering build_ordering(const PlaceSimulation& sim);

/// Violations of the ordering conditions found by exhaustive search: (i)
/// always, (ii)' for odd n or (ii)'' and (iii)'' for even n.
struct OrderingReport {
  std::vector<std::string> condition_i;
  std::vector<std::string> condition_ii;
  std::vector<std::string> condition_iii;
  bool ok() const { return condition_i.empty() && condition_ii.empty() && condition_iii.empty(); }
};

OrderingReport check_ordering(const PlaceSimulation& sim, const DimOrdering& ord);
std::vector<std::string> check_condition_i(const MaskComplex& k, const DimOrdering& ord,
                                           const std::vector<Vertex>& names);

/// A scheduled pair that is not free. `blocking` is a simplex other than
/// sigma that contains tau (or a simplex containing sigma).
class ScheduleFailure : public Error {
 public:
  ScheduleFailure(Mask sigma, Mask tau, Mask blocking, const std::string& detail)
      : Error(detail), sigma_(sigma), tau_(tau), blocking_(blocking) {}
  Mask sigma() const { return sigma_; }
  Mask tau() const { return tau_; }
  Mask blocking() const { return blocking_; }

 private:
  Mask sigma_, tau_, blocking_;
};

struct CollapseTrace {
  std::vector<std::pair<Mask, Mask>> removed;  // (sigma, mu(sigma)) in order
  MaskComplex residual;
};

/// Collapses every k-simplex with its mu, in decreasing order, for
/// k = dim K, dim K - 1, ... while k > target_dim, re-validating freeness
/// before each step. Throws ScheduleFailure on the first pair that is not
/// free and PreconditionError if ord misses a simplex.
CollapseTrace collapse_schedule(const MaskComplex& k, const DimOrdering& ord, int target_dim,
                                const std::vector<Vertex>& names);

/// Pairs sigma, tau with dim > n/2 and equal mu whose union is not in K.
std::vector<std::string> check_proposition_union(const MaskComplex& k, const DimOrdering& ord, int n,
                                                 const std::vector<Vertex>& names);

/// ord(l_uv) >= min_i 2 ord(x_{u,i} - x_{v,i}) for every pair.
std::vector<std::string> check_ultrametric(const PlaceSimulation& sim);

/// One run of the whole pipeline on a random profile.
struct TrialReport {
  int n = 0;
  int m = 0;
  std::uint64_t seed = 0;
  std::uint64_t used_seed = 0;
  int reseeds = 0;
  unsigned precision = 0;
  int k_phi_dimension = 0;
  std::size_t k_phi_size = 0;
  OrderingReport ordering;
  std::optional<std::string> schedule_failure;
  int residual_dimension = -1;
  std::vector<std::string> proposition_violations;
  std::vector<std::string> ultrametric_violations;
  std::vector<int> high_homology_nonzero;  // k > n/2 with H_k(K_phi) != 0
  bool betti_preserved = true;

  bool ok() const;
};

/// Draws a random profile from `seed`, simulates, orders, collapses to
/// floor(n/2) and checks everything. A precision failure reseeds (counted in
/// `reseeds`) up to 8 times before giving up with PrecisionError.
TrialReport run_trial(int n, int m, std::uint64_t seed, bool check_homology = true);

/// Same pipeline on a given profile (no reseeding).
TrialReport run_trial(const OrderProfile& profile, std::uint64_t seed, bool check_homology = true);

}  // namespace bellows
