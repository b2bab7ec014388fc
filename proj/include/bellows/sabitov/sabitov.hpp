#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bellows/exact/multipoly.hpp"
#include "bellows/geometry/embedding.hpp"

namespace bellows {

using LengthValues = std::map<std::string, Rational, std::less<>>;

/// Monic polynomial in W (default variable "W") whose other variables are
/// squared edge lengths; univariate after specialization.
struct MonicRelation {
  std::string variable = "W";
  RationalPoly poly;

  int degree() const { return poly.degree(variable); }
  /// Coefficient of W^k as a polynomial in the length variables.
  RationalPoly coefficient(unsigned k) const { return poly.coefficient(variable, k); }
  bool is_monic() const;
  bool only_even_powers() const;
  bool has_integer_coefficients() const;
  /// The length variables, i.e. every variable except W.
  std::vector<std::string> length_variables() const;
  Rational evaluate(const Rational& w, const LengthValues& lengths) const;
};

/// W^4 - 2(A+B)W^2 + (A-B)^2 for the triangular bipyramid with apexes p, q
/// over the triangle a, b, c, where A = CM(p,a,b,c)/2 and B = CM(q,a,b,c)/2.
/// Its roots are +-sqrt(A) +- sqrt(B), covering W = W(pabc) - W(qabc).
MonicRelation bipyramid_relation(const Vertex& p = "p", const Vertex& q = "q", const Vertex& a = "a",
                                 const Vertex& b = "b", const Vertex& c = "c");

/// The oriented cycle d[p,a,b,c] - d[q,a,b,c] that bipyramid_relation describes.
Chain bipyramid_cycle(const Vertex& p = "p", const Vertex& q = "q", const Vertex& a = "a", const Vertex& b = "b",
                      const Vertex& c = "c");

/// One step eliminates `variable` from relations[first] and relations[second]
/// and appends the resultant to the working list, so later steps can refer to
/// it by index relations.size() + step.
struct EliminationStep {
  std::string variable;
  std::size_t first = 0;
  std::size_t second = 0;
};

struct EliminationPlan {
  std::vector<EliminationStep> steps;
  std::string output_variable = "W";
};

enum class EliminationMode { symbolic, specialized };

struct EliminationOptions {
  EliminationMode mode = EliminationMode::specialized;
  LengthValues values;  // bound before the first step in specialized mode
  std::size_t term_cap = 1'000'000;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// Runs the plan and normalizes the last resultant to a monic relation in
/// the output variable, symmetrized to even powers via F(W)F(-W) when needed.
/// Throws PreconditionError for a malformed plan or a step whose relations
/// do not both contain its variable, DegenerateInputError when the leading
/// coefficient vanishes or is not a constant, and ResourceError when the
/// symbolic mode would eliminate more than one length variable, the term cap
/// is exceeded, or the deadline passes.
MonicRelation eliminate(const EliminationPlan& plan, const std::vector<RationalPoly>& relations,
                        const EliminationOptions& options = {});

/// Elimination setup for the square bipyramid (octahedron) with apexes p, q
/// and equator a-b-c-d: the two triangular bipyramids over abc and acd share
/// the diagonal l(a,c); W1 and W - W1 are their volumes; the diagonal l(p,q)
/// is removed from the two vanishing 5-point Cayley-Menger determinants.
struct SquareSuspensionSetup {
  EliminationPlan plan;
  std::vector<RationalPoly> relations;
};
SquareSuspensionSetup square_suspension_setup(const Vertex& p = "p", const Vertex& q = "q", const Vertex& a = "a",
                                              const Vertex& b = "b", const Vertex& c = "c", const Vertex& d = "d");

/// The octahedral cycle that square_suspension_setup is built for.
Chain square_suspension_cycle(const Vertex& p = "p", const Vertex& q = "q", const Vertex& a = "a",
                              const Vertex& b = "b", const Vertex& c = "c", const Vertex& d = "d");

/// Squared lengths of the edges of supp(Z).
LengthValues edge_length_values(const Polyhedron<Rational>& poly);

/// rel(W(P), l(P)) computed exactly. Throws PreconditionError if some
/// length variable of rel is not an edge of P.
Rational verify_relation(const MonicRelation& rel, const Polyhedron<Rational>& poly);

/// |rel(W, l)| / sum_k |b_k| |W|^k over floats.
double relative_residual(const MonicRelation& rel, double w, const std::map<std::string, double, std::less<>>& lengths);

}  // namespace bellows
