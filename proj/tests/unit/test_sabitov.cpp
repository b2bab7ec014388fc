#include <doctest.h>

#include <random>

#include "bellows/geometry/cayley_menger.hpp"
#include "bellows/geometry/volume.hpp"
#include "bellows/sabitov/sabitov.hpp"

using namespace bellows;

namespace {

Rational random_rational(std::mt19937_64& rng, int range = 12, int den = 5) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> d(1, den);
  Rational q(num(rng), d(rng));
  q.canonicalize();
  return q;
}

Embedding<Rational> random_embedding(std::mt19937_64& rng, const std::vector<Vertex>& names) {
  Embedding<Rational> e(3);
  for (const auto& v : names) e.set(v, {random_rational(rng), random_rational(rng), random_rational(rng)});
  return e;
}

// Octahedron with slightly irregular rational coordinates.
Embedding<Rational> square_suspension_embedding() {
  Embedding<Rational> e(3);
  e.set("p", {Rational(1, 7), Rational(-1, 5), 2});
  e.set("q", {Rational(-1, 3), Rational(1, 4), Rational(-9, 5)});
  e.set("a", {2, 0, Rational(1, 6)});
  e.set("b", {Rational(1, 9), Rational(5, 2), 0});
  e.set("c", {Rational(-7, 4), Rational(1, 8), Rational(-1, 7)});
  e.set("d", {0, Rational(-3, 2), Rational(1, 3)});
  return e;
}

}  // namespace

TEST_CASE("bipyramid relation shape") {
  const auto rel = bipyramid_relation();
  CHECK(rel.degree() == 4);
  CHECK(rel.is_monic());
  CHECK(rel.only_even_powers());
  CHECK(rel.has_integer_coefficients());
  CHECK(rel.length_variables().size() == 9);
  CHECK_FALSE(rel.poly.has_variable(length_variable("p", "q")));

  // (W^2 - A - B)^2 - 4AB expands to the same polynomial
  const auto A = cayley_menger_symbolic({"p", "a", "b", "c"}).convert<Rational>().scaled(Rational(1, 2));
  const auto B = cayley_menger_symbolic({"q", "a", "b", "c"}).convert<Rational>().scaled(Rational(1, 2));
  const auto w = RationalPoly::variable("W");
  const auto s = w * w - A - B;
  CHECK(rel.poly == s * s - RationalPoly(4) * A * B);
}

TEST_CASE("bipyramid relation on embeddings") {
  const Chain z = bipyramid_cycle();
  CHECK(boundary(z).is_zero());

  Embedding<Rational> e(3);
  e.set("p", {0, 0, 1});
  e.set("q", {0, 0, -1});
  e.set("a", {0, 0, 0});
  e.set("b", {1, 0, 0});
  e.set("c", {0, 1, 0});
  const auto poly = make_polyhedron(z, e);
  CHECK(std::abs(normalized_volume(poly).get_d()) == doctest::Approx(4.0));
  const auto rel = bipyramid_relation();
  CHECK(verify_relation(rel, poly) == 0);

  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const auto r = make_polyhedron(z, random_embedding(rng, {"p", "q", "a", "b", "c"}));
    CHECK(verify_relation(rel, r) == 0);
    const auto lengths = edge_length_values(r);
    const Rational w = normalized_volume(r);
    CHECK(rel.evaluate(-w, lengths) == rel.evaluate(w, lengths));
    if (w != 0) CHECK(rel.evaluate(w + 1, lengths) != 0);
  }

  // coplanar bipyramid
  Embedding<Rational> flat(3);
  flat.set("p", {1, 1, 0});
  flat.set("q", {Rational(-1, 2), 3, 0});
  flat.set("a", {0, 0, 0});
  flat.set("b", {2, 0, 0});
  flat.set("c", {0, 5, 0});
  const auto fp = make_polyhedron(z, flat);
  CHECK(normalized_volume(fp) == 0);
  CHECK(verify_relation(rel, fp) == 0);

  // p = q: W = 0 and A = B
  Embedding<Rational> same = e;
  same.set("q", e.point("p"));
  CHECK(verify_relation(rel, make_polyhedron(z, same)) == 0);
}

TEST_CASE("verify_relation needs every variable to be an edge") {
  Embedding<Rational> e(3);
  e.set("p", {0, 0, 1});
  e.set("q", {0, 0, -1});
  e.set("a", {0, 0, 0});
  e.set("b", {1, 0, 0});
  e.set("c", {0, 1, 0});
  MonicRelation rel;
  const auto w = RationalPoly::variable("W");
  rel.poly = w * w - RationalPoly::variable(length_variable("p", "q"));
  CHECK_THROWS_AS(verify_relation(rel, make_polyhedron(bipyramid_cycle(), e)), PreconditionError);
}

TEST_CASE("elimination plan preconditions") {
  const auto x = RationalPoly::variable("x");
  const auto y = RationalPoly::variable("y");
  const auto w = RationalPoly::variable("W");
  EliminationPlan plan;
  plan.steps = {{"x", 0, 1}};
  CHECK_THROWS_AS(eliminate(plan, {x * x - w, y - RationalPoly(2)}), PreconditionError);
  plan.steps = {{"x", 0, 3}};
  CHECK_THROWS_AS(eliminate(plan, {x - w, x - RationalPoly(1)}), PreconditionError);
  CHECK_THROWS_AS(eliminate(EliminationPlan{}, {x}), PreconditionError);

  // W = x + 1 with x^2 = 2 gives (W - 1)^2 - 2, symmetrized to even powers
  plan.steps = {{"x", 0, 1}};
  const auto rel = eliminate(plan, {x - w + RationalPoly(1), x * x - RationalPoly(2)});
  CHECK(rel.is_monic());
  CHECK(rel.only_even_powers());
  CHECK(rel.degree() == 4);
  const auto f = (w - RationalPoly(1)) * (w - RationalPoly(1)) - RationalPoly(2);
  const auto g = (w + RationalPoly(1)) * (w + RationalPoly(1)) - RationalPoly(2);
  CHECK(rel.poly == f * g);

  // common factor -> zero resultant
  CHECK_THROWS_AS(eliminate(plan, {(x - RationalPoly(1)) * (x - w), (x - RationalPoly(1)) * x}), DegenerateInputError);

  // symbolic mode refuses two length variables
  EliminationOptions symbolic;
  symbolic.mode = EliminationMode::symbolic;
  const auto setup = square_suspension_setup();
  CHECK_THROWS_AS(eliminate(setup.plan, setup.relations, symbolic), ResourceError);
}

TEST_CASE("square suspension by specialized elimination") {
  const auto e = square_suspension_embedding();
  const auto poly = make_polyhedron(square_suspension_cycle(), e);
  const Rational w = normalized_volume(poly);
  CHECK(w != 0);

  const auto setup = square_suspension_setup();
  EliminationOptions opt;
  opt.values = edge_length_values(poly);
  CHECK(opt.values.size() == 12);
  const auto rel = eliminate(setup.plan, setup.relations, opt);
  CHECK(rel.is_monic());
  CHECK(rel.only_even_powers());
  CHECK(rel.length_variables().empty());
  CHECK(rel.degree() <= 128);
  CHECK(rel.evaluate(w, {}) == 0);
  CHECK(verify_relation(rel, poly) == 0);
  CHECK(rel.poly.divide_exact(RationalPoly::variable("W") - RationalPoly(w)).has_value());
  CHECK(relative_residual(rel, w.get_d(), {}) <= 1e-9);

  // a congruent copy gives the identical polynomial
  Embedding<Rational> moved(3);
  for (const auto& [v, x] : e.coords) moved.set(v, {x[0] + Rational(3, 2), x[1] - 7, x[2] + Rational(1, 3)});
  EliminationOptions opt2;
  opt2.values = edge_length_values(make_polyhedron(square_suspension_cycle(), moved));
  CHECK(eliminate(setup.plan, setup.relations, opt2).poly == rel.poly);
}
