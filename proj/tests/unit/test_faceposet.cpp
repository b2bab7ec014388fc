#include <doctest.h>

#include <random>

#include "bellows/faceposet/faceposet.hpp"
#include "bellows/flex/flex.hpp"
#include "bellows/geometry/volume.hpp"

using namespace bellows;

namespace {

Embedding<Rational> affine_image(const Embedding<Rational>& e, const std::vector<std::vector<long>>& a,
                                 const std::vector<long>& shift) {
  Embedding<Rational> out(e.dim);
  for (const auto& [v, x] : e.coords) {
    std::vector<Rational> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      y[i] = shift[i];
      for (std::size_t j = 0; j < x.size(); ++j) y[i] += Rational(a[i][j]) * x[j];
    }
    out.set(v, y);
  }
  return out;
}

Rational det_of(const std::vector<std::vector<long>>& a) {
  Grid<Rational> m(a.size(), std::vector<Rational>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) m[i][j] = a[i][j];
  }
  return rational_det(m);
}

}  // namespace

TEST_CASE("built posets have consistent incidence signs") {
  for (int n : {1, 2, 3, 4}) CHECK(validate_incidence(cube_poset(n).poset, cube_poset(n).signs).ok());
  for (int n : {2, 3, 4}) {
    const auto p = cross_polytope_poset(n);
    CHECK(validate_incidence(p.poset, p.signs).ok());
  }
  const auto oct = cross_polytope_poset(3);
  CHECK(oct.poset.faces_of_dimension(0).size() == 6);
  CHECK(oct.poset.faces_of_dimension(1).size() == 12);
  CHECK(oct.poset.faces_of_dimension(2).size() == 8);
  CHECK(oct.poset.has_triangular_2faces());
  const auto cube = cube_poset(3);
  CHECK(cube.poset.faces_of_dimension(2).size() == 6);
  CHECK_FALSE(cube.poset.has_triangular_2faces());
  CHECK(cube.poset.top().vertices.size() == 8);
}

TEST_CASE("orientation flips keep the relation, a single sign change breaks it") {
  auto cube = cube_poset(3);
  auto signs = cube.signs;
  for (const auto& id : cube.poset.faces_of_dimension(2)) signs = flip_orientation(cube.poset, signs, id);
  for (const auto& id : cube.poset.faces_of_dimension(1)) signs = flip_orientation(cube.poset, signs, id);
  CHECK(validate_incidence(cube.poset, signs).ok());

  auto broken = cube.signs;
  broken[{"**0", "*00"}] *= -1;
  const auto r = validate_incidence(cube.poset, broken);
  REQUIRE_FALSE(r.ok());
  bool names_pair = false;
  for (const auto& v : r.violations) names_pair = names_pair || v.find("(**0,") != std::string::npos;
  CHECK(names_pair);

  auto stray = cube.signs;
  stray[{"***", "000"}] = 1;
  CHECK_FALSE(validate_incidence(cube.poset, stray).ok());
  CHECK_THROWS_AS(flip_orientation(cube.poset, cube.signs, "***"), PreconditionError);
}

TEST_CASE("generalized triangulations satisfy their boundary relations") {
  for (const auto& data : {cube_poset(3), cross_polytope_poset(3), cube_poset(4), cross_polytope_poset(4)}) {
    for (FillRule rule : {FillRule::smith, FillRule::cone_first, FillRule::cone_second, FillRule::cone_last}) {
      if (rule == FillRule::smith && data.poset.top().vertices.size() == 16) {
        // C(16,5) top simplices: beyond the Smith rule's budget
        CHECK_THROWS_AS(build_generalized_triangulation(data.poset, data.signs, rule), ResourceError);
        continue;
      }
      const auto t = build_generalized_triangulation(data.poset, data.signs, rule);
      CHECK(check_triangulation(data.poset, data.signs, t).empty());
    }
  }
  const auto cube = cube_poset(3);
  const auto t = build_generalized_triangulation(cube.poset, cube.signs, FillRule::cone_first);
  for (const auto& id : cube.poset.faces_of_dimension(2)) CHECK(t.at(id).size() == 2);

  const auto oct = cross_polytope_poset(3);
  const auto to = build_generalized_triangulation(oct.poset, oct.signs);
  Chain faces(2);
  for (const auto& id : oct.poset.faces_of_dimension(2)) {
    CHECK(to.at(id).size() == 1);
    faces += Integer(oct.signs.at({"Q", id})) * to.at(id);
  }
  CHECK(faces.size() == 8);
  CHECK(boundary(to.at("Q")) == faces);

  // a wrong chain is reported
  auto bad = to;
  bad.chains["a1,b1"] = -bad.chains["a1,b1"];
  CHECK_FALSE(check_triangulation(oct.poset, oct.signs, bad).empty());
}

TEST_CASE("simplex as a poset is triangulated by itself") {
  const auto s = simplex_poset({"p", "q", "r", "s"});
  CHECK(validate_incidence(s.poset, s.signs).ok());
  for (FillRule rule : {FillRule::smith, FillRule::cone_first}) {
    const auto t = build_generalized_triangulation(s.poset, s.signs, rule);
    CHECK(t.at("Q") == Chain::single(Simplex{"p", "q", "r", "s"}));
  }
}

TEST_CASE("volumes of the unit cube and the cross-polytope") {
  for (FillRule rule : {FillRule::smith, FillRule::cone_first, FillRule::cone_second}) {
    const auto cube = cube_poset(3);
    CHECK(volume_ns(cube.poset, build_generalized_triangulation(cube.poset, cube.signs, rule), unit_cube(3)) == 12);
    const auto oct = cross_polytope_poset(3);
    CHECK(volume_ns(oct.poset, build_generalized_triangulation(oct.poset, oct.signs, rule),
                    standard_cross_polytope(3)) == 16);
  }
  // 2^floor(n/2) n! V
  const auto sq = cube_poset(2);
  CHECK(volume_ns(sq.poset, build_generalized_triangulation(sq.poset, sq.signs), unit_cube(2)) == 4);
  const auto c4 = cube_poset(4);
  CHECK(volume_ns(c4.poset, build_generalized_triangulation(c4.poset, c4.signs, FillRule::cone_first), unit_cube(4)) == 96);
  const auto x4 = cross_polytope_poset(4);
  CHECK(volume_ns(x4.poset, build_generalized_triangulation(x4.poset, x4.signs), standard_cross_polytope(4)) == 64);

  // flipping lower faces does not change W
  const auto cube = cube_poset(3);
  auto signs = flip_orientation(cube.poset, cube.signs, "*1*");
  signs = flip_orientation(cube.poset, signs, "0*0");
  CHECK(volume_ns(cube.poset, build_generalized_triangulation(cube.poset, signs), unit_cube(3)) == 12);
}

TEST_CASE("affine images scale W by the determinant") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> d(-4, 4);
  const auto cube = cube_poset(3);
  const auto t1 = build_generalized_triangulation(cube.poset, cube.signs, FillRule::cone_first);
  const auto t2 = build_generalized_triangulation(cube.poset, cube.signs, FillRule::smith);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::vector<long>> a(3, std::vector<long>(3));
    for (auto& row : a) {
      for (auto& x : row) x = d(rng);
    }
    const auto e = affine_image(unit_cube(3), a, {d(rng), d(rng), d(rng)});
    CHECK(volume_ns(cube.poset, t1, e) == 12 * det_of(a));
    CHECK(triangulation_invariance(cube.poset, t1, t2, e) == 0);

    // the boundary cycle assembled from the facets agrees with the cone formula
    Chain z(2);
    for (const auto& id : cube.poset.faces_of_dimension(2)) z += Integer(cube.signs.at({"***", id})) * t1.at(id);
    CHECK(normalized_volume(make_polyhedron(z, e)) == 12 * det_of(a));
  }
}

TEST_CASE("triangulation invariance") {
  const auto cube = cube_poset(3);
  const auto first = build_generalized_triangulation(cube.poset, cube.signs, FillRule::cone_first);
  const auto second = build_generalized_triangulation(cube.poset, cube.signs, FillRule::cone_second);
  // the two diagonal splits of every square differ
  for (const auto& id : cube.poset.faces_of_dimension(2)) CHECK(first.at(id) != second.at(id));
  CHECK(triangulation_invariance(cube.poset, first, second, unit_cube(3)) == 0);
  CHECK(triangulation_invariance(cube.poset, first, first, unit_cube(3)) == 0);

  const auto oct = cross_polytope_poset(3);
  const auto a = build_generalized_triangulation(oct.poset, oct.signs, FillRule::cone_first);
  const auto b = build_generalized_triangulation(oct.poset, oct.signs, FillRule::cone_last);
  CHECK(a.at("Q") != b.at("Q"));
  CHECK(triangulation_invariance(oct.poset, a, b, standard_cross_polytope(3)) == 0);
}

TEST_CASE("bent faces are rejected") {
  const auto cube = cube_poset(3);
  const auto t = build_generalized_triangulation(cube.poset, cube.signs);
  auto e = unit_cube(3);
  e.set("111", {1, 1, Rational(6, 5)});
  try {
    volume_ns(cube.poset, t, e);
    FAIL("bent cube accepted");
  } catch (const FacePlanarityError& err) {
    CHECK((err.face() == "1**" || err.face() == "*1*" || err.face() == "**1"));
  }
  Embedding<double> f = to_float(unit_cube(3));
  CHECK(volume_ns(cube.poset, t, f) == doctest::Approx(12).epsilon(1e-12));
  f.coords["111"][2] += 1e-4;
  CHECK_THROWS_AS(volume_ns(cube.poset, t, f), FacePlanarityError);
  f.coords["111"][2] = 1 + 1e-13;  // within tolerance
  CHECK_NOTHROW(volume_ns(cube.poset, t, f));
}

TEST_CASE("hinged triangular faces keep W along a flex") {
  const auto oct = cross_polytope_poset(3);
  const auto t = build_generalized_triangulation(oct.poset, oct.signs);
  const auto fam = trace_flex(bricard_type1(), {40, 5e-3, 1e-13, 30});
  const double w0 = volume_ns(oct.poset, t, fam.samples.front().embedding);
  for (const auto& s : fam.samples) CHECK(std::fabs(volume_ns(oct.poset, t, s.embedding) - w0) <= 1e-9);
}

TEST_CASE("poset JSON") {
  const auto cube = cube_poset(3);
  const auto text = poset_to_json(cube);
  const auto back = parse_poset_json(text);
  CHECK(back.signs == cube.signs);
  CHECK(poset_to_json(back) == text);

  // a triangle with implicit vertices and default edge orientation
  const auto tri = parse_poset_json(R"({"faces":[
      {"id":"e1","dim":1,"vertices":["a","b"]},
      {"id":"e2","dim":1,"vertices":["b","c"]},
      {"id":"e3","dim":1,"vertices":["c","a"]},
      {"id":"T","dim":2,"covers":["e1","e2","e3"]}],
      "signs":{"T|e1":1,"T|e2":1,"T|e3":1}})");
  CHECK(tri.poset.dimension() == 2);
  CHECK(tri.poset.top().vertices == std::vector<Vertex>{"a", "b", "c"});
  CHECK(validate_incidence(tri.poset, tri.signs).ok());
  CHECK(tri.signs.at({"e3", "a"}) == 1);

  CHECK_THROWS_AS(parse_poset_json("[]"), SchemaError);
  CHECK_THROWS_AS(parse_poset_json(R"({"faces":[{"id":"e1","dim":1,"vertices":["a","b"]},{"id":"e2","dim":1,"vertices":["b","c"]}]})"),
                  SchemaError);  // two maximal elements
  CHECK_THROWS_AS(parse_poset_json(R"({"faces":[{"id":"e1","dim":1,"vertices":["a","b"]},{"id":"T","dim":2,"covers":["a"]}]})"),
                  SchemaError);  // covers skip a dimension
}
