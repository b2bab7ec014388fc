#include <doctest.h>

#include <chrono>
#include <random>

#include "bellows/geometry/cayley_menger.hpp"
#include "bellows/geometry/embedding.hpp"
#include "bellows/geometry/volume.hpp"
#include "bellows/homology/homology.hpp"

using namespace bellows;

namespace {

Chain simplex_boundary(const std::vector<Vertex>& ordered) {
  Chain c(static_cast<int>(ordered.size()) - 1);
  c.add(OrientedSimplex::from_ordered(ordered), 1);
  return boundary(c);
}

Embedding<Rational> corner_simplex(int n) {
  Embedding<Rational> e(n);
  e.set("v0", std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
  for (int i = 1; i <= n; ++i) {
    std::vector<Rational> x(static_cast<std::size_t>(n), Rational(0));
    x[static_cast<std::size_t>(i - 1)] = 1;
    e.set("v" + std::to_string(i), x);
  }
  return e;
}

std::vector<Vertex> names(int n) { return simplex_vertex_names(n); }

// Octahedron with vertices x+, x-, y+, ... ; the face (x_s1, y_s2, z_s3) gets
// the coefficient s1 s2 s3 so that every cone determinant from 0 is +1.
Chain octahedron_cycle() {
  Chain z(2);
  for (int s1 : {1, -1}) {
    for (int s2 : {1, -1}) {
      for (int s3 : {1, -1}) {
        auto sign = [](int s) { return std::string(s > 0 ? "+" : "-"); };
        z.add(OrientedSimplex::from_ordered({"x" + sign(s1), "y" + sign(s2), "z" + sign(s3)}), s1 * s2 * s3);
      }
    }
  }
  return z;
}

Embedding<Rational> octahedron_embedding() {
  Embedding<Rational> e(3);
  for (int axis = 0; axis < 3; ++axis) {
    for (int s : {1, -1}) {
      std::vector<Rational> x(3, Rational(0));
      x[static_cast<std::size_t>(axis)] = s;
      e.set(std::string(1, static_cast<char>('x' + axis)) + (s > 0 ? "+" : "-"), x);
    }
  }
  return e;
}

Rational random_rational(std::mt19937_64& rng, int range = 20, int den = 7) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> d(1, den);
  Rational q(num(rng), d(rng));
  q.canonicalize();
  return q;
}

template <class S, class Gen>
Embedding<S> perturbed(const Embedding<Rational>& base, Gen&& noise) {
  Embedding<S> out(base.dim);
  for (const auto& [v, x] : base.coords) {
    std::vector<S> y;
    for (const auto& c : x) y.push_back(ScalarTraits<S>::from_rational(c) + noise());
    out.set(v, y);
  }
  return out;
}

// Cone over Z from one of its own vertices v: the faces containing v drop out.
Chain cone_from_vertex(const Chain& z, const Vertex& v) {
  Chain y(z.dimension() + 1);
  for (const auto& [s, c] : z.terms()) {
    if (std::find(s.begin(), s.end(), v) != s.end()) continue;
    std::vector<Vertex> ordered{v};
    ordered.insert(ordered.end(), s.begin(), s.end());
    y.add(OrientedSimplex::from_ordered(ordered), c);
  }
  return y;
}

}  // namespace

TEST_CASE("squared distances") {
  Embedding<Rational> e(3);
  e.set("u", {0, 0, 0});
  e.set("v", {1, 2, 2});
  CHECK(sq_dist(e, "u", "v") == 9);
  CHECK(sq_dist(e, "u", "u") == 0);
  CHECK_THROWS_AS(sq_dist(e, "u", "w"), PreconditionError);

  Embedding<Complex> c(2);
  c.set("u", {Complex(0, 0), Complex(0, 0)});
  c.set("v", {Complex(1, 0), Complex(0, -1)});
  CHECK(std::abs(sq_dist(c, "u", "v")) == doctest::Approx(0.0));
  CHECK(hermitian_sq_dist(c, "u", "v") == doctest::Approx(2.0));
}

TEST_CASE("oriented volume of simplices") {
  const auto p3 = make_polyhedron(simplex_boundary(names(3)), corner_simplex(3));
  CHECK(oriented_volume(p3) == Rational(1, 6));
  CHECK(normalized_volume(p3) == 2);
  CHECK(oriented_volume(p3, std::vector<Rational>{Rational(5, 3), -2, Rational(7, 11)}) == Rational(1, 6));

  const auto reversed = make_polyhedron(-p3.cycle, p3.embedding);
  CHECK(oriented_volume(reversed) == Rational(-1, 6));
  CHECK(normalized_volume(reversed) == -2);

  const auto p4 = make_polyhedron(simplex_boundary(names(4)), corner_simplex(4));
  CHECK(oriented_volume(p4) == Rational(1, 24));
  CHECK(normalized_volume(p4) == 4);

  const auto p2 = make_polyhedron(simplex_boundary(names(2)), corner_simplex(2));
  CHECK(normalized_volume(p2) == 2);  // 2 * 2! * 1/2
}

TEST_CASE("regular tetrahedron") {
  // Alternate cube vertices have edge 2 sqrt 2, volume 8/3.
  Embedding<double> e(3);
  const double s = 1.0 / (2.0 * std::sqrt(2.0));
  e.set("v0", {s, s, s});
  e.set("v1", {s, -s, -s});
  e.set("v2", {-s, s, -s});
  e.set("v3", {-s, -s, s});
  const auto p = make_polyhedron(simplex_boundary(names(3)), e);
  const double v = oriented_volume(p);
  CHECK(std::fabs(v) == doctest::Approx(std::sqrt(2.0) / 12.0));
  const double w = normalized_volume(p);
  CHECK(w * w == doctest::Approx(2.0));
  for (const auto& a : names(3)) {
    for (const auto& b : names(3)) {
      if (a < b) CHECK(sq_dist(e, a, b) == doctest::Approx(1.0));
    }
  }

  Grid<Rational> ones(4, std::vector<Rational>(4, Rational(1)));
  for (int i = 0; i < 4; ++i) ones[i][i] = 0;
  CHECK(cayley_menger_from_lengths(ones) == 4);
  // V^2 = CM / (2^3 (3!)^2) = 1/72
  CHECK(Rational(4) / 288 == Rational(1, 72));
  CHECK(v * v == doctest::Approx(1.0 / 72.0));
}

TEST_CASE("Cayley-Menger examples") {
  std::vector<std::vector<Rational>> line{{0}, {1}, {2}};
  CHECK(cayley_menger(line) == 0);

  std::vector<std::vector<Rational>> tri{{0, 0}, {1, 0}, {0, 1}};
  CHECK(cayley_menger(tri) == -4);
  // direct 4x4 oracle with l = 1, 1, 2
  CHECK(int_det({{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 2}, {1, 1, 2, 0}}) == -4);

  Grid<Rational> bad{{0, 1}, {2, 0}};
  CHECK_THROWS_AS(cayley_menger_from_lengths(bad), PreconditionError);
  Grid<Rational> diag{{1, 1}, {1, 0}};
  CHECK_THROWS_AS(cayley_menger_from_lengths(diag), PreconditionError);

  const auto sym = cayley_menger_symbolic({"a", "b", "c"});
  const auto a = MultiPoly::variable("l(b,c)");
  const auto b = MultiPoly::variable("l(a,c)");
  const auto c = MultiPoly::variable("l(a,b)");
  CHECK(sym == a * a + b * b + c * c - MultiPoly(2) * (a * b + b * c + c * a));
}

TEST_CASE("any n+2 points in n-space have vanishing CM") {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<std::vector<Rational>> pts(static_cast<std::size_t>(n + 2));
      for (auto& p : pts) {
        for (int i = 0; i < n; ++i) p.push_back(random_rational(rng));
      }
      CHECK(cayley_menger(pts) == 0);
    }
  }
}

TEST_CASE("volume formula residual") {
  CHECK(cm_volume_identity(std::vector<std::vector<Rational>>{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) == 0);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::vector<Rational>> pts(4);
    for (auto& p : pts) {
      for (int i = 0; i < 3; ++i) p.push_back(random_rational(rng));
    }
    CHECK(cm_volume_identity(pts) == 0);
  }

  std::uniform_real_distribution<double> u(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::vector<double>> pts(5);
    for (auto& p : pts) {
      for (int i = 0; i < 4; ++i) p.push_back(u(rng));
    }
    // relative to the size of the individual terms of CM / (2^n (n!)^2)
    double max_l = 0;
    for (const auto& a : pts) {
      for (const auto& b : pts) {
        double l = 0;
        for (int i = 0; i < 4; ++i) l += (a[i] - b[i]) * (a[i] - b[i]);
        max_l = std::max(max_l, l);
      }
    }
    const double scale = std::pow(max_l, 4) / (16.0 * 576.0);
    CHECK(std::fabs(cm_volume_identity(pts)) / scale <= 1e-12);
  }
}

TEST_CASE("volume formula is a polynomial identity for n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    CAPTURE(n);
    CHECK(cm_volume_identity_symbolic(n).is_zero());
  }
}

TEST_CASE("monic relation for a simplex") {
  const auto r2 = simplex_monic_relation(2);
  Embedding<Rational> e(2);
  e.set("v0", {0, 0});
  e.set("v1", {3, 0});
  e.set("v2", {0, 4});
  const auto p = make_polyhedron(simplex_boundary(names(2)), e);
  CHECK(normalized_volume(p) == 24);
  CHECK(cayley_menger(e, names(2)) == -576);
  auto values = length_values(e, names(2));
  values["W"] = 24;
  CHECK(r2.evaluate(values) == 0);

  const auto r3 = simplex_monic_relation(3);
  std::map<std::string, Rational, std::less<>> unit;
  for (const auto& a : names(3)) {
    for (const auto& b : names(3)) {
      if (a < b) unit[length_variable(a, b)] = 1;
    }
  }
  const auto w = RationalPoly::variable("W");
  CHECK(r3.specialize(unit) == w * w - RationalPoly(2));

  const auto cm3 = cayley_menger_symbolic(names(3));
  CHECK(cm3.divide_exact(Integer(2)).has_value());
  CHECK(simplex_monic_relation(4).degree("W") == 2);
  CHECK_THROWS_AS(simplex_monic_relation(0), PreconditionError);

  // random rational simplices satisfy the relation with their own W
  std::mt19937_64 rng(8);
  for (int n = 1; n <= 4; ++n) {
    const auto rel = simplex_monic_relation(n);
    for (int trial = 0; trial < 10; ++trial) {
      Embedding<Rational> r(n);
      for (const auto& v : names(n)) {
        std::vector<Rational> x;
        for (int i = 0; i < n; ++i) x.push_back(random_rational(rng));
        r.set(v, x);
      }
      auto vals = length_values(r, names(n));
      vals["W"] = simplex_normalized_volume(r, names(n));
      CHECK(rel.evaluate(vals) == 0);
    }
  }
}

TEST_CASE("volume via filling") {
  const auto tet = make_polyhedron(simplex_boundary(names(3)), corner_simplex(3));
  Chain full(3);
  full.add(OrientedSimplex::from_ordered(names(3)), 1);
  CHECK(volume_via_filling(tet, full) == 2);
  CHECK_THROWS_AS(volume_via_filling(tet, -full), PreconditionError);

  const auto oct = make_polyhedron(octahedron_cycle(), octahedron_embedding());
  CHECK(oriented_volume(oct) == Rational(4, 3));
  CHECK(normalized_volume(oct) == 16);
  const Chain cone = cone_from_vertex(oct.cycle, "x+");
  CHECK(boundary(cone) == oct.cycle);
  CHECK(volume_via_filling(oct, cone) == 16);

  // Y + dX for random 4-chains X on the octahedron vertices
  std::mt19937_64 rng(21);
  const auto verts = oct.cycle.vertices();
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    Chain x(4);
    for (int k = 0; k < 4; ++k) {
      auto shuffled = verts;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      shuffled.resize(5);
      x.add(OrientedSimplex::from_ordered(shuffled), coeff(rng));
    }
    CHECK(chain_normalized_volume(oct.embedding, cone + boundary(x)) == 16);
    CHECK(volume_via_filling(oct, cone + boundary(x)) == 16);
  }

  // filling found by homology inside the full simplex on the vertices
  Simplex all(verts.begin(), verts.end());
  const Chain y = fill_boundary(oct.cycle, SimplicialComplex::from_simplices({all}));
  CHECK(volume_via_filling(oct, y) == 16);
}

TEST_CASE("origin independence and rigid motions") {
  std::mt19937_64 rng(3);
  const auto base = octahedron_embedding();
  for (int trial = 0; trial < 30; ++trial) {
    const auto e = perturbed<Rational>(base, [&] { return random_rational(rng, 3, 5) / 4; });
    const auto p = make_polyhedron(octahedron_cycle(), e);
    const Rational v = oriented_volume(p);
    std::vector<Rational> o{random_rational(rng), random_rational(rng), random_rational(rng)};
    CHECK(oriented_volume(p, o) == v);

    // translation plus the rational rotation (3/5, 4/5) about the z axis
    const Rational tx = random_rational(rng), ty = random_rational(rng), tz = random_rational(rng);
    Embedding<Rational> moved(3), mirrored(3);
    for (const auto& [name, x] : e.coords) {
      moved.set(name, {Rational(3, 5) * x[0] - Rational(4, 5) * x[1] + tx, Rational(4, 5) * x[0] + Rational(3, 5) * x[1] + ty,
                       x[2] + tz});
      mirrored.set(name, {-x[0], x[1], x[2]});
    }
    CHECK(oriented_volume(make_polyhedron(p.cycle, moved)) == v);
    CHECK(oriented_volume(make_polyhedron(p.cycle, mirrored)) == -v);
  }

  std::uniform_real_distribution<double> u(-0.2, 0.2);
  for (int trial = 0; trial < 30; ++trial) {
    const auto e = perturbed<double>(base, [&] { return u(rng); });
    const auto p = make_polyhedron(octahedron_cycle(), e);
    const double v = oriented_volume(p);
    CHECK(std::fabs(oriented_volume(p, std::vector<double>{u(rng) * 10, u(rng) * 10, u(rng) * 10}) - v) <= 1e-12);
  }
}

TEST_CASE("complex quadrangle") {
  Embedding<Complex> e(2);
  e.set("a", {Complex(0, 0), Complex(0, 0)});
  e.set("b", {Complex(1, 0), Complex(0, -1)});
  e.set("c", {Complex(2, 0), Complex(0, 0)});
  e.set("d", {Complex(1, 0), Complex(0, 1)});
  Chain z(1);
  z.add(OrientedSimplex::from_ordered({"a", "b"}), 1);
  z.add(OrientedSimplex::from_ordered({"b", "c"}), 1);
  z.add(OrientedSimplex::from_ordered({"c", "d"}), 1);
  z.add(OrientedSimplex::from_ordered({"d", "a"}), 1);
  const auto p = make_polyhedron(z, e);
  const Complex v = oriented_volume(p);
  CHECK(std::abs(v - Complex(0, 2)) <= 1e-12);
  for (const auto& [u, w] : support_edges(z)) CHECK(std::abs(sq_dist(e, u, w)) <= 1e-12);

  const auto orth = volume_upper_bound(p, LengthKind::orthogonal);
  CHECK(orth.bound == 0.0);
  CHECK_FALSE(orth.satisfied);
  const auto herm = volume_upper_bound(p);
  CHECK(herm.satisfied);
  CHECK(herm.max_length == doctest::Approx(2.0));
}

TEST_CASE("volume bound") {
  const auto p = make_polyhedron(simplex_boundary(names(3)), corner_simplex(3));
  const auto b = volume_upper_bound(p);
  CHECK(b.c_sigma == 4);
  CHECK(b.m == 4);
  CHECK(b.max_length == doctest::Approx(2.0));
  CHECK(b.bound == doctest::Approx(4.0 * 64.0 / 6.0 * std::pow(2.0, 1.5)));
  CHECK(b.satisfied);

  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int trial = 0; trial < 1000; ++trial) {
    Embedding<double> e(3);
    for (const auto& v : octahedron_cycle().vertices()) e.set(v, {u(rng), u(rng), u(rng)});
    CHECK(volume_upper_bound(make_polyhedron(octahedron_cycle(), e)).satisfied);
  }
}

TEST_CASE("embedding JSON") {
  const auto parsed = parse_embedding_json(R"({"dim":3,"field":"rational","coords":{"a":["0","0","1/2"],"b":["1","2/4","-3"]}})");
  const auto& e = std::get<Embedding<Rational>>(parsed);
  CHECK(e.point("a")[2] == Rational(1, 2));
  CHECK(e.point("b")[1] == Rational(1, 2));
  CHECK(std::get<Embedding<Rational>>(parse_embedding_json(embedding_to_json(parsed))).coords == e.coords);

  const auto cx = parse_embedding_json(R"({"dim":2,"field":"complex","coords":{"a":[["1","-1"],["0","2.5"]]}})");
  CHECK(std::get<Embedding<Complex>>(cx).point("a")[1] == Complex(0, 2.5));

  CHECK_THROWS_AS(parse_embedding_json(R"({"dim":2,"field":"rational","coords":{"a":["1"]}})"), SchemaError);
  CHECK_THROWS_AS(parse_embedding_json(R"({"dim":2,"field":"quaternion","coords":{}})"), SchemaError);
}
