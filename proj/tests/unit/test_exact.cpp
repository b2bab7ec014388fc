#include <doctest.h>

#include <random>

#include "bellows/errors.hpp"
#include "bellows/exact/determinant.hpp"
#include "bellows/exact/laurent.hpp"
#include "bellows/exact/multipoly.hpp"
#include "bellows/exact/rational.hpp"
#include "bellows/exact/resultant.hpp"

using namespace bellows;

namespace {

MultiPoly var(const char* name) { return MultiPoly::variable(name); }

// Sarrus rule, written out independently of the library determinant.
long sarrus(const long m[3][3]) {
  return m[0][0] * m[1][1] * m[2][2] + m[0][1] * m[1][2] * m[2][0] + m[0][2] * m[1][0] * m[2][1] -
         m[0][2] * m[1][1] * m[2][0] - m[0][0] * m[1][2] * m[2][1] - m[0][1] * m[1][0] * m[2][2];
}

}  // namespace

TEST_CASE("rational literals parse exactly") {
  CHECK(parse_rational("3/6") == make_rational(1, 2));
  CHECK(parse_rational("-0.125") == make_rational(-1, 8));
  CHECK(parse_rational("1.5e2") == Rational(150));
  CHECK(parse_rational("2e-3") == make_rational(1, 500));
  CHECK(to_string(parse_rational("4/-8")) == "-1/2");
  CHECK_THROWS_AS(parse_rational("1/0"), SchemaError);
  CHECK_THROWS_AS(parse_rational("abc"), SchemaError);
  CHECK_THROWS_AS(parse_rational(""), SchemaError);
}

TEST_CASE("polynomial canonical form") {
  auto x = var("x"), y = var("y");
  auto p = (x + y) * (x - y);
  CHECK(p == x * x - y * y);
  CHECK(p.to_string() == "x^2 - y^2");
  CHECK((p - p).is_zero());
  CHECK((p - x * x + y * y).variables().empty());
  CHECK(((x + 1).pow(3)).to_string() == "x^3 + 3*x^2 + 3*x + 1");
  CHECK(p.degree("x") == 2);
  CHECK(p.degree("z") == 0);
  CHECK(MultiPoly().degree("x") == -1);
  // Cancelling a variable prunes it from the variable list.
  auto q = x * y + x - x * y;
  CHECK(q.variables() == std::vector<std::string>{"x"});
}

TEST_CASE("polynomial exact division") {
  auto x = var("x"), y = var("y");
  auto f = (x * x + 3 * y) * (2 * x - y + 1);
  auto q = f.divide_exact(2 * x - y + 1);
  REQUIRE(q);
  CHECK(*q == x * x + 3 * y);
  CHECK_FALSE(f.divide_exact(x + 7 * y));
  CHECK_FALSE((3 * x + 1).divide_exact(Integer(2)));
}

TEST_CASE("substitute and specialize") {
  auto x = var("x"), y = var("y");
  auto p = x * x * y + 2 * x - 5;
  CHECK(p.substitute("x", y + 1) == (y + 1) * (y + 1) * y + 2 * (y + 1) - 5);
  CHECK(p.evaluate({{"x", Rational(2)}, {"y", make_rational(1, 4)}}) == Rational(0));
  CHECK_THROWS_AS(p.evaluate({{"x", Rational(1)}}), PreconditionError);
  auto s = p.specialize({{"y", Rational(3)}});
  CHECK(s.to_string() == "3*x^2 + 2*x - 5");
}

TEST_CASE("poly_det small cases") {
  Grid<MultiPoly> id{{1, 0}, {0, 1}};
  CHECK(poly_det(id) == MultiPoly(1));
  Grid<MultiPoly> swap{{0, 1}, {1, 0}};
  CHECK(poly_det(swap) == MultiPoly(-1));
  CHECK_THROWS_AS(poly_det(Grid<MultiPoly>{{1, 2}}), DimensionError);
}

TEST_CASE("poly_det reproduces the Heron form of the triangle Cayley-Menger determinant") {
  auto a = var("a2"), b = var("b2"), c = var("c2");
  Grid<MultiPoly> cm{{0, 1, 1, 1}, {1, 0, c, b}, {1, c, 0, a}, {1, b, a, 0}};
  auto expected = -(2 * a * b + 2 * b * c + 2 * c * a - a * a - b * b - c * c);
  CHECK(poly_det(cm) == expected);
  // Bareiss over polynomials must agree with the cofactor path.
  CHECK(det_bareiss(cm) == expected);
}

TEST_CASE("poly_det agrees with Sarrus on random integer matrices") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-50, 50);
  for (int trial = 0; trial < 300; ++trial) {
    long m[3][3];
    Grid<MultiPoly> g(3, std::vector<MultiPoly>(3));
    Grid<Integer> gi(3, std::vector<Integer>(3));
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        m[i][j] = d(rng);
        g[i][j] = MultiPoly(m[i][j]);
        gi[i][j] = m[i][j];
      }
    }
    CHECK(poly_det(g) == MultiPoly(sarrus(m)));
    CHECK(det_cofactor(gi) == sarrus(m));
  }
}

TEST_CASE("rational determinant") {
  Grid<Rational> m{{make_rational(1, 2), 1}, {make_rational(1, 3), make_rational(1, 5)}};
  CHECK(rational_det(m) == make_rational(1, 10) - make_rational(1, 3));
}

TEST_CASE("resultant examples") {
  auto x = var("x"), a = var("a"), b = var("b");
  CHECK(resultant(x - a, x - b, "x") == a - b);
  // Roots +-sqrt2 of the first: prod (alpha^2 - 3) = (2 - 3)^2 = 1.
  CHECK(resultant(x * x - 2, x * x - 3, "x") == MultiPoly(1));
  CHECK(resultant((x - 1) * (x - 2), (x - 1) * (x + 5), "x").is_zero());
  CHECK_THROWS_AS(resultant(a + 1, b + 2, "x"), DegenerateInputError);
}

TEST_CASE("resultant equals lc(p)^deg q times q over the roots of p") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> d(-6, 6);
  auto x = var("x");
  for (int trial = 0; trial < 40; ++trial) {
    const long r1 = d(rng), r2 = d(rng), r3 = d(rng), lc = d(rng) == 0 ? 2 : 3;
    auto p = lc * (x - r1) * (x - r2) * (x - r3);
    MultiPoly q = MultiPoly(d(rng)) + d(rng) * x + d(rng) * x * x;
    if (q.degree("x") < 1) q = q + x;
    const int n = q.degree("x");
    auto qv = [&](long r) { return q.evaluate({{"x", Rational(r)}}); };
    Rational expected = Rational(ipow(Integer(lc), static_cast<unsigned>(n))) * qv(r1) * qv(r2) * qv(r3);
    CHECK(resultant(p, q, "x") == MultiPoly::constant(expected.get_num()));
  }
}

TEST_CASE("resultant vanishes under a forced common root") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> d(-4, 4);
  auto x = var("x"), y = var("y");
  for (int trial = 0; trial < 20; ++trial) {
    // Common root x = y + c for every y.
    auto common = x - y - d(rng);
    auto p = common * (x + d(rng) * y + 1);
    auto q = common * (x * x - d(rng) * y + 2);
    CHECK(resultant(p, q, "x").is_zero());
    auto p2 = x * x + d(rng) * y * x + 1;
    auto q2 = x - y;
    // Res(p2, x - y) = p2(y) up to the sign of the convention.
    auto r = resultant(p2, q2, "x");
    CHECK(r == p2.substitute("x", y));
  }
}

TEST_CASE("interpolated resultant matches the symbolic one") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> d(-5, 5);
  auto x = RationalPoly::variable("x"), y = RationalPoly::variable("y");
  for (int trial = 0; trial < 15; ++trial) {
    RationalPoly p = x * x * x + Rational(d(rng), 3) * y * x * x + Rational(d(rng)) * y * y + 1;
    RationalPoly q = Rational(d(rng) == 0 ? 1 : 2) * x * x + Rational(d(rng)) * y * x - Rational(d(rng), 2) * y * y * y;
    CHECK(resultant_by_interpolation(p, q, "x") == resultant(p, q, "x"));
  }
}

TEST_CASE("Newton interpolation recovers a cubic") {
  std::vector<Rational> xs{0, 1, -1, 2}, ys;
  for (const auto& v : xs) ys.push_back(2 * v * v * v - v + make_rational(1, 3));
  auto c = interpolate(xs, ys);
  REQUIRE(c.size() == 4);
  CHECK(c[0] == make_rational(1, 3));
  CHECK(c[1] == -1);
  CHECK(c[2] == 0);
  CHECK(c[3] == 2);
}

TEST_CASE("laurent_place examples") {
  auto a = LaurentScalar::series(-1, {1, 1});
  CHECK(laurent_place(a).infinite);
  auto b = LaurentScalar::series(0, {make_rational(3, 2), 1});
  CHECK(laurent_place(b) == PlaceValue{false, make_rational(3, 2)});
  auto c = LaurentScalar::series(2, {1, -5});
  CHECK(laurent_place(c) == PlaceValue{false, 0});
  CHECK(laurent_place(LaurentScalar()) == PlaceValue{false, 0});
}

TEST_CASE("laurent cancellation and precision") {
  auto a = LaurentScalar::series(0, {1, 2, 3});
  auto z = a - a;
  CHECK_FALSE(z.has_known_order());
  CHECK_THROWS_AS(z.order(), PrecisionError);
  // Known modulo t^3 with nothing below: the place is provably zero.
  CHECK(laurent_place(z) == PlaceValue{false, 0});
  auto blow = LaurentScalar::series(-3, {1, 1});
  CHECK_THROWS_AS(laurent_place(blow - blow), PrecisionError);
  // Exact values never lose precision.
  auto e = LaurentScalar(Rational(5));
  CHECK((e - e).is_exact_zero());
  auto s = a * a;
  CHECK(s.relative_precision() == 3);
  CHECK(s.coefficient(2) == 10);
  CHECK_THROWS_AS(s.coefficient(3), PrecisionError);
}

TEST_CASE("laurent inverse") {
  auto a = LaurentScalar::series(-2, {2, 1, 0, 0, 0, 0});
  auto one = a * a.inverse();
  CHECK(one.order() == 0);
  CHECK(one.coefficient(0) == 1);
  for (long k = 1; k < 6; ++k) CHECK(one.coefficient(k) == 0);
}

TEST_CASE("laurent valuation properties on random series") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> ord(-3, 3), num(-1000, 1000), den(1, 50);
  auto random_series = [&] {
    std::vector<Rational> c(8);
    for (auto& x : c) x = Rational(num(rng), den(rng));
    if (c[0] == 0) c[0] = 1;
    return LaurentScalar::series(ord(rng), c);
  };
  for (int trial = 0; trial < 500; ++trial) {
    auto a = random_series(), b = random_series();
    CHECK((a * b).order() == a.order() + b.order());
    auto s = a + b;
    if (s.has_known_order()) CHECK(s.order() >= std::min(a.order(), b.order()));
    CHECK(valuation_leq(a, b) == (a.order() >= b.order()));
    auto pa = laurent_place(a), pb = laurent_place(b);
    if (!pa.infinite && !pb.infinite) {
      CHECK(laurent_place(a + b) == PlaceValue{false, pa.value + pb.value});
      CHECK(laurent_place(a * b) == PlaceValue{false, pa.value * pb.value});
    }
    if (pa.infinite && !pb.infinite) CHECK(laurent_place(a + b).infinite);
  }
}
