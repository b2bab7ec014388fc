#include <doctest.h>

#include "bellows/collapse/collapse.hpp"
#include "bellows/homology/homology.hpp"

using namespace bellows;

namespace {

OrderProfile flat_profile(int n, int m) {
  OrderProfile p;
  p.n = n;
  p.m = m;
  return p;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("generic finite place gives the full simplex") {
  const auto sim = simulate_place(flat_profile(3, 6), 1);
  CHECK(sim.k_phi.dimension() == 5);
  for (int k = 0; k <= 5; ++k) CHECK(sim.k_phi.simplices(k).size() == binomial(6, static_cast<std::size_t>(k + 1)));
  for (int u = 0; u < 6; ++u) {
    for (int v = 0; v < 6; ++v) {
      if (u != v) CHECK(sim.graph[u][v]);
    }
  }
  CHECK(check_ultrametric(sim).empty());
}

TEST_CASE("an infinite coordinate cuts its vertex off") {
  auto p = flat_profile(3, 5);
  p.orders[{2, 1}] = -1;
  const auto sim = simulate_place(p, 7);
  for (int v = 0; v < 5; ++v) {
    if (v == 2) continue;
    CHECK(sim.length_order[2][v] == Order(-2));
    CHECK_FALSE(sim.graph[2][v]);
  }
  CHECK(sim.k_phi.dimension() == 3);  // the other four vertices
  CHECK(sim.k_phi.contains(Mask{0b11011}));
}

TEST_CASE("shared leading terms keep a diagonal finite") {
  auto p = flat_profile(3, 5);
  for (int i = 0; i < 3; ++i) {
    p.orders[{0, i}] = -1;
    p.orders[{1, i}] = -1;
  }
  p.classes = {{0, 1}};
  p.share_below = 0;
  const auto sim = simulate_place(p, 3);
  CHECK(sim.length_order[0][1] == Order(0));
  CHECK(sim.graph[0][1]);
  CHECK_FALSE(sim.graph[0][2]);
  CHECK_FALSE(sim.graph[1][4]);
  CHECK(sim.k_phi.contains(Mask{0b00011}));
}

TEST_CASE("precision retry and exhaustion") {
  auto p = flat_profile(3, 4);
  p.classes = {{0, 1}};
  p.share_below = 20;  // every coefficient known at N = 16 is shared
  const auto sim = simulate_place(p, 5);
  CHECK(sim.precision == 32);
  CHECK(sim.length_order[0][1] == Order(40));

  p.share_below = 100;
  CHECK_THROWS_AS(simulate_place(p, 5), PrecisionError);
}

TEST_CASE("ordering on the full simplex") {
  for (int n : {3, 4}) {
    const auto sim = simulate_place(flat_profile(n, 6), 11);
    const auto ord = build_ordering(sim);
    const auto report = check_ordering(sim, ord);
    CHECK(report.ok());
    CHECK(ord.levels[0].front() == Mask{1});  // v0 is the greatest vertex
    CHECK(check_proposition_union(sim.k_phi, ord, n, sim.names).empty());
  }
}

TEST_CASE("greedy choice picks a pair of largest squared length") {
  // v1, v2, v3 agree to first order, so their mutual lengths are small.
  auto p = flat_profile(3, 6);
  p.classes = {{1, 2, 3}};
  p.share_below = 1;
  const auto sim = simulate_place(p, 19);
  CHECK(sim.length_order[1][2] == Order(2));
  CHECK(sim.length_order[1][4] == Order(0));
  const auto ord = build_ordering(sim);
  CHECK(check_ordering(sim, ord).ok());

  // rho = {v0}: its edges in order; each chosen vertex has a partner among
  // the remaining ones at the minimal order
  std::vector<int> seq;
  for (Mask e : ord.levels[1]) {
    if (ord.mu(e) == Mask{1}) seq.push_back(__builtin_ctzll(e & ~Mask{1}));
  }
  REQUIRE(seq.size() == 5);
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    Order best;
    bool any = false;
    for (std::size_t a = i; a < seq.size(); ++a) {
      for (std::size_t b = i; b < seq.size(); ++b) {
        if (a != b && (!any || compare_orders(sim.length_order[seq[a]][seq[b]], best) < 0)) {
          any = true;
          best = sim.length_order[seq[a]][seq[b]];
        }
      }
    }
    bool attained = false;
    for (std::size_t b = i + 1; b < seq.size(); ++b) attained = attained || sim.length_order[seq[i]][seq[b]] == best;
    CHECK(attained);
  }
}

TEST_CASE("even n edge order follows the first coordinate") {
  auto p = flat_profile(4, 6);
  p.classes = {{0, 2}, {3, 5}};
  p.share_below = 2;
  for (int v = 0; v < 6; ++v) p.orders[{v, 0}] = v % 3 == 0 ? -1 : 0;
  const auto sim = simulate_place(p, 23);
  const auto ord = build_ordering(sim);
  const auto report = check_ordering(sim, ord);
  CHECK(report.condition_iii.empty());
  CHECK(report.ok());
}

TEST_CASE("collapse of a full simplex") {
  const auto sim = simulate_place(flat_profile(4, 5), 2);
  const auto ord = build_ordering(sim);
  const auto trace = collapse_schedule(sim.k_phi, ord, 2, sim.names);
  CHECK(trace.residual.dimension() <= 2);
  CHECK(trace.removed.front().first == Mask{0b11111});
  const auto h = homology(trace.residual.to_complex(sim.names), 0);
  CHECK(h.betti == 1);
  for (int k = 1; k <= 2; ++k) CHECK(homology(trace.residual.to_complex(sim.names), k).is_trivial());
}

TEST_CASE("an ordering violating (i) blocks the schedule") {
  // vertices a > b > c; edges bc > ab > ac
  const Mask a = 1, b = 2, c = 4;
  const std::vector<Vertex> names{"a", "b", "c"};
  auto ord = DimOrdering::from_levels({{a, b, c}, {b | c, a | b, a | c}, {a | b | c}});
  std::vector<std::vector<bool>> full(3, std::vector<bool>(3, true));
  const auto k = MaskComplex::clique(full);
  CHECK_FALSE(check_condition_i(k, ord, names).empty());
  try {
    collapse_schedule(k, ord, 0, names);
    FAIL("schedule should fail");
  } catch (const ScheduleFailure& e) {
    CHECK(e.sigma() == (a | b));
    CHECK(e.tau() == a);
    CHECK(e.blocking() == (a | c));
  }

  // the constructed ordering on the same triangle collapses to a point
  auto good = DimOrdering::from_levels({{a, b, c}, {a | b, a | c, b | c}, {a | b | c}});
  CHECK(check_condition_i(k, good, names).empty());
  CHECK(collapse_schedule(k, good, 0, names).residual.dimension() == 0);
}

TEST_CASE("randomized main lemma runs") {
  int reseeds = 0;
  for (int n : {3, 4, 5}) {
    for (int m = n + 1; m <= 8; ++m) {
      for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const auto r = run_trial(n, m, 1000 * static_cast<std::uint64_t>(n) + 100 * static_cast<std::uint64_t>(m) + seed);
        CAPTURE(n);
        CAPTURE(m);
        CAPTURE(seed);
        CHECK(r.ordering.ok());
        CHECK_FALSE(r.schedule_failure.has_value());
        CHECK(r.residual_dimension <= n / 2);
        CHECK(r.proposition_violations.empty());
        CHECK(r.ultrametric_violations.empty());
        CHECK(r.high_homology_nonzero.empty());
        CHECK(r.betti_preserved);
        reseeds += r.reseeds;
      }
    }
  }
  MESSAGE("precision reseeds: " << reseeds);
}

TEST_CASE("profile JSON") {
  const auto p = parse_profile_json(
      R"({"n":3,"m":5,"precision":8,"orders":{"v1":[0,-1,0]},"classes":[["v2","v3"]],"share_below":1})");
  CHECK(p.precision == 8);
  CHECK(p.orders.at({1, 1}) == -1);
  CHECK(p.classes == std::vector<std::vector<int>>{{2, 3}});
  CHECK_THROWS_AS(parse_profile_json(R"({"n":3,"m":3})"), SchemaError);
  CHECK_THROWS_AS(parse_profile_json(R"({"n":3,"m":5,"orders":{"x":[0,0,0]}})"), SchemaError);
  CHECK_THROWS_AS(parse_profile_json(R"({"n":3,"m":5,"orders":{"v0":[0,0]}})"), SchemaError);
  CHECK(simulation_vertex_names(12)[3] == "v03");
}
