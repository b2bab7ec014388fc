#include <doctest.h>

#include <cmath>

#include "bellows/flex/flex.hpp"
#include "bellows/geometry/volume.hpp"

using namespace bellows;

namespace {

Polyhedron<double> unit_tetrahedron() {
  Embedding<double> e(3);
  e.set("0", {0, 0, 0});
  e.set("1", {1, 0, 0});
  e.set("2", {0, 1, 0});
  e.set("3", {0, 0, 1});
  Chain z(2);
  z.add(OrientedSimplex::from_ordered({"1", "2", "3"}), 1);
  z.add(OrientedSimplex::from_ordered({"0", "3", "2"}), 1);
  z.add(OrientedSimplex::from_ordered({"0", "1", "3"}), 1);
  z.add(OrientedSimplex::from_ordered({"0", "2", "1"}), 1);
  return make_polyhedron(z, e);
}

double dist2(const Embedding<double>& e, const Vertex& u, const Vertex& v) {
  double s = 0;
  for (int i = 0; i < e.dim; ++i) s += std::pow(e.point(u)[i] - e.point(v)[i], 2);
  return s;
}

}  // namespace

TEST_CASE("rigidity kernel dimensions") {
  const auto tet = rigidity_matrix(unit_tetrahedron());
  CHECK(tet.matrix.rows() == 6);
  CHECK(tet.report.rank == 6);
  CHECK(tet.report.kernel_dimension == 6);
  CHECK(tet.report.internal_dof == 0);

  const auto oct = rigidity_matrix(bricard_type1());
  CHECK(oct.matrix.rows() == 12);
  CHECK(oct.report.kernel_dimension == 7);
  CHECK(oct.report.trivial_dimension == 6);
  CHECK(oct.report.internal_dof == 1);

  const auto sq = rigidity_matrix(planar_square());
  CHECK(sq.report.kernel_dimension == 4);
  CHECK(sq.report.internal_dof == 1);

  // trivial motions lie in the kernel
  const auto t = trivial_motions(bricard_type1().embedding, oct.vertices);
  CHECK((oct.matrix * t).norm() < 1e-12);
}

TEST_CASE("Bricard octahedron is line symmetric and meets its targets") {
  BricardParams params;
  params.start = std::array<std::array<double, 3>, 3>{{{1.0, 0.2, 0.3}, {-0.1, 1.1, -0.2}, {0.6, -0.7, 0.9}}};
  params.targets = std::array<double, 6>{2.0, 2.5, 1.2, 1.9, 3.1, 2.6};
  const auto p = bricard_type1(params);
  for (const char* x : {"a", "b", "c"}) {
    const auto& p1 = p.embedding.point(std::string(x) + "1");
    const auto& p2 = p.embedding.point(std::string(x) + "2");
    CHECK(p2[0] == -p1[0]);
    CHECK(p2[1] == -p1[1]);
    CHECK(p2[2] == p1[2]);
  }
  const auto& e = p.embedding;
  const std::array<double, 6> got{dist2(e, "a1", "b1"), dist2(e, "a1", "b2"), dist2(e, "a1", "c1"),
                                  dist2(e, "a1", "c2"), dist2(e, "b1", "c1"), dist2(e, "b1", "c2")};
  for (std::size_t i = 0; i < 6; ++i) CHECK(std::fabs(got[i] - (*params.targets)[i]) <= 1e-12 * (*params.targets)[i]);
  // the symmetric partners share lengths
  CHECK(std::fabs(dist2(e, "a2", "b2") - dist2(e, "a1", "b1")) < 1e-12);
  CHECK(std::fabs(dist2(e, "a2", "c1") - dist2(e, "a1", "c2")) < 1e-12);
}

TEST_CASE("Bricard construction rejects degenerate input") {
  BricardParams on_axis;
  on_axis.start = std::array<std::array<double, 3>, 3>{{{0.0, 0.0, 0.5}, {1.0, 0.2, 0.0}, {0.3, -1.0, 0.4}}};
  CHECK_THROWS_AS(bricard_type1(on_axis), ConstructionError);

  BricardParams coincide;
  coincide.start = std::array<std::array<double, 3>, 3>{{{1.0, 0.0, 0.0}, {1.0, 0.0, 0.0}, {0.3, -1.0, 0.4}}};
  CHECK_THROWS_AS(bricard_type1(coincide), ConstructionError);

  BricardParams impossible;
  impossible.targets = std::array<double, 6>{1.0, 1.0, 1.0, 1.0, 1.0, 400.0};  // triangle inequality fails
  CHECK_THROWS_AS(bricard_type1(impossible), ConstructionError);
}

TEST_CASE("tracing the Bricard flex keeps the volume") {
  const auto fam = trace_flex(bricard_type1());
  CHECK(fam.complete);
  CHECK(fam.samples.size() == 201);
  const auto r = verify_bellows(fam);
  CHECK(r.max_edge_deviation <= 1e-10);
  CHECK(r.diagonal_variation >= 1e-3);
  CHECK(r.volume_spread <= r.volume_tolerance);
  CHECK(r.origin_disagreement <= 1e-12);
  CHECK(r.verdict == Verdict::pass);
  // consecutive samples stay within the continuation bound
  for (std::size_t s = 1; s < fam.samples.size(); ++s) {
    double d = 0;
    for (const auto& [v, x] : fam.samples[s].embedding.coords) {
      for (int i = 0; i < 3; ++i) d += std::pow(x[i] - fam.samples[s - 1].embedding.point(v)[i], 2);
    }
    CHECK(std::sqrt(d) <= 2 * 5e-3);
  }
}

TEST_CASE("planar quadrilateral flexes and changes its area") {
  const auto fam = trace_flex(planar_square(), {200, 5e-3, 1e-13, 30});
  const auto r = verify_bellows(fam);
  CHECK(r.max_edge_deviation <= 1e-10);
  CHECK(r.volume_spread >= 1e-2);
  CHECK(r.verdict == Verdict::fail);
}

TEST_CASE("a tetrahedron cannot be traced") { CHECK_THROWS_AS(trace_flex(unit_tetrahedron()), PreconditionError); }

TEST_CASE("verdicts that are withheld") {
  auto fam = trace_flex(bricard_type1(), {20, 5e-3, 1e-13, 30});
  auto bad = fam;
  bad.samples.back().embedding.coords["a1"][0] += 1e-6;
  const auto r = verify_bellows(bad);
  CHECK(r.verdict == Verdict::withheld);
  CHECK(r.reason.find("edge gate") != std::string::npos);
  CHECK_FALSE(edge_gate(bad).empty());

  // a rigid translation keeps edges and diagonals: nothing is certified
  FlexFamily rigid = fam;
  rigid.samples.resize(1);
  for (int s = 1; s <= 5; ++s) {
    auto e = rigid.samples.front().embedding;
    for (auto& [v, x] : e.coords) x[0] += 0.1 * s;
    rigid.samples.push_back({0.1 * s, e});
  }
  const auto rr = verify_bellows(rigid);
  CHECK(rr.verdict == Verdict::withheld);
  CHECK(rr.diagonal_variation < kDiagonalCertificate);

  const FlexFamily empty;
  CHECK_THROWS_AS(verify_bellows(empty), PreconditionError);
}

TEST_CASE("flex JSON round trip and gate on load") {
  const auto fam = trace_flex(bricard_type1(), {10, 5e-3, 1e-13, 30});
  const auto text = flex_to_json(fam);
  const auto back = parse_flex_json(text);
  CHECK(back.cycle == fam.cycle);
  CHECK(back.targets == fam.targets);
  REQUIRE(back.samples.size() == fam.samples.size());
  for (std::size_t s = 0; s < fam.samples.size(); ++s) {
    CHECK(back.samples[s].t == fam.samples[s].t);
    CHECK(back.samples[s].embedding.coords == fam.samples[s].embedding.coords);
  }
  CHECK(flex_to_json(back) == text);

  auto corrupt = fam;
  corrupt.samples[3].embedding.coords["b2"][2] += 1e-4;
  try {
    parse_flex_json(flex_to_json(corrupt));
    FAIL("corrupted family accepted");
  } catch (const EdgeGateError& e) {
    CHECK_FALSE(e.diagnostics().empty());
    CHECK(e.diagnostics().front().find("sample 3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_flex_json("{"), SchemaError);
  CHECK_THROWS_AS(parse_flex_json(R"({"dim":3,"targets":{},"samples":[]})"), SchemaError);
}

TEST_CASE("OBJ export") {
  const auto fam = trace_flex(bricard_type1(), {2, 5e-3, 1e-13, 30});
  const auto obj = sample_to_obj(fam, 1);
  std::size_t v = 0, f = 0;
  std::istringstream in(obj);
  for (std::string line; std::getline(in, line);) {
    v += line.rfind("v ", 0) == 0;
    f += line.rfind("f ", 0) == 0;
  }
  CHECK(v == 6);
  CHECK(f == 8);
}

TEST_CASE("saved fixtures") {
  const std::filesystem::path data = BELLOWS_TEST_DATA;
  const auto square = load_flex(data / "square_flex.json");
  CHECK(verify_bellows(square).verdict == Verdict::fail);

  const auto cross = load_flex(data / "cross_polytope_4d_rotation.json");
  const auto r = verify_bellows(cross);
  CHECK(r.max_edge_deviation <= 1e-10);
  CHECK(r.verdict == Verdict::withheld);
}
