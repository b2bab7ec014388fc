#include "bellows/flex/flex.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include <json.hpp>

#include "bellows/geometry/volume.hpp"
#include "bellows/simplicial/io.hpp"

namespace bellows {

namespace {

using Vec = Eigen::VectorXd;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double parse_double(const nlohmann::json& v, const std::string& what) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    char* end = nullptr;
    const double x = std::strtod(s.c_str(), &end);
    if (end != s.c_str() && *end == '\0') return x;
  }
  throw SchemaError(what + " must be a number or a decimal string");
}

std::map<Vertex, std::size_t> index_map(const std::vector<Vertex>& vertices) {
  std::map<Vertex, std::size_t> idx;
  for (std::size_t i = 0; i < vertices.size(); ++i) idx[vertices[i]] = i;
  return idx;
}

Vec flatten(const Embedding<double>& e, const std::vector<Vertex>& vertices) {
  const auto n = static_cast<std::size_t>(e.dim);
  Vec x(static_cast<Eigen::Index>(n * vertices.size()));
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    const auto& p = e.point(vertices[v]);
    for (std::size_t i = 0; i < n; ++i) x(static_cast<Eigen::Index>(v * n + i)) = p[i];
  }
  return x;
}

Embedding<double> unflatten(const Vec& x, int dim, const std::vector<Vertex>& vertices) {
  Embedding<double> e(dim);
  const auto n = static_cast<std::size_t>(dim);
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    std::vector<double> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = x(static_cast<Eigen::Index>(v * n + i));
    e.set(vertices[v], p);
  }
  return e;
}

double squared(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return s;
}

Eigen::MatrixXd jacobian(const Vec& x, int dim, const std::vector<Edge>& edges, const std::map<Vertex, std::size_t>& idx) {
  const auto n = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(edges.size()), x.size());
  for (std::size_t r = 0; r < edges.size(); ++r) {
    const auto u = static_cast<Eigen::Index>(idx.at(edges[r].first));
    const auto v = static_cast<Eigen::Index>(idx.at(edges[r].second));
    for (Eigen::Index i = 0; i < n; ++i) {
      const double d = x(u * n + i) - x(v * n + i);
      m(static_cast<Eigen::Index>(r), u * n + i) = 2 * d;
      m(static_cast<Eigen::Index>(r), v * n + i) = -2 * d;
    }
  }
  return m;
}

Vec edge_residual(const Vec& x, int dim, const std::vector<Edge>& edges, const std::map<Vertex, std::size_t>& idx,
                  const std::vector<double>& targets) {
  const auto n = static_cast<Eigen::Index>(dim);
  Vec f(static_cast<Eigen::Index>(edges.size()));
  for (std::size_t r = 0; r < edges.size(); ++r) {
    const auto u = static_cast<Eigen::Index>(idx.at(edges[r].first));
    const auto v = static_cast<Eigen::Index>(idx.at(edges[r].second));
    double s = 0;
    for (Eigen::Index i = 0; i < n; ++i) s += (x(u * n + i) - x(v * n + i)) * (x(u * n + i) - x(v * n + i));
    f(static_cast<Eigen::Index>(r)) = s - targets[r];
  }
  return f;
}

double max_relative(const Vec& f, const std::vector<double>& targets) {
  double worst = 0;
  for (Eigen::Index r = 0; r < f.size(); ++r) {
    worst = std::max(worst, std::fabs(f(r)) / std::max(targets[static_cast<std::size_t>(r)], 1e-300));
  }
  return worst;
}

int numeric_rank(const Eigen::VectorXd& sv, double gap) {
  if (sv.size() == 0 || sv(0) == 0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) rank += sv(i) > gap * sv(0) ? 1 : 0;
  return rank;
}

struct Analysis {
  RigidityReport report;
  Eigen::MatrixXd internal;  // orthonormal basis of kernel modulo trivial motions
};

Analysis analyse(const Eigen::MatrixXd& m, const Eigen::MatrixXd& trivial, double gap) {
  Analysis a;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const auto sv = svd.singularValues();
  a.report.singular_values.assign(sv.data(), sv.data() + sv.size());
  a.report.rank = numeric_rank(sv, gap);
  a.report.kernel_dimension = static_cast<int>(m.cols()) - a.report.rank;

  Eigen::JacobiSVD<Eigen::MatrixXd> tsvd(trivial, Eigen::ComputeThinU);
  const int trank = numeric_rank(tsvd.singularValues(), gap);
  a.report.trivial_dimension = trank;
  a.report.internal_dof = std::max(0, a.report.kernel_dimension - trank);

  const Eigen::MatrixXd kernel = svd.matrixV().rightCols(a.report.kernel_dimension);
  const Eigen::MatrixXd q = tsvd.matrixU().leftCols(trank);
  const Eigen::MatrixXd projected = kernel - q * (q.transpose() * kernel);
  if (a.report.internal_dof > 0 && projected.cols() > 0) {
    Eigen::JacobiSVD<Eigen::MatrixXd> psvd(projected, Eigen::ComputeThinU);
    a.internal = psvd.matrixU().leftCols(a.report.internal_dof);
  }
  return a;
}

}  // namespace

// ---------------------------------------------------------------------------

Eigen::MatrixXd trivial_motions(const Embedding<double>& e, const std::vector<Vertex>& vertices) {
  const auto n = static_cast<Eigen::Index>(e.dim);
  const auto rows = n * static_cast<Eigen::Index>(vertices.size());
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(rows, n + n * (n - 1) / 2);
  Eigen::Index col = 0;
  for (Eigen::Index i = 0; i < n; ++i, ++col) {
    for (Eigen::Index v = 0; v < static_cast<Eigen::Index>(vertices.size()); ++v) t(v * n + i, col) = 1;
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j, ++col) {
      for (Eigen::Index v = 0; v < static_cast<Eigen::Index>(vertices.size()); ++v) {
        const auto& p = e.point(vertices[static_cast<std::size_t>(v)]);
        t(v * n + i, col) = -p[static_cast<std::size_t>(j)];
        t(v * n + j, col) = p[static_cast<std::size_t>(i)];
      }
    }
  }
  return t;
}

RigidityMatrix rigidity_matrix(const Polyhedron<double>& p, double rank_gap) {
  validate_polyhedron(p);
  RigidityMatrix r;
  r.edges = support_edges(p.cycle);
  r.vertices = p.cycle.vertices();
  const Vec x = flatten(p.embedding, r.vertices);
  r.matrix = jacobian(x, p.dim(), r.edges, index_map(r.vertices));
  r.report = analyse(r.matrix, trivial_motions(p.embedding, r.vertices), rank_gap).report;
  return r;
}

// ---------------------------------------------------------------------------

Chain octahedral_cycle() {
  Chain z(2);
  for (int i : {1, 2}) {
    for (int j : {1, 2}) {
      for (int k : {1, 2}) {
        const int sign = (i == 1 ? 1 : -1) * (j == 1 ? 1 : -1) * (k == 1 ? 1 : -1);
        z.add(OrientedSimplex::from_ordered({"a" + std::to_string(i), "b" + std::to_string(j), "c" + std::to_string(k)}),
              sign);
      }
    }
  }
  return z;
}

Polyhedron<double> bricard_type1(const BricardParams& params) {
  using P3 = Eigen::Vector3d;
  const Eigen::Matrix3d half_turn = Eigen::Vector3d(-1, -1, 1).asDiagonal();
  std::mt19937_64 rng(params.seed);
  std::uniform_real_distribution<double> u(-1, 1);

  std::array<P3, 3> start;
  if (params.start) {
    for (int i = 0; i < 3; ++i) start[i] = P3((*params.start)[i][0], (*params.start)[i][1], (*params.start)[i][2]);
  } else {
    for (auto& s : start) {
      do {
        s = P3(u(rng), u(rng), u(rng));
      } while (s.head<2>().norm() < 0.3);
    }
  }

  // q = (a1, b1, c1); vertex 2 of each pair is the half-turn of vertex 1
  struct EdgeClass {
    int x, y;
    bool turned;  // edge x1 - (half-turn of y1)
  };
  const std::array<EdgeClass, 6> classes{{{0, 1, false}, {0, 1, true}, {0, 2, false}, {0, 2, true}, {1, 2, false}, {1, 2, true}}};
  auto point = [&](const Eigen::VectorXd& q, int i) { return P3(q.segment<3>(3 * i)); };
  auto check_configuration = [&](const Eigen::VectorXd& q, const std::string& when) {
    for (int i = 0; i < 3; ++i) {
      if (point(q, i).head<2>().norm() < 1e-9) {
        throw ConstructionError(when + ": vertex " + std::string(1, static_cast<char>('a' + i)) +
                                "1 lies on the symmetry axis, so it coincides with its partner");
      }
      for (int j = i + 1; j < 3; ++j) {
        if ((point(q, i) - point(q, j)).norm() < 1e-9 || (point(q, i) - half_turn * point(q, j)).norm() < 1e-9) {
          throw ConstructionError(when + ": coincident vertices");
        }
      }
    }
  };

  Eigen::VectorXd q(9);
  for (int i = 0; i < 3; ++i) q.segment<3>(3 * i) = start[static_cast<std::size_t>(i)];
  check_configuration(q, "start");

  auto lengths = [&](const Eigen::VectorXd& x) {
    Eigen::VectorXd l(6);
    for (int c = 0; c < 6; ++c) {
      const P3 y = classes[c].turned ? P3(half_turn * point(x, classes[c].y)) : point(x, classes[c].y);
      l(c) = (point(x, classes[c].x) - y).squaredNorm();
    }
    return l;
  };
  Eigen::VectorXd target(6);
  if (params.targets) {
    for (int c = 0; c < 6; ++c) target(c) = (*params.targets)[static_cast<std::size_t>(c)];
  } else {
    target = lengths(q);
    for (int c = 0; c < 6; ++c) target(c) *= 1 + params.stretch * u(rng);
  }
  for (int c = 0; c < 6; ++c) {
    if (!(target(c) > 0)) throw ConstructionError("target squared lengths must be positive");
  }

  double rel = 0;
  int it = 0;
  for (; it < 60; ++it) {
    const Eigen::VectorXd f = lengths(q) - target;
    rel = (f.array().abs() / target.array()).maxCoeff();
    if (rel <= 1e-12) break;
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(6, 9);
    for (int c = 0; c < 6; ++c) {
      const P3 y = classes[c].turned ? P3(half_turn * point(q, classes[c].y)) : point(q, classes[c].y);
      const P3 d = point(q, classes[c].x) - y;
      j.block<1, 3>(c, 3 * classes[c].x) += 2 * d.transpose();
      const P3 dy = classes[c].turned ? P3(half_turn * d) : d;
      j.block<1, 3>(c, 3 * classes[c].y) -= 2 * dy.transpose();
    }
    q -= j.completeOrthogonalDecomposition().solve(f);
    if (!q.allFinite()) break;
  }
  if (!(rel <= 1e-12)) {
    throw ConstructionError("Newton closure did not converge: relative edge residual " + fmt(rel) + " after " +
                            std::to_string(it) + " iterations");
  }
  check_configuration(q, "solution");

  Embedding<double> e(3);
  const char* names = "abc";
  for (int i = 0; i < 3; ++i) {
    const P3 p = point(q, i);
    const P3 r = half_turn * p;
    e.set(std::string(1, names[i]) + "1", {p(0), p(1), p(2)});
    e.set(std::string(1, names[i]) + "2", {r(0), r(1), r(2)});
  }
  return make_polyhedron(octahedral_cycle(), e);
}

Polyhedron<double> planar_square() {
  Embedding<double> e(2);
  e.set("a", {0, 0});
  e.set("b", {1, 0});
  e.set("c", {1, 1});
  e.set("d", {0, 1});
  Chain z(1);
  z.add(OrientedSimplex::from_ordered({"a", "b"}), 1);
  z.add(OrientedSimplex::from_ordered({"b", "c"}), 1);
  z.add(OrientedSimplex::from_ordered({"c", "d"}), 1);
  z.add(OrientedSimplex::from_ordered({"d", "a"}), 1);
  return make_polyhedron(z, e);
}

// ---------------------------------------------------------------------------

FlexFamily trace_flex(const Polyhedron<double>& p0, const TraceOptions& options) {
  validate_polyhedron(p0);
  const auto vertices = p0.cycle.vertices();
  const auto idx = index_map(vertices);
  const auto edges = support_edges(p0.cycle);
  const int dim = p0.dim();

  FlexFamily fam;
  fam.cycle = p0.cycle;
  fam.dim = dim;
  std::vector<double> targets;
  for (const auto& [u, v] : edges) {
    targets.push_back(squared(p0.embedding.point(u), p0.embedding.point(v)));
    fam.targets[{u, v}] = targets.back();
  }

  Vec x = flatten(p0.embedding, vertices);
  auto analysis_at = [&](const Vec& y) {
    return analyse(jacobian(y, dim, edges, idx), trivial_motions(unflatten(y, dim, vertices), vertices),
                   options.rank_gap);
  };
  if (analysis_at(x).report.internal_dof < 1) throw PreconditionError("polyhedron has no internal degree of freedom");
  fam.samples.push_back({0.0, unflatten(x, dim, vertices)});

  Vec previous;
  for (int s = 1; s <= options.steps; ++s) {
    const Analysis a = analysis_at(x);
    if (a.report.internal_dof < 1) {
      fam.complete = false;
      fam.stop_reason = "internal degree of freedom lost at step " + std::to_string(s);
      break;
    }
    Vec d = a.internal.col(0);
    if (previous.size() > 0) {
      // follow the continuation of the previous tangent inside the kernel
      d = a.internal * (a.internal.transpose() * previous);
      if (d.norm() < 1e-6) d = a.internal.col(0);
      d.normalize();
    }
    Vec y = x + options.step_size * d;
    double rel = 0;
    bool converged = false;
    for (int it = 0; it < options.newton_iterations; ++it) {
      const Vec f = edge_residual(y, dim, edges, idx, targets);
      rel = max_relative(f, targets);
      if (rel <= options.newton_tolerance) {
        converged = true;
        break;
      }
      y -= jacobian(y, dim, edges, idx).completeOrthogonalDecomposition().solve(f);
    }
    if (!converged) {
      fam.complete = false;
      fam.stop_reason = "corrector failed at step " + std::to_string(s) + " (relative residual " + fmt(rel) + ")";
      break;
    }
    if ((y - x).norm() > 2 * options.step_size) {
      fam.complete = false;
      fam.stop_reason = "corrector left the step bound at step " + std::to_string(s);
      break;
    }
    previous = (y - x).normalized();
    x = y;
    fam.samples.push_back({static_cast<double>(s) / options.steps, unflatten(x, dim, vertices)});
  }
  return fam;
}

// ---------------------------------------------------------------------------

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "PASS";
    case Verdict::fail:
      return "FAIL";
    case Verdict::withheld:
      return "WITHHELD";
  }
  return "WITHHELD";
}

std::vector<std::string> edge_gate(const FlexFamily& family, double tolerance) {
  std::vector<std::string> out;
  for (std::size_t s = 0; s < family.samples.size(); ++s) {
    const auto& e = family.samples[s].embedding;
    for (const auto& [edge, target] : family.targets) {
      const double l = squared(e.point(edge.first), e.point(edge.second));
      const double dev = std::fabs(l - target) / std::max(target, 1e-300);
      if (dev > tolerance) {
        out.push_back("sample " + std::to_string(s) + ": edge " + edge.first + "," + edge.second +
                      " has relative deviation " + fmt(dev));
      }
    }
  }
  return out;
}

BellowsReport verify_bellows(const FlexFamily& family, double edge_tolerance, double volume_tolerance) {
  if (family.samples.empty()) throw PreconditionError("flex family has no samples");
  BellowsReport r;
  const auto vertices = family.cycle.vertices();
  double max_target = 0;
  for (const auto& [edge, target] : family.targets) max_target = std::max(max_target, target);
  r.scale = std::sqrt(max_target);
  r.volume_tolerance = volume_tolerance * std::pow(r.scale, family.dim);

  std::vector<double> shifted(static_cast<std::size_t>(family.dim));
  for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] = 0.37 * r.scale * (i % 2 == 0 ? 1.0 : -1.3);

  std::map<Edge, std::pair<double, double>> diagonals;  // min, max
  for (const auto& sample : family.samples) {
    const Polyhedron<double> p{family.cycle, sample.embedding};
    const double v = oriented_volume(p);
    r.volumes.push_back(v);
    r.volume_spread = std::max(r.volume_spread, std::fabs(v - r.volumes.front()));
    r.origin_disagreement = std::max(r.origin_disagreement, std::fabs(v - oriented_volume(p, shifted)));
    for (const auto& [edge, target] : family.targets) {
      const double l = squared(sample.embedding.point(edge.first), sample.embedding.point(edge.second));
      r.max_edge_deviation = std::max(r.max_edge_deviation, std::fabs(l - target) / std::max(target, 1e-300));
    }
    for (std::size_t a = 0; a < vertices.size(); ++a) {
      for (std::size_t b = a + 1; b < vertices.size(); ++b) {
        const Edge key{vertices[a], vertices[b]};
        if (family.targets.count(key)) continue;
        const double l = squared(sample.embedding.point(key.first), sample.embedding.point(key.second));
        auto [it, fresh] = diagonals.try_emplace(key, l, l);
        if (!fresh) {
          it->second.first = std::min(it->second.first, l);
          it->second.second = std::max(it->second.second, l);
        }
      }
    }
  }
  for (const auto& [key, range] : diagonals) r.diagonal_variation = std::max(r.diagonal_variation, range.second - range.first);

  if (r.max_edge_deviation > edge_tolerance) {
    r.verdict = Verdict::withheld;
    r.reason = "edge gate failed: relative deviation " + fmt(r.max_edge_deviation);
  } else if (r.diagonal_variation < kDiagonalCertificate) {
    r.verdict = Verdict::withheld;
    r.reason = "no diagonal varies by " + fmt(kDiagonalCertificate) + ": not a certified flex";
  } else if (r.volume_spread <= r.volume_tolerance) {
    r.verdict = Verdict::pass;
    r.reason = "volume constant within " + fmt(r.volume_tolerance);
  } else {
    r.verdict = Verdict::fail;
    r.reason = "volume varies by " + fmt(r.volume_spread);
  }
  return r;
}

// ---------------------------------------------------------------------------

EdgeGateError::EdgeGateError(std::vector<std::string> diagnostics)
    : PreconditionError("flex samples miss their target lengths: " +
                        (diagnostics.empty() ? std::string("?") : diagnostics.front()) +
                        (diagnostics.size() > 1 ? " (and " + std::to_string(diagnostics.size() - 1) + " more)" : "")),
      diagnostics_(std::move(diagnostics)) {}

FlexFamily parse_flex_json(const std::string& text, const std::filesystem::path& base, double edge_tolerance) {
  using json = nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("flex file is not valid JSON: ") + e.what());
  }
  FlexFamily fam;
  try {
    if (!j.is_object()) throw SchemaError("flex file must be an object");
    CycleData cycle;
    if (j.contains("cycle")) {
      cycle = parse_cycle_json(j.at("cycle").dump());
    } else if (j.contains("cycle_file")) {
      std::filesystem::path path = j.at("cycle_file").get<std::string>();
      if (path.is_relative()) path = base / path;
      cycle = load_cycle(path);
    } else {
      throw SchemaError("flex file needs 'cycle' or 'cycle_file'");
    }
    fam.cycle = cycle.cycle;
    fam.dim = j.at("dim").get<int>();
    if (fam.cycle.dimension() != fam.dim - 1) throw SchemaError("cycle dimension does not match 'dim'");
    for (const auto& [key, value] : j.at("targets").items()) {
      const auto comma = key.find(',');
      if (comma == std::string::npos) throw SchemaError("target key '" + key + "' must look like \"u,v\"");
      Vertex u = key.substr(0, comma), v = key.substr(comma + 1);
      if (v < u) std::swap(u, v);
      fam.targets[{u, v}] = parse_double(value, "target '" + key + "'");
    }
    for (const auto& edge : support_edges(fam.cycle)) {
      if (!fam.targets.count(edge)) throw SchemaError("no target length for edge " + edge.first + "," + edge.second);
    }
    for (const auto& s : j.at("samples")) {
      FlexSample sample;
      sample.t = s.at("t").get<double>();
      sample.embedding = Embedding<double>(fam.dim);
      for (const auto& [name, coords] : s.at("coords").items()) {
        if (!coords.is_array() || static_cast<int>(coords.size()) != fam.dim) {
          throw SchemaError("sample coordinates of '" + name + "' must have " + std::to_string(fam.dim) + " entries");
        }
        std::vector<double> x;
        for (const auto& c : coords) x.push_back(parse_double(c, "coordinate of '" + name + "'"));
        sample.embedding.set(name, x);
      }
      for (const auto& v : fam.cycle.vertices()) {
        if (!sample.embedding.contains(v)) throw SchemaError("sample misses vertex '" + v + "'");
      }
      fam.samples.push_back(std::move(sample));
    }
    if (fam.samples.empty()) throw SchemaError("flex file has no samples");
    fam.complete = j.value("complete", true);
    fam.stop_reason = j.value("stop_reason", std::string());
  } catch (const json::exception& e) {
    throw SchemaError(std::string("malformed flex file: ") + e.what());
  }
  if (auto bad = edge_gate(fam, edge_tolerance); !bad.empty()) throw EdgeGateError(std::move(bad));
  return fam;
}

FlexFamily load_flex(const std::filesystem::path& path, double edge_tolerance) {
  return parse_flex_json(read_text_file(path), path.parent_path(), edge_tolerance);
}

std::string flex_to_json(const FlexFamily& family) {
  using json = nlohmann::ordered_json;
  json j;
  j["dim"] = family.dim;
  j["cycle"] = json::parse(cycle_to_json({family.cycle.vertices(), family.cycle}));
  json targets = json::object();
  for (const auto& [edge, l] : family.targets) targets[edge.first + "," + edge.second] = fmt(l);
  j["targets"] = targets;
  json samples = json::array();
  for (const auto& s : family.samples) {
    json coords = json::object();
    for (const auto& [v, x] : s.embedding.coords) {
      json row = json::array();
      for (double c : x) row.push_back(fmt(c));
      coords[v] = row;
    }
    samples.push_back({{"t", s.t}, {"coords", coords}});
  }
  j["samples"] = samples;
  j["complete"] = family.complete;
  if (!family.stop_reason.empty()) j["stop_reason"] = family.stop_reason;
  return j.dump(2) + "\n";
}

std::string sample_to_obj(const FlexFamily& family, std::size_t sample) {
  if (family.dim != 2 && family.dim != 3) throw PreconditionError("OBJ export supports dimensions 2 and 3");
  const auto& e = family.samples.at(sample).embedding;
  const auto vertices = family.cycle.vertices();
  const auto idx = index_map(vertices);
  std::ostringstream out;
  out << "# sample " << sample << " t=" << fmt(family.samples[sample].t) << "\n";
  for (const auto& v : vertices) {
    out << "v";
    for (double c : e.point(v)) out << " " << fmt(c);
    if (family.dim == 2) out << " 0";
    out << "\n";
  }
  for (const auto& [s, c] : family.cycle.terms()) {
    std::vector<std::size_t> ids;
    for (const auto& v : s) ids.push_back(idx.at(v) + 1);
    if (c < 0) std::swap(ids[0], ids[1]);
    for (Integer k = 0; k < abs(c); ++k) {
      out << (family.dim == 3 ? "f" : "l");
      for (auto i : ids) out << " " << i;
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace bellows
