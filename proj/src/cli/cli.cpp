#include "bellows/cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <random>
#include <sstream>

#include "bellows/collapse/collapse.hpp"
#include "bellows/faceposet/faceposet.hpp"
#include "bellows/flex/flex.hpp"
#include "bellows/geometry/cayley_menger.hpp"
#include "bellows/geometry/volume.hpp"
#include "bellows/homology/homology.hpp"
#include "bellows/sabitov/sabitov.hpp"
#include "bellows/simplicial/complex.hpp"
#include "bellows/simplicial/io.hpp"

namespace bellows::cli {

namespace {

using json = nlohmann::ordered_json;

struct Common {
  std::uint64_t seed = 0;
  double edge_tol = kEdgeTolerance;
  double vol_tol = kVolumeTolerance;
  double rank_gap = kRankGap;
  std::string output;
  std::string format = "json";
};


std::string num(double x) { return ScalarTraits<double>::str(x); }

json header(const std::string& command, const Common& c) {
  return json{{"tool", "bellows"},
              {"version", kVersion},
              {"command", command},
              {"seed", c.seed},
              {"tolerances", {{"edge", num(c.edge_tol)}, {"volume", num(c.vol_tol)}, {"rank_gap", num(c.rank_gap)}}}};
}

std::string render(const json& report, const std::string& format) {
  if (format == "json") return report.dump(2) + "\n";
  std::ostringstream out;
  for (const auto& [key, value] : report.items()) {
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
  return out.str();
}

void emit(const json& report, const Common& c, std::ostream& out) {
  const std::string text = render(report, c.format);
  if (c.output.empty()) {
    out << text;
  } else {
    write_text_file(c.output, text);
  }
}

template <class S>
json scalar_json(const S& x) {
  return ScalarTraits<S>::str(x);
}

json chain_json(const Chain& z) {
  return json::parse(cycle_to_json({z.vertices(), z}));
}

template <class S>
Polyhedron<S> polyhedron_of(const Chain& z, const Embedding<S>& e) {
  Embedding<S> restricted(e.dim);
  for (const auto& v : z.vertices()) restricted.set(v, e.point(v));
  return make_polyhedron(z, restricted);
}

LengthKind length_kind(const std::string& s) {
  if (s == "auto") return LengthKind::automatic;
  if (s == "orthogonal") return LengthKind::orthogonal;
  if (s == "hermitian") return LengthKind::hermitian;
  throw PreconditionError("unknown length kind '" + s + "'");
}

FillRule fill_rule(const std::string& s) {
  if (s == "smith") return FillRule::smith;
  if (s == "cone_first") return FillRule::cone_first;
  if (s == "cone_second") return FillRule::cone_second;
  if (s == "cone_last") return FillRule::cone_last;
  throw PreconditionError("unknown fill rule '" + s + "'");
}

// ---------------------------------------------------------------------------

json cmd_validate(const std::string& cycle_path, const std::string& coords_path, int& code) {
  const auto data = load_cycle(cycle_path);
  const Chain& z = data.cycle;
  json r;
  std::vector<std::string> problems;
  r["dimension"] = z.dimension();
  r["vertices"] = z.vertices().size();
  r["simplices"] = z.size();
  const bool closed = boundary(z).is_zero();
  r["closed"] = closed;
  if (!closed) problems.push_back("boundary of the cycle is " + boundary(z).to_string());
  const auto pm = validate_pseudomanifold(support(z), z.dimension());
  r["pseudomanifold"] = pm.is_pseudomanifold;
  if (!coords_path.empty()) {
    const auto any = load_embedding(coords_path);
    std::visit(
        [&](const auto& e) {
          r["field"] = field_name(field_of(any));
          r["ambient_dimension"] = e.dim;
          if (e.dim != z.dimension() + 1) {
            problems.push_back("cycle of dimension " + std::to_string(z.dimension()) + " needs coordinates in dimension " +
                               std::to_string(z.dimension() + 1));
          }
          for (const auto& v : z.vertices()) {
            if (!e.contains(v)) problems.push_back("vertex '" + v + "' has no coordinates");
          }
        },
        any);
  }
  r["valid"] = problems.empty();
  r["problems"] = problems;
  code = problems.empty() ? kOk : kInputError;
  return r;
}

json cmd_volume(const std::string& cycle_path, const std::string& coords_path) {
  const auto data = load_cycle(cycle_path);
  const auto any = load_embedding(coords_path);
  json r;
  std::visit(
      [&](const auto& e) {
        const auto p = polyhedron_of(data.cycle, e);
        r["field"] = field_name(field_of(any));
        r["n"] = p.dim();
        r["V"] = scalar_json(oriented_volume(p));
        r["W"] = scalar_json(normalized_volume(p));
        r["W_over_V"] = to_string(Integer(Integer(volume_power_of_two(p.dim())) * factorial(static_cast<unsigned>(p.dim()))));
      },
      any);
  return r;
}

json cmd_cm(const std::string& coords_path, const std::vector<std::string>& simplex, int symbolic) {
  json r;
  if (symbolic > 0) {
    const auto names = simplex_vertex_names(symbolic);
    r["n"] = symbolic;
    r["vertices"] = names;
    r["cm"] = cayley_menger_symbolic(names).to_string();
    return r;
  }
  if (coords_path.empty()) throw PreconditionError("cm needs --coords or --symbolic");
  const auto any = load_embedding(coords_path);
  std::visit(
      [&](const auto& e) {
        using S = typename std::decay_t<decltype(e.coords.begin()->second)>::value_type;
        std::vector<Vertex> vs = simplex;
        if (vs.empty()) {
          for (const auto& [v, x] : e.coords) vs.push_back(v);
        }
        if (vs.size() < 2) throw PreconditionError("cm needs at least two vertices");
        const int n = static_cast<int>(vs.size()) - 1;
        const S cm = cayley_menger(e, vs);
        r["field"] = field_name(field_of(any));
        r["vertices"] = vs;
        r["n"] = n;
        r["cm"] = scalar_json(cm);
        // V^2 = (-1)^(n+1) CM / (2^n (n!)^2)
        const Rational scale =
            Rational(n % 2 == 1 ? 1 : -1) / Rational(Integer(1) << static_cast<unsigned>(n)) /
            Rational(factorial(static_cast<unsigned>(n)) * factorial(static_cast<unsigned>(n)));
        r["volume_squared"] = scalar_json(S(cm * ScalarTraits<S>::from_rational(scale)));
      },
      any);
  return r;
}

json cmd_fill(const std::string& cycle_path, const std::string& coords_path, const std::string& method) {
  const auto data = load_cycle(cycle_path);
  const Chain& z = data.cycle;
  if (!boundary(z).is_zero()) throw PreconditionError("input chain is not a cycle");
  Chain y(z.dimension() + 1);
  if (method == "cone") {
    y = cone(z.vertices().front(), z);
  } else if (method == "smith") {
    const auto vs = z.vertices();
    std::vector<Simplex> tops;
    const std::size_t k = static_cast<std::size_t>(z.dimension()) + 2;
    if (vs.size() > 14) throw ResourceError("smith filling is limited to 14 vertices; use --method cone");
    std::vector<bool> pick(vs.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(std::min(k, vs.size())), true);
    do {
      Simplex s;
      for (std::size_t i = 0; i < vs.size(); ++i) {
        if (pick[i]) s.push_back(vs[i]);
      }
      tops.push_back(s);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    y = fill_boundary(z, SimplicialComplex::from_simplices(tops));
  } else {
    throw PreconditionError("unknown fill method '" + method + "'");
  }
  if (boundary(y) != z) throw InternalConsistencyError("filling does not bound the cycle");
  json r;
  r["method"] = method;
  r["filling"] = chain_json(y);
  r["filling_simplices"] = y.size();
  if (!coords_path.empty()) {
    std::visit(
        [&](const auto& e) {
          const auto p = polyhedron_of(z, e);
          r["W_filling"] = scalar_json(volume_via_filling(p, y));
          r["W_direct"] = scalar_json(normalized_volume(p));
        },
        load_embedding(coords_path));
  }
  return r;
}

json trial_json(const TrialReport& t) {
  return json{{"seed", t.seed},
              {"used_seed", t.used_seed},
              {"reseeds", t.reseeds},
              {"precision", t.precision},
              {"k_phi_dimension", t.k_phi_dimension},
              {"k_phi_size", t.k_phi_size},
              {"ordering_violations",
               t.ordering.condition_i.size() + t.ordering.condition_ii.size() + t.ordering.condition_iii.size()},
              {"schedule_failure", t.schedule_failure ? json(*t.schedule_failure) : json(nullptr)},
              {"residual_dimension", t.residual_dimension},
              {"proposition_violations", t.proposition_violations.size()},
              {"ultrametric_violations", t.ultrametric_violations.size()},
              {"high_homology_nonzero", t.high_homology_nonzero},
              {"betti_preserved", t.betti_preserved},
              {"ok", t.ok()}};
}

json cmd_collapse(int n, int m, const std::string& profile_path, int trials, const Common& c, bool union_only,
                  int& code) {
  if (trials < 1) throw PreconditionError("--trials must be positive");
  std::optional<OrderProfile> profile;
  if (!profile_path.empty()) {
    profile = load_profile(profile_path);
    n = profile->n;
    m = profile->m;
  }
  if (n < 1 || m < 1) throw PreconditionError("--n and --vertices must be positive");
  json r;
  r["n"] = n;
  r["vertices"] = m;
  r["trials"] = trials;
  json list = json::array();
  std::size_t failures = 0, violations = 0;
  for (int i = 0; i < trials; ++i) {
    const std::uint64_t seed = c.seed + static_cast<std::uint64_t>(i);
    const auto t = profile ? run_trial(*profile, seed, !union_only) : run_trial(n, m, seed, !union_only);
    violations += t.proposition_violations.size();
    const bool ok = union_only ? t.proposition_violations.empty() : t.ok();
    failures += ok ? 0 : 1;
    list.push_back(trial_json(t));
  }
  if (union_only) {
    r["union_violations"] = violations;
  } else {
    r["failed_trials"] = failures;
    r["residual_bound"] = n / 2;
  }
  r["results"] = list;
  code = failures == 0 ? kOk : kPropertyFailure;
  return r;
}

json bellows_json(const BellowsReport& b) {
  std::vector<std::string> volumes;
  for (double v : b.volumes) volumes.push_back(num(v));
  return json{{"verdict", verdict_name(b.verdict)},
              {"reason", b.reason},
              {"max_edge_deviation", num(b.max_edge_deviation)},
              {"diagonal_variation", num(b.diagonal_variation)},
              {"volume_spread", num(b.volume_spread)},
              {"volume_tolerance", num(b.volume_tolerance)},
              {"origin_disagreement", num(b.origin_disagreement)},
              {"volumes", volumes}};
}

json rigidity_json(const RigidityReport& rep) {
  return json{{"rank", rep.rank},
              {"kernel_dimension", rep.kernel_dimension},
              {"trivial_dimension", rep.trivial_dimension},
              {"internal_dof", rep.internal_dof}};
}

int verdict_code(Verdict v) { return v == Verdict::pass ? kOk : kPropertyFailure; }

struct FlexArgs {
  std::string cycle, coords, family, obj_dir;
  bool square = false;
  double stretch = 0.01;
  int steps = 200;
  double step = 5e-3;
};

json cmd_flex_trace(const FlexArgs& a, const Common& c, std::ostream& out, int& code) {
  Polyhedron<double> p0;
  if (!a.cycle.empty()) {
    if (a.coords.empty()) throw PreconditionError("flex trace with --cycle needs --coords");
    const auto any = load_embedding(a.coords);
    const auto cyc = load_cycle(a.cycle).cycle;
    if (const auto* q = std::get_if<Embedding<Rational>>(&any)) {
      p0 = polyhedron_of(cyc, to_float(*q));
    } else if (const auto* d = std::get_if<Embedding<double>>(&any)) {
      p0 = polyhedron_of(cyc, *d);
    } else {
      throw PreconditionError("flex tracing needs a rational or float64 embedding");
    }
  } else if (a.square) {
    p0 = planar_square();
  } else {
    BricardParams params;
    params.seed = c.seed;
    params.stretch = a.stretch;
    p0 = bricard_type1(params);
  }
  TraceOptions opts;
  opts.steps = a.steps;
  opts.step_size = a.step;
  opts.rank_gap = c.rank_gap;
  const auto fam = trace_flex(p0, opts);
  json r;
  r["samples"] = fam.samples.size();
  r["complete"] = fam.complete;
  if (!fam.complete) r["stop_reason"] = fam.stop_reason;
  r["rigidity"] = rigidity_json(rigidity_matrix(p0, c.rank_gap).report);
  if (a.family.empty()) {
    out << flex_to_json(fam);
  } else {
    write_text_file(a.family, flex_to_json(fam));
    r["family"] = a.family;
  }
  code = fam.complete ? kOk : kPropertyFailure;
  return r;
}

json cmd_flex_verify(const FlexArgs& a, const Common& c, int& code) {
  if (a.family.empty()) throw PreconditionError("flex verify needs --family");
  const auto fam = load_flex(a.family, c.edge_tol);
  const auto b = verify_bellows(fam, c.edge_tol, c.vol_tol);
  code = verdict_code(b.verdict);
  json r = bellows_json(b);
  r["samples"] = fam.samples.size();
  return r;
}

json cmd_flex_report(const FlexArgs& a, const Common& c, int& code) {
  if (a.family.empty()) throw PreconditionError("flex report needs --family");
  const auto fam = load_flex(a.family, c.edge_tol);
  json r;
  r["dim"] = fam.dim;
  r["samples"] = fam.samples.size();
  r["edges"] = fam.targets.size();
  r["rigidity_at_start"] =
      rigidity_json(rigidity_matrix(make_polyhedron(fam.cycle, fam.samples.front().embedding), c.rank_gap).report);
  const auto b = verify_bellows(fam, c.edge_tol, c.vol_tol);
  r["bellows"] = bellows_json(b);
  if (!a.obj_dir.empty()) {
    std::filesystem::create_directories(a.obj_dir);
    for (std::size_t i = 0; i < fam.samples.size(); ++i) {
      char name[32];
      std::snprintf(name, sizeof name, "sample_%04zu.obj", i);
      write_text_file(std::filesystem::path(a.obj_dir) / name, sample_to_obj(fam, i));
    }
    r["obj_files"] = fam.samples.size();
  }
  code = kOk;
  return r;
}

json relation_json(const MonicRelation& rel) {
  std::vector<std::string> coeffs;
  for (int k = rel.degree(); k >= 0; --k) coeffs.push_back(rel.coefficient(static_cast<unsigned>(k)).to_string());
  return json{{"variable", rel.variable},
              {"degree", rel.degree()},
              {"monic", rel.is_monic()},
              {"even", rel.only_even_powers()},
              {"integer_coefficients", rel.has_integer_coefficients()},
              {"coefficients_high_to_low", coeffs}};
}

json cmd_sabitov(const std::string& shape, const std::string& coords_path, int& code) {
  json r;
  r["shape"] = shape;
  code = kOk;
  if (shape == "bipyramid") {
    const auto rel = bipyramid_relation();
    r["relation"] = relation_json(rel);
    if (!coords_path.empty()) {
      const auto any = load_embedding(coords_path);
      const auto* e = std::get_if<Embedding<Rational>>(&any);
      if (!e) throw PreconditionError("sabitov needs exact rational coordinates");
      const auto p = polyhedron_of(bipyramid_cycle(), *e);
      const Rational res = verify_relation(rel, p);
      r["W"] = to_string(normalized_volume(p));
      r["residual"] = to_string(res);
      code = res == 0 ? kOk : kPropertyFailure;
    }
    return r;
  }
  if (shape != "square") throw PreconditionError("unknown shape '" + shape + "' (bipyramid or square)");
  if (coords_path.empty()) throw PreconditionError("the square suspension runs in specialized mode only: pass --coords");
  const auto any = load_embedding(coords_path);
  const auto* e = std::get_if<Embedding<Rational>>(&any);
  if (!e) throw PreconditionError("sabitov needs exact rational coordinates");
  const auto p = polyhedron_of(square_suspension_cycle(), *e);
  const auto setup = square_suspension_setup();
  EliminationOptions opts;
  opts.values = edge_length_values(p);
  const auto rel = eliminate(setup.plan, setup.relations, opts);
  const Rational w = normalized_volume(p);
  const Rational res = rel.evaluate(w, {});
  r["relation"] = relation_json(rel);
  r["W"] = to_string(w);
  r["residual"] = to_string(res);
  code = res == 0 ? kOk : kPropertyFailure;
  return r;
}

PosetData builtin_poset(const std::string& name, Embedding<Rational>* standard) {
  const auto colon = name.find(':');
  if (colon == std::string::npos) throw PreconditionError("--builtin looks like cube:3, cross:3 or simplex:3");
  const std::string kind = name.substr(0, colon);
  const int n = std::stoi(name.substr(colon + 1));
  if (kind == "cube") {
    *standard = unit_cube(n);
    return cube_poset(n);
  }
  if (kind == "cross") {
    *standard = standard_cross_polytope(n);
    return cross_polytope_poset(n);
  }
  if (kind == "simplex") {
    if (n < 1 || n > 10) throw PreconditionError("simplex dimension must be in 1..10");
    std::vector<Vertex> names;
    Embedding<Rational> e(n);
    for (int i = 0; i <= n; ++i) {
      names.push_back("v" + std::to_string(i));
      std::vector<Rational> x(static_cast<std::size_t>(n));
      if (i > 0) x[static_cast<std::size_t>(i - 1)] = 1;
      e.set(names.back(), x);
    }
    *standard = e;
    return simplex_poset(names);
  }
  throw PreconditionError("unknown builtin poset '" + kind + "'");
}

json cmd_faceposet(const std::string& poset_path, const std::string& builtin, const std::string& coords_path,
                   const std::string& rule, const std::string& compare, int& code) {
  PosetData data;
  std::optional<Embedding<Rational>> standard;
  if (!builtin.empty()) {
    Embedding<Rational> e;
    data = builtin_poset(builtin, &e);
    standard = e;
  } else if (!poset_path.empty()) {
    data = load_poset(poset_path);
  } else {
    throw PreconditionError("faceposet needs --poset or --builtin");
  }
  json r;
  r["dimension"] = data.poset.dimension();
  json counts = json::array();
  for (int k = 0; k <= data.poset.dimension(); ++k) counts.push_back(data.poset.faces_of_dimension(k).size());
  r["faces_per_dimension"] = counts;
  r["triangular_2faces"] = data.poset.has_triangular_2faces();
  const auto inc = validate_incidence(data.poset, data.signs);
  r["incidence_valid"] = inc.ok();
  r["incidence_violations"] = inc.violations;
  if (!inc.ok()) {
    code = kInputError;
    return r;
  }
  const auto t = build_generalized_triangulation(data.poset, data.signs, fill_rule(rule));
  const auto bad = check_triangulation(data.poset, data.signs, t);
  r["rule"] = rule;
  r["triangulation_valid"] = bad.empty();
  r["top_chain_simplices"] = t.at(data.poset.top().id).size();
  code = bad.empty() ? kOk : kPropertyFailure;

  std::optional<AnyEmbedding> any;
  if (!coords_path.empty()) {
    any = load_embedding(coords_path);
  } else if (standard) {
    any = *standard;
  }
  if (!any) return r;
  if (const auto* q = std::get_if<Embedding<Rational>>(&*any)) {
    r["W"] = to_string(volume_ns(data.poset, t, *q));
    if (!compare.empty()) {
      const auto t2 = build_generalized_triangulation(data.poset, data.signs, fill_rule(compare));
      const Rational res = triangulation_invariance(data.poset, t, t2, *q);
      r["compare_rule"] = compare;
      r["invariance_residual"] = to_string(res);
      if (res != 0) code = kPropertyFailure;
    }
  } else if (const auto* d = std::get_if<Embedding<double>>(&*any)) {
    r["W"] = num(volume_ns(data.poset, t, *d));
  } else {
    throw PreconditionError("face-poset volumes need rational or float64 coordinates");
  }
  return r;
}

json bound_json(const VolumeBound& b) {
  return json{{"bound", num(b.bound)},           {"volume_abs", num(b.volume_abs)}, {"max_length", num(b.max_length)},
              {"c_sigma", b.c_sigma},            {"m", b.m},                        {"satisfied", b.satisfied}};
}

json cmd_estimate(const std::string& cycle_path, const std::string& coords_path, const std::string& lengths,
                  int& code) {
  const auto data = load_cycle(cycle_path);
  const auto any = load_embedding(coords_path);
  const LengthKind kind = length_kind(lengths);
  json r;
  r["lengths"] = lengths;
  VolumeBound b;
  if (const auto* q = std::get_if<Embedding<Rational>>(&any)) {
    b = volume_upper_bound(polyhedron_of(data.cycle, *q), kind);
  } else if (const auto* d = std::get_if<Embedding<double>>(&any)) {
    b = volume_upper_bound(polyhedron_of(data.cycle, *d), kind);
  } else if (const auto* z = std::get_if<Embedding<Complex>>(&any)) {
    const auto p = polyhedron_of(data.cycle, *z);
    b = volume_upper_bound(p, kind);
    r["V"] = scalar_json(oriented_volume(p));
  } else {
    throw PreconditionError("estimate needs rational, float64 or complex coordinates");
  }
  r["estimate"] = bound_json(b);
  // the bound is a theorem for real lengths and Hermitian lengths only
  code = (!b.satisfied && kind != LengthKind::orthogonal) ? kPropertyFailure : kOk;
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and numeric tools for polyhedra, their volumes and flexes", "bellows"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Common c;
  app.add_option("--seed", c.seed, "64-bit seed (default 0)");
  app.add_option("--edge-tol", c.edge_tol, "relative edge-length tolerance")->check(CLI::PositiveNumber);
  app.add_option("--vol-tol", c.vol_tol, "volume tolerance, scaled by scale^n")->check(CLI::PositiveNumber);
  app.add_option("--rank-gap", c.rank_gap, "singular value gap for numeric rank")->check(CLI::PositiveNumber);
  app.add_option("--output", c.output, "write the report here instead of stdout");
  app.add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.footer(
      "Schemas:\n"
      "  cycle     {\"vertices\":[..], \"cycle\":[{\"simplex\":[..],\"coeff\":1}, ..]}\n"
      "  coords    {\"dim\":3, \"field\":\"rational|float64|complex|laurent\", \"coords\":{\"a\":[\"1/2\",..]}}\n"
      "  profile   {\"n\":3, \"m\":6, \"precision\":16, \"orders\":{\"v1\":[0,-1,0]}, \"classes\":[[\"v2\",\"v3\"]],\n"
      "             \"share_below\":1}\n"
      "  family    {\"dim\":3, \"cycle\":{..} or \"cycle_file\":\"..\", \"targets\":{\"u,v\":\"l\"},\n"
      "             \"samples\":[{\"t\":0, \"coords\":{\"u\":[\"x\",..]}}, ..]}\n"
      "  poset     {\"faces\":[{\"id\":\"F\",\"dim\":2,\"vertices\":[..],\"covers\":[..]}], \"signs\":{\"F|G\":1}}\n"
      "Exit codes: 0 ok, 1 invalid input, 2 property or verdict failure, 3 I/O error.");
  app.fallthrough();

  std::string cycle, coords, profile, poset, builtin, rule = "smith", compare, method = "cone", shape = "bipyramid",
                                                      lengths = "auto";
  std::vector<std::string> simplex;
  int n = 3, m = 6, trials = 1, symbolic = 0;
  FlexArgs fa;

  auto* validate = app.add_subcommand("validate", "check a cycle and optionally its coordinates");
  validate->add_option("--cycle", cycle)->required();
  validate->add_option("--coords", coords);

  auto* volume = app.add_subcommand("volume", "oriented volume V and W = 2^floor(n/2) n! V");
  volume->add_option("--cycle", cycle)->required();
  volume->add_option("--coords", coords)->required();

  auto* cm = app.add_subcommand("cm", "Cayley-Menger determinant of a vertex set");
  cm->add_option("--coords", coords);
  cm->add_option("--simplex", simplex, "vertices, comma separated (default: all)")->delimiter(',');
  cm->add_option("--symbolic", symbolic, "symbolic determinant of the n-simplex");

  auto* fill = app.add_subcommand("fill", "a chain Y with dY = Z, and W computed from it");
  fill->add_option("--cycle", cycle)->required();
  fill->add_option("--coords", coords);
  fill->add_option("--method", method, "cone or smith")->check(CLI::IsMember({"cone", "smith"}));

  auto* collapse = app.add_subcommand("collapse", "simulated places: ordering, collapse schedule, homology");
  collapse->add_option("--n", n);
  collapse->add_option("--vertices", m);
  collapse->add_option("--profile", profile);
  collapse->add_option("--trials", trials);

  auto* prop = app.add_subcommand("prop61", "union check for simplices of dimension above n/2 with equal mu");
  prop->add_option("--n", n);
  prop->add_option("--vertices", m);
  prop->add_option("--profile", profile);
  prop->add_option("--trials", trials);

  auto* flex = app.add_subcommand("flex", "rigidity, flex tracing and volume verification");
  flex->require_subcommand(1);
  auto* trace = flex->add_subcommand("trace", "trace a flex (Bricard octahedron by default)");
  trace->add_option("--cycle", fa.cycle);
  trace->add_option("--coords", fa.coords);
  trace->add_flag("--square", fa.square, "the planar unit square instead");
  trace->add_option("--stretch", fa.stretch, "relative perturbation of the octahedron targets");
  trace->add_option("--steps", fa.steps);
  trace->add_option("--step-size", fa.step);
  trace->add_option("--family", fa.family, "write the family here (default: stdout)");
  auto* verify = flex->add_subcommand("verify", "Bellows verdict for a saved family");
  verify->add_option("--family", fa.family)->required();
  auto* report = flex->add_subcommand("report", "rigidity and volumes of a saved family");
  report->add_option("--family", fa.family)->required();
  report->add_option("--obj-dir", fa.obj_dir, "write one OBJ file per sample");

  auto* sabitov = app.add_subcommand("sabitov", "monic volume relations");
  sabitov->add_option("--shape", shape, "bipyramid or square");
  sabitov->add_option("--coords", coords);

  auto* face = app.add_subcommand("faceposet", "face posets, generalized triangulations and W");
  face->add_option("--poset", poset);
  face->add_option("--builtin", builtin, "cube:N, cross:N or simplex:N");
  face->add_option("--coords", coords);
  face->add_option("--rule", rule, "smith, cone_first, cone_second or cone_last");
  face->add_option("--compare", compare, "second rule for the invariance residual");

  auto* estimate = app.add_subcommand("estimate", "volume upper bound from the edge lengths");
  estimate->add_option("--cycle", cycle)->required();
  estimate->add_option("--coords", coords)->required();
  estimate->add_option("--lengths", lengths, "auto, orthogonal or hermitian");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kInputError;
  }

  int code = kOk;
  try {
    std::string name;
    json body;
    if (validate->parsed()) {
      name = "validate";
      body = cmd_validate(cycle, coords, code);
    } else if (volume->parsed()) {
      name = "volume";
      body = cmd_volume(cycle, coords);
    } else if (cm->parsed()) {
      name = "cm";
      body = cmd_cm(coords, simplex, symbolic);
    } else if (fill->parsed()) {
      name = "fill";
      body = cmd_fill(cycle, coords, method);
    } else if (collapse->parsed()) {
      name = "collapse";
      body = cmd_collapse(n, m, profile, trials, c, false, code);
    } else if (prop->parsed()) {
      name = "prop61";
      body = cmd_collapse(n, m, profile, trials, c, true, code);
    } else if (trace->parsed()) {
      name = "flex trace";
      body = cmd_flex_trace(fa, c, out, code);
      if (fa.family.empty()) return code;  // the family itself went to stdout
    } else if (verify->parsed()) {
      name = "flex verify";
      body = cmd_flex_verify(fa, c, code);
    } else if (report->parsed()) {
      name = "flex report";
      body = cmd_flex_report(fa, c, code);
    } else if (sabitov->parsed()) {
      name = "sabitov";
      body = cmd_sabitov(shape, coords, code);
    } else if (face->parsed()) {
      name = "faceposet";
      body = cmd_faceposet(poset, builtin, coords, rule, compare, code);
    } else if (estimate->parsed()) {
      name = "estimate";
      body = cmd_estimate(cycle, coords, lengths, code);
    }
    json full = header(name, c);
    for (auto& [k, v] : body.items()) full[k] = v;
    full["exit_code"] = code;
    emit(full, c, out);
    return code;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << "\n";
    return kIoFailure;
  } catch (const EdgeGateError& e) {
    err << "error: " << e.what() << "\n";
    for (const auto& d : e.diagnostics()) err << "  " << d << "\n";
    return kInputError;
  } catch (const PrecisionError& e) {
    err << "precision exhausted: " << e.what() << "\n";
    return kPropertyFailure;
  } catch (const ScheduleFailure& e) {
    err << "schedule failure: " << e.what() << "\n";
    return kPropertyFailure;
  } catch (const InternalConsistencyError& e) {
    err << "internal consistency check failed: " << e.what() << "\n";
    return kPropertyFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "I/O error: " << e.what() << "\n";
    return kIoFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace bellows::cli
