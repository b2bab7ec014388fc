#include "bellows/sabitov/sabitov.hpp"

#include <cmath>
#include <set>

#include "bellows/exact/resultant.hpp"
#include "bellows/geometry/cayley_menger.hpp"
#include "bellows/geometry/volume.hpp"

namespace bellows {

bool MonicRelation::is_monic() const {
  if (poly.is_zero()) return false;
  const auto lead = coefficient(static_cast<unsigned>(degree()));
  return lead.is_constant() && lead.constant_term() == 1;
}

bool MonicRelation::only_even_powers() const {
  const auto cs = poly.coefficients_in(variable);
  for (std::size_t k = 1; k < cs.size(); k += 2) {
    if (!cs[k].is_zero()) return false;
  }
  return true;
}

bool MonicRelation::has_integer_coefficients() const {
  for (const auto& [e, c] : poly.terms()) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

std::vector<std::string> MonicRelation::length_variables() const {
  std::vector<std::string> out;
  for (const auto& v : poly.variables()) {
    if (v != variable) out.push_back(v);
  }
  return out;
}

Rational MonicRelation::evaluate(const Rational& w, const LengthValues& lengths) const {
  LengthValues all = lengths;
  all[variable] = w;
  return poly.evaluate(all);
}

namespace {

RationalPoly half_cm(const std::vector<Vertex>& vertices) {
  auto half = cayley_menger_symbolic(vertices).divide_exact(Integer(2));
  if (!half) throw InternalConsistencyError("odd-order Cayley-Menger determinant has an odd coefficient");
  return half->convert<Rational>();
}

Chain tetra_boundary(const std::vector<Vertex>& ordered) {
  Chain c(3);
  c.add(OrientedSimplex::from_ordered(ordered), 1);
  return boundary(c);
}

bool is_length_variable(const std::string& v) { return v.rfind("l(", 0) == 0; }

std::set<std::string> other_variables(const RationalPoly& p, const RationalPoly& q, const std::string& var) {
  std::set<std::string> out;
  for (const auto* poly : {&p, &q}) {
    for (const auto& v : poly->variables()) {
      if (v != var) out.insert(v);
    }
  }
  return out;
}

RationalPoly negate_variable(const RationalPoly& p, const std::string& var) {
  return p.substitute(var, -RationalPoly::variable(var));
}

}  // namespace

MonicRelation bipyramid_relation(const Vertex& p, const Vertex& q, const Vertex& a, const Vertex& b, const Vertex& c) {
  const RationalPoly A = half_cm({p, a, b, c});
  const RationalPoly B = half_cm({q, a, b, c});
  const RationalPoly w = RationalPoly::variable("W");
  const RationalPoly w2 = w * w;
  MonicRelation r;
  r.poly = w2 * w2 - RationalPoly(2) * (A + B) * w2 + (A - B) * (A - B);
  return r;
}

Chain bipyramid_cycle(const Vertex& p, const Vertex& q, const Vertex& a, const Vertex& b, const Vertex& c) {
  return tetra_boundary({p, a, b, c}) - tetra_boundary({q, a, b, c});
}

Chain square_suspension_cycle(const Vertex& p, const Vertex& q, const Vertex& a, const Vertex& b, const Vertex& c,
                              const Vertex& d) {
  return bipyramid_cycle(p, q, a, b, c) + bipyramid_cycle(p, q, a, c, d);
}

SquareSuspensionSetup square_suspension_setup(const Vertex& p, const Vertex& q, const Vertex& a, const Vertex& b,
                                              const Vertex& c, const Vertex& d) {
  const RationalPoly w = RationalPoly::variable("W");
  const RationalPoly w1 = RationalPoly::variable("W1");
  SquareSuspensionSetup s;
  s.relations.push_back(bipyramid_relation(p, q, a, b, c).poly.substitute("W", w1));
  s.relations.push_back(bipyramid_relation(p, q, a, c, d).poly.substitute("W", w - w1));
  s.relations.push_back(cayley_menger_symbolic({p, q, a, b, c}).convert<Rational>());
  s.relations.push_back(cayley_menger_symbolic({p, q, a, c, d}).convert<Rational>());
  s.plan.steps = {{"W1", 0, 1}, {length_variable(p, q), 2, 3}, {length_variable(a, c), 4, 5}};
  return s;
}

MonicRelation eliminate(const EliminationPlan& plan, const std::vector<RationalPoly>& relations,
                        const EliminationOptions& options) {
  if (plan.steps.empty()) throw PreconditionError("elimination plan has no steps");
  std::vector<RationalPoly> work;
  work.reserve(relations.size() + plan.steps.size());
  for (const auto& r : relations) {
    work.push_back(options.mode == EliminationMode::specialized ? r.specialize(options.values) : r);
  }
  if (options.mode == EliminationMode::symbolic) {
    std::size_t diagonals = 0;
    for (const auto& step : plan.steps) diagonals += is_length_variable(step.variable) ? 1 : 0;
    if (diagonals > 1) throw ResourceError("symbolic elimination is limited to one length variable");
  }

  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    const auto& step = plan.steps[i];
    if (options.deadline && std::chrono::steady_clock::now() > *options.deadline) {
      throw ResourceError("elimination deadline passed before step " + std::to_string(i));
    }
    if (step.first >= work.size() || step.second >= work.size() || step.first == step.second) {
      throw PreconditionError("elimination step " + std::to_string(i) + " refers to an unknown relation");
    }
    const auto& p = work[step.first];
    const auto& q = work[step.second];
    if (!p.has_variable(step.variable) || !q.has_variable(step.variable)) {
      throw PreconditionError("relations of step " + std::to_string(i) + " do not both contain '" + step.variable +
                              "'");
    }
    RationalPoly r = other_variables(p, q, step.variable).size() <= 1
                         ? resultant_by_interpolation(p, q, step.variable)
                         : resultant(p, q, step.variable, options.term_cap);
    if (r.term_count() > options.term_cap) throw ResourceError("resultant exceeds the term cap");
    if (r.is_zero()) {
      throw DegenerateInputError("resultant in '" + step.variable + "' vanishes: the relations share a factor");
    }
    work.push_back(std::move(r));
  }

  MonicRelation out;
  out.variable = plan.output_variable;
  RationalPoly f = work.back();
  for (const auto& v : f.variables()) {
    if (v == out.variable) continue;
    if (options.mode == EliminationMode::specialized) {
      throw PreconditionError("variable '" + v + "' survives specialized elimination");
    }
  }
  if (!f.has_variable(out.variable)) throw DegenerateInputError("elimination removed '" + out.variable + "' as well");

  auto normalize = [&](RationalPoly g) {
    const auto lead = g.coefficient(out.variable, static_cast<unsigned>(g.degree(out.variable)));
    if (!lead.is_constant() || lead.is_zero()) {
      throw DegenerateInputError("leading coefficient in '" + out.variable + "' is not a nonzero constant");
    }
    return g.scaled(1 / lead.constant_term());
  };
  out.poly = normalize(f);
  if (!out.only_even_powers()) out.poly = normalize(out.poly * negate_variable(out.poly, out.variable));
  return out;
}

LengthValues edge_length_values(const Polyhedron<Rational>& poly) {
  LengthValues out;
  for (const auto& [u, v] : support_edges(poly.cycle)) out[length_variable(u, v)] = sq_dist(poly.embedding, u, v);
  return out;
}

Rational verify_relation(const MonicRelation& rel, const Polyhedron<Rational>& poly) {
  const auto lengths = edge_length_values(poly);
  for (const auto& v : rel.length_variables()) {
    if (!lengths.count(v)) throw PreconditionError("relation variable '" + v + "' is not an edge of the polyhedron");
  }
  return rel.evaluate(normalized_volume(poly), lengths);
}

double relative_residual(const MonicRelation& rel, double w, const std::map<std::string, double, std::less<>>& lengths) {
  const auto& vars = rel.poly.variables();
  std::vector<double> values;
  for (const auto& v : vars) {
    if (v == rel.variable) {
      values.push_back(w);
      continue;
    }
    auto it = lengths.find(v);
    if (it == lengths.end()) throw PreconditionError("no value bound for variable '" + v + "'");
    values.push_back(it->second);
  }
  double sum = 0, scale = 0;
  for (const auto& [e, c] : rel.poly.terms()) {
    double term = c.get_d();
    for (std::size_t i = 0; i < e.size(); ++i) term *= std::pow(values[i], e[i]);
    sum += term;
    scale += std::fabs(term);
  }
  return scale == 0 ? 0 : std::fabs(sum) / scale;
}

}  // namespace bellows
