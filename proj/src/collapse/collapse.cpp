#include "bellows/collapse/collapse.hpp"

#include <algorithm>
#include <json.hpp>

#include "bellows/homology/homology.hpp"
#include "bellows/simplicial/io.hpp"

namespace bellows {

namespace {

Mask bit(int v) { return Mask{1} << v; }

std::vector<int> members(Mask s) {
  std::vector<int> out;
  for (int v = 0; v < 64; ++v) {
    if (s & bit(v)) out.push_back(v);
  }
  return out;
}

int lowest(Mask s) { return __builtin_ctzll(s); }

const std::vector<Mask>& empty_level() {
  static const std::vector<Mask> empty;
  return empty;
}

}  // namespace

std::vector<Vertex> simulation_vertex_names(int m) {
  const std::size_t width = std::to_string(std::max(0, m - 1)).size();
  std::vector<Vertex> out;
  for (int i = 0; i < m; ++i) {
    std::string digits = std::to_string(i);
    out.push_back("v" + std::string(width - digits.size(), '0') + digits);
  }
  return out;
}

// ---------------------------------------------------------------------------

MaskComplex MaskComplex::clique(const std::vector<std::vector<bool>>& adjacency) {
  const int m = static_cast<int>(adjacency.size());
  if (m > 64) throw ResourceError("at most 64 vertices are supported");
  MaskComplex k;
  std::vector<Mask> level;
  for (int v = 0; v < m; ++v) level.push_back(bit(v));
  while (!level.empty()) {
    for (Mask s : level) k.all_.insert(s);
    k.by_dim_.push_back(level);
    std::vector<Mask> next;
    for (Mask s : level) {
      const int top = 63 - __builtin_clzll(s);
      for (int v = top + 1; v < m; ++v) {
        bool ok = true;
        for (int u : members(s)) ok = ok && adjacency[u][v];
        if (ok) next.push_back(s | bit(v));
      }
    }
    std::sort(next.begin(), next.end());
    level = std::move(next);
  }
  return k;
}

const std::vector<Mask>& MaskComplex::simplices(int k) const {
  if (k < 0 || k >= static_cast<int>(by_dim_.size())) return empty_level();
  return by_dim_[static_cast<std::size_t>(k)];
}

void MaskComplex::insert(Mask s) {
  if (s == 0 || !all_.insert(s).second) return;
  const auto d = static_cast<std::size_t>(mask_dimension(s));
  if (by_dim_.size() <= d) by_dim_.resize(d + 1);
  auto& level = by_dim_[d];
  level.insert(std::lower_bound(level.begin(), level.end(), s), s);
}

void MaskComplex::erase(Mask s) {
  if (!all_.erase(s)) return;
  auto& level = by_dim_[static_cast<std::size_t>(mask_dimension(s))];
  level.erase(std::lower_bound(level.begin(), level.end(), s));
  trim();
}

void MaskComplex::trim() {
  while (!by_dim_.empty() && by_dim_.back().empty()) by_dim_.pop_back();
}

std::vector<Mask> MaskComplex::cofacets(Mask s, int vertex_count) const {
  std::vector<Mask> out;
  for (int v = 0; v < vertex_count; ++v) {
    if (!(s & bit(v)) && contains(s | bit(v))) out.push_back(s | bit(v));
  }
  return out;
}

SimplicialComplex MaskComplex::to_complex(const std::vector<Vertex>& names) const {
  std::vector<Simplex> simplices;
  for (const auto& level : by_dim_) {
    for (Mask s : level) {
      Simplex x;
      for (int v : members(s)) x.push_back(names.at(static_cast<std::size_t>(v)));
      simplices.push_back(make_simplex(x));
    }
  }
  return SimplicialComplex::from_simplices(simplices);
}

std::string mask_to_string(Mask s, const std::vector<Vertex>& names) {
  std::string out = "{";
  for (int v : members(s)) {
    if (out.size() > 1) out += ",";
    out += v < static_cast<int>(names.size()) ? names[static_cast<std::size_t>(v)] : std::to_string(v);
  }
  return out + "}";
}

// ---------------------------------------------------------------------------

OrderProfile parse_profile_json(const std::string& text) {
  using json = nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("profile is not valid JSON: ") + e.what());
  }
  try {
    OrderProfile p;
    p.n = j.at("n").get<int>();
    p.m = j.at("m").get<int>();
    if (p.n < 2) throw SchemaError("profile needs n >= 2");
    if (p.m < p.n + 1 || p.m > 64) throw SchemaError("profile needs n + 1 <= m <= 64");
    p.precision = j.value("precision", LaurentScalar::kDefaultPrecision);
    if (p.precision < 1) throw SchemaError("precision must be positive");
    p.share_below = j.value("share_below", 0L);
    const auto names = simulation_vertex_names(p.m);
    auto index_of = [&](const std::string& name) {
      auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end()) throw SchemaError("unknown vertex '" + name + "' (expected " + names.front() + ".." + names.back() + ")");
      return static_cast<int>(it - names.begin());
    };
    if (j.contains("orders")) {
      for (const auto& [name, row] : j.at("orders").items()) {
        const int v = index_of(name);
        if (!row.is_array() || static_cast<int>(row.size()) != p.n) {
          throw SchemaError("orders of '" + name + "' must list " + std::to_string(p.n) + " integers");
        }
        for (int i = 0; i < p.n; ++i) p.orders[{v, i}] = row[static_cast<std::size_t>(i)].get<long>();
      }
    }
    if (j.contains("classes")) {
      std::vector<bool> used(static_cast<std::size_t>(p.m), false);
      for (const auto& cls : j.at("classes")) {
        std::vector<int> c;
        for (const auto& name : cls) {
          const int v = index_of(name.get<std::string>());
          if (used[static_cast<std::size_t>(v)]) throw SchemaError("vertex '" + name.get<std::string>() + "' is in two classes");
          used[static_cast<std::size_t>(v)] = true;
          c.push_back(v);
        }
        if (!c.empty()) p.classes.push_back(c);
      }
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("malformed profile: ") + e.what());
  }
}

OrderProfile load_profile(const std::filesystem::path& path) { return parse_profile_json(read_text_file(path)); }

OrderProfile random_profile(int n, int m, std::mt19937_64& rng) {
  OrderProfile p;
  p.n = n;
  p.m = m;
  static constexpr long kOrders[] = {-2, -1, -1, 0, 0, 0, 1};
  std::uniform_int_distribution<int> pick(0, 6);
  std::uniform_int_distribution<int> style(0, 3);
  for (int v = 0; v < m; ++v) {
    // a quarter of the vertices stay finite in every coordinate
    const bool finite = style(rng) == 0;
    for (int i = 0; i < n; ++i) p.orders[{v, i}] = finite ? 0 : kOrders[pick(rng)];
  }
  std::vector<int> perm(static_cast<std::size_t>(m));
  for (int v = 0; v < m; ++v) perm[static_cast<std::size_t>(v)] = v;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::uniform_int_distribution<int> class_count(0, 3);
  std::uniform_int_distribution<int> class_size(2, 3);
  std::size_t next = 0;
  for (int c = class_count(rng); c > 0 && next + 2 <= perm.size(); --c) {
    const auto size = std::min<std::size_t>(static_cast<std::size_t>(class_size(rng)), perm.size() - next);
    p.classes.emplace_back(perm.begin() + static_cast<long>(next), perm.begin() + static_cast<long>(next + size));
    next += size;
  }
  std::uniform_int_distribution<long> share(-1, 2);
  p.share_below = share(rng);
  return p;
}

int compare_orders(const Order& a, const Order& b) {
  if (!a && !b) return 0;
  if (!a) return 1;
  if (!b) return -1;
  return *a < *b ? -1 : (*a > *b ? 1 : 0);
}

namespace {

Order order_of(const LaurentScalar& x) {
  if (x.is_exact_zero()) return std::nullopt;
  return x.order();  // PrecisionError for O(t^cap)
}

// One stream per (seed, vertex, coordinate): the first N coefficients do not
// depend on how many are drawn, so a retry at 2N extends the same series.
std::vector<Rational> coefficient_stream(std::uint64_t seed, int v, int i, unsigned count) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(v), static_cast<std::uint32_t>(i)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<std::int64_t> num(-(std::int64_t{1} << 31), std::int64_t{1} << 31);
  std::uniform_int_distribution<std::int64_t> den(1, std::int64_t{1} << 16);
  std::vector<Rational> out;
  out.reserve(count);
  while (out.size() < count) {
    const std::int64_t a = num(rng);
    const std::int64_t b = den(rng);
    if (a == 0) continue;
    Rational q{Integer(static_cast<long>(a)), Integer(static_cast<long>(b))};
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

PlaceSimulation simulate_at(const OrderProfile& profile, std::uint64_t seed, unsigned precision) {
  const int n = profile.n;
  const int m = profile.m;
  PlaceSimulation sim;
  sim.n = n;
  sim.m = m;
  sim.seed = seed;
  sim.precision = precision;
  sim.names = simulation_vertex_names(m);
  sim.embedding = Embedding<LaurentScalar>(n);

  std::vector<int> leader(static_cast<std::size_t>(m));
  for (int v = 0; v < m; ++v) leader[static_cast<std::size_t>(v)] = v;
  for (const auto& cls : profile.classes) {
    for (int v : cls) leader[static_cast<std::size_t>(v)] = cls.front();
  }
  auto base_order = [&](int v, int i) {
    auto it = profile.orders.find({v, i});
    return it == profile.orders.end() ? 0L : it->second;
  };

  for (int v = 0; v < m; ++v) {
    const int lead = leader[static_cast<std::size_t>(v)];
    std::vector<LaurentScalar> x;
    for (int i = 0; i < n; ++i) {
      const long low = base_order(lead, i);
      auto coeffs = coefficient_stream(seed, v, i, precision);
      if (lead != v) {
        const auto shared = coefficient_stream(seed, lead, i, precision);
        for (unsigned k = 0; k < precision && low + static_cast<long>(k) < profile.share_below; ++k) coeffs[k] = shared[k];
      }
      x.push_back(LaurentScalar::series(low, std::move(coeffs)));
    }
    sim.embedding.set(sim.names[static_cast<std::size_t>(v)], x);
  }

  const auto sz = static_cast<std::size_t>(m);
  sim.length_order.assign(sz, std::vector<Order>(sz));
  sim.first_coordinate_order.assign(sz, std::vector<Order>(sz));
  sim.max_square_order.assign(sz, std::vector<Order>(sz));
  sim.graph.assign(sz, std::vector<bool>(sz, false));
  for (std::size_t u = 0; u < sz; ++u) {
    for (std::size_t v = u + 1; v < sz; ++v) {
      const auto& xu = sim.embedding.point(sim.names[u]);
      const auto& xv = sim.embedding.point(sim.names[v]);
      LaurentScalar l(0L);
      Order square;  // min_i 2 ord(d_i)
      for (int i = 0; i < n; ++i) {
        const LaurentScalar d = xu[static_cast<std::size_t>(i)] - xv[static_cast<std::size_t>(i)];
        const Order od = order_of(d);
        if (i == 0) sim.first_coordinate_order[u][v] = sim.first_coordinate_order[v][u] = od;
        if (od && compare_orders(Order(2 * *od), square) < 0) square = 2 * *od;
        l += d * d;
      }
      const Order ol = order_of(l);
      sim.length_order[u][v] = sim.length_order[v][u] = ol;
      sim.max_square_order[u][v] = sim.max_square_order[v][u] = square;
      sim.graph[u][v] = sim.graph[v][u] = !ol || *ol >= 0;
    }
  }
  sim.k_phi = MaskComplex::clique(sim.graph);
  return sim;
}

}  // namespace

PlaceSimulation simulate_place(const OrderProfile& profile, std::uint64_t seed) {
  if (profile.n < 2) throw PreconditionError("place simulation needs n >= 2");
  if (profile.m < profile.n + 1) throw PreconditionError("place simulation needs m >= n + 1");
  if (profile.m > 64) throw ResourceError("place simulation supports at most 64 vertices");
  try {
    return simulate_at(profile, seed, profile.precision);
  } catch (const PrecisionError&) {
    return simulate_at(profile, seed, 2 * profile.precision);
  }
}

// ---------------------------------------------------------------------------

namespace {

void index_level(DimOrdering& ord, std::size_t k) {
  const auto& level = ord.levels[k];
  for (std::size_t i = 0; i < level.size(); ++i) ord.position[level[i]] = i;
}

Mask maximal_facet(const DimOrdering& ord, Mask s) {
  Mask best = 0;
  std::size_t best_pos = 0;
  for (int v : members(s)) {
    const Mask f = s & ~bit(v);
    auto it = ord.position.find(f);
    if (it == ord.position.end()) throw PreconditionError("ordering misses a facet");
    if (best == 0 || it->second < best_pos) {
      best = f;
      best_pos = it->second;
    }
  }
  return best;
}

void cache_mu(DimOrdering& ord, std::size_t k) {
  for (Mask s : ord.levels[k]) ord.mu_cache[s] = maximal_facet(ord, s);
}

}  // namespace

DimOrdering DimOrdering::from_levels(std::vector<std::vector<Mask>> levels) {
  DimOrdering ord;
  ord.levels = std::move(levels);
  for (std::size_t k = 0; k < ord.levels.size(); ++k) index_level(ord, k);
  for (std::size_t k = 1; k < ord.levels.size(); ++k) cache_mu(ord, k);
  return ord;
}

DimOrdering build_ordering(const PlaceSimulation& sim) {
  const MaskComplex& k_phi = sim.k_phi;
  DimOrdering ord;
  ord.levels.resize(static_cast<std::size_t>(k_phi.dimension() + 1));
  ord.levels[0] = k_phi.simplices(0);  // ascending index: v0 is the greatest
  index_level(ord, 0);

  for (int k = 1; k <= k_phi.dimension(); ++k) {
    auto& level = ord.levels[static_cast<std::size_t>(k)];
    if (k == 1 && sim.n % 2 == 0) {
      // group by the greater vertex u, then |x_{u,1} - x_{v,1}|_phi descending
      level = k_phi.simplices(1);
      std::sort(level.begin(), level.end(), [&](Mask a, Mask b) {
        const int ua = lowest(a), ub = lowest(b);
        if (ua != ub) return ua < ub;
        const int va = lowest(a & ~bit(ua)), vb = lowest(b & ~bit(ub));
        const int c = compare_orders(sim.first_coordinate_order[static_cast<std::size_t>(ua)][static_cast<std::size_t>(va)],
                                     sim.first_coordinate_order[static_cast<std::size_t>(ub)][static_cast<std::size_t>(vb)]);
        if (c != 0) return c < 0;
        return va < vb;
      });
    } else {
      std::map<std::size_t, std::pair<Mask, std::vector<int>>> groups;  // position of rho -> (rho, V_rho)
      for (Mask s : k_phi.simplices(k)) {
        const Mask rho = maximal_facet(ord, s);
        auto& g = groups[ord.position.at(rho)];
        g.first = rho;
        g.second.push_back(lowest(s & ~rho));
      }
      for (auto& [pos, group] : groups) {
        auto& [rho, remaining] = group;
        while (remaining.size() > 1) {
          // the pair of remaining vertices with the largest |l|_phi
          std::size_t best = 0;
          Order best_order;
          bool found = false;
          for (std::size_t a = 0; a < remaining.size(); ++a) {
            for (std::size_t b = 0; b < remaining.size(); ++b) {
              if (a == b) continue;
              const Order o = sim.length_order[static_cast<std::size_t>(remaining[a])][static_cast<std::size_t>(remaining[b])];
              if (!found || compare_orders(o, best_order) < 0) {
                found = true;
                best = a;
                best_order = o;
              }
            }
          }
          level.push_back(rho | bit(remaining[best]));
          remaining.erase(remaining.begin() + static_cast<long>(best));
        }
        level.push_back(rho | bit(remaining.front()));
      }
    }
    index_level(ord, static_cast<std::size_t>(k));
    cache_mu(ord, static_cast<std::size_t>(k));
  }
  return ord;
}

// ---------------------------------------------------------------------------

std::vector<std::string> check_condition_i(const MaskComplex& k, const DimOrdering& ord,
                                           const std::vector<Vertex>& names) {
  std::vector<std::string> out;
  for (int d = 1; d <= k.dimension(); ++d) {
    const auto& level = k.simplices(d);
    for (Mask a : level) {
      for (Mask b : level) {
        if (a != b && ord.greater(ord.mu(a), ord.mu(b)) && !ord.greater(a, b)) {
          out.push_back("(i): mu" + mask_to_string(a, names) + " > mu" + mask_to_string(b, names) + " but " +
                        mask_to_string(a, names) + " < " + mask_to_string(b, names));
        }
      }
    }
  }
  return out;
}

OrderingReport check_ordering(const PlaceSimulation& sim, const DimOrdering& ord) {
  const MaskComplex& k = sim.k_phi;
  OrderingReport r;
  for (int d = 0; d <= k.dimension(); ++d) {
    for (Mask s : k.simplices(d)) {
      if (!ord.covers(s)) r.condition_i.push_back("ordering misses " + mask_to_string(s, sim.names));
    }
  }
  if (!r.condition_i.empty()) return r;
  r.condition_i = check_condition_i(k, ord, sim.names);

  auto len = [&](int a, int b) -> Order {
    return a == b ? std::nullopt : sim.length_order[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  };
  const bool even = sim.n % 2 == 0;
  const std::string name = even ? "(ii)''" : "(ii)'";
  for (int d = even ? 1 : 0; d < k.dimension(); ++d) {
    for (Mask sigma : k.simplices(d)) {
      std::vector<int> v_sigma;
      for (Mask up : k.cofacets(sigma, sim.m)) {
        if (ord.mu(up) == sigma) v_sigma.push_back(lowest(up & ~sigma));
      }
      for (int v : v_sigma) {
        std::vector<int> below;  // V_sigma(v)
        for (int u : v_sigma) {
          if (u != v && ord.greater(sigma | bit(v), sigma | bit(u))) below.push_back(u);
        }
        if (below.empty()) continue;
        std::vector<int> pool = below;
        pool.push_back(v);
        bool witnessed = false;
        for (int u : below) {
          bool ok = true;
          for (int w1 : pool) {
            for (int w2 : pool) {
              if (w1 != w2 && compare_orders(len(w1, w2), len(u, v)) < 0) ok = false;
            }
          }
          if (ok) {
            witnessed = true;
            break;
          }
        }
        if (!witnessed) {
          r.condition_ii.push_back(name + ": no witness for sigma=" + mask_to_string(sigma, sim.names) +
                                   ", v=" + sim.names[static_cast<std::size_t>(v)]);
        }
      }
    }
  }

  if (even) {
    const auto& edges = k.simplices(1);
    for (Mask e1 : edges) {
      for (Mask e2 : edges) {
        const int u = lowest(e1);
        if (e1 == e2 || lowest(e2) != u || !ord.greater(e1, e2)) continue;
        const int v = lowest(e1 & ~bit(u));
        const int w = lowest(e2 & ~bit(u));
        const auto su = static_cast<std::size_t>(u);
        if (compare_orders(sim.first_coordinate_order[su][static_cast<std::size_t>(v)],
                           sim.first_coordinate_order[su][static_cast<std::size_t>(w)]) > 0) {
          r.condition_iii.push_back("(iii)'': " + mask_to_string(e1, sim.names) + " > " + mask_to_string(e2, sim.names) +
                                    " but |x_u1 - x_v1| < |x_u1 - x_w1|");
        }
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

CollapseTrace collapse_schedule(const MaskComplex& k, const DimOrdering& ord, int target_dim,
                                const std::vector<Vertex>& names) {
  const int m = static_cast<int>(names.size());
  for (int d = 0; d <= k.dimension(); ++d) {
    for (Mask s : k.simplices(d)) {
      if (!ord.covers(s)) throw PreconditionError("ordering misses " + mask_to_string(s, names));
    }
  }
  CollapseTrace trace;
  trace.residual = k;
  MaskComplex& l = trace.residual;
  for (int d = l.dimension(); d > target_dim && d >= 1; --d) {
    std::vector<Mask> sweep;
    for (Mask s : ord.levels[static_cast<std::size_t>(d)]) {
      if (l.contains(s)) sweep.push_back(s);
    }
    for (Mask sigma : sweep) {
      const Mask tau = ord.mu(sigma);
      const std::string pair = "(" + mask_to_string(sigma, names) + ", " + mask_to_string(tau, names) + ")";
      if (auto up = l.cofacets(sigma, m); !up.empty()) {
        throw ScheduleFailure(sigma, tau, up.front(),
                              "pair " + pair + " is not free: " + mask_to_string(up.front(), names) + " contains sigma");
      }
      if (!l.contains(tau)) throw ScheduleFailure(sigma, tau, tau, "pair " + pair + " is not free: tau already removed");
      for (Mask other : l.cofacets(tau, m)) {
        if (other != sigma) {
          throw ScheduleFailure(sigma, tau, other,
                                "pair " + pair + " is not free: " + mask_to_string(other, names) + " also contains tau");
        }
      }
      l.erase(sigma);
      l.erase(tau);
      trace.removed.emplace_back(sigma, tau);
    }
  }
  return trace;
}

std::vector<std::string> check_proposition_union(const MaskComplex& k, const DimOrdering& ord, int n,
                                                 const std::vector<Vertex>& names) {
  std::vector<std::string> out;
  for (int d = n / 2 + 1; d <= k.dimension(); ++d) {
    std::map<Mask, std::vector<Mask>> by_mu;
    for (Mask s : k.simplices(d)) by_mu[ord.mu(s)].push_back(s);
    for (const auto& [mu, group] : by_mu) {
      for (std::size_t a = 0; a < group.size(); ++a) {
        for (std::size_t b = a + 1; b < group.size(); ++b) {
          if (!k.contains(group[a] | group[b])) {
            out.push_back(mask_to_string(group[a], names) + " u " + mask_to_string(group[b], names) +
                          " not in K_phi (common mu " + mask_to_string(mu, names) + ")");
          }
        }
      }
    }
  }
  return out;
}

std::vector<std::string> check_ultrametric(const PlaceSimulation& sim) {
  std::vector<std::string> out;
  for (int u = 0; u < sim.m; ++u) {
    for (int v = u + 1; v < sim.m; ++v) {
      const auto su = static_cast<std::size_t>(u), sv = static_cast<std::size_t>(v);
      if (compare_orders(sim.length_order[su][sv], sim.max_square_order[su][sv]) < 0) {
        out.push_back("|l|_phi exceeds max |x_u - x_v|^2_phi for " + sim.names[su] + sim.names[sv]);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

bool TrialReport::ok() const {
  return ordering.ok() && !schedule_failure && residual_dimension <= n / 2 && proposition_violations.empty() &&
         ultrametric_violations.empty() && high_homology_nonzero.empty() && betti_preserved;
}

TrialReport run_trial(const OrderProfile& profile, std::uint64_t seed, bool check_homology) {
  TrialReport r;
  r.n = profile.n;
  r.m = profile.m;
  r.seed = r.used_seed = seed;
  const PlaceSimulation sim = simulate_place(profile, seed);
  r.precision = sim.precision;
  r.k_phi_dimension = sim.k_phi.dimension();
  r.k_phi_size = sim.k_phi.size();
  const DimOrdering ord = build_ordering(sim);
  r.ordering = check_ordering(sim, ord);
  r.proposition_violations = check_proposition_union(sim.k_phi, ord, sim.n, sim.names);
  r.ultrametric_violations = check_ultrametric(sim);
  std::optional<MaskComplex> residual;
  try {
    auto trace = collapse_schedule(sim.k_phi, ord, sim.n / 2, sim.names);
    r.residual_dimension = trace.residual.dimension();
    residual = std::move(trace.residual);
  } catch (const ScheduleFailure& e) {
    r.schedule_failure = e.what();
  }
  if (check_homology) {
    const SimplicialComplex kc = sim.k_phi.to_complex(sim.names);
    std::optional<SimplicialComplex> rc;
    if (residual) rc = residual->to_complex(sim.names);
    for (int k = 0; k <= r.k_phi_dimension; ++k) {
      const HomologyGroup h = homology(kc, k);
      if (2 * k > sim.n && !h.is_trivial()) r.high_homology_nonzero.push_back(k);
      if (rc) {
        const HomologyGroup hr = homology(*rc, k);
        if (hr.betti != h.betti || hr.torsion != h.torsion) r.betti_preserved = false;
      }
    }
  }
  return r;
}

TrialReport run_trial(int n, int m, std::uint64_t seed, bool check_homology) {
  std::mt19937_64 rng(seed);
  const OrderProfile profile = random_profile(n, m, rng);
  std::uint64_t used = seed;
  for (int reseeds = 0;; ++reseeds) {
    try {
      TrialReport r = run_trial(profile, used, check_homology);
      r.seed = seed;
      r.reseeds = reseeds;
      return r;
    } catch (const PrecisionError&) {
      if (reseeds == 8) throw;
      used = used * 6364136223846793005ULL + 1442695040888963407ULL;
    }
  }
}

}  // namespace bellows
