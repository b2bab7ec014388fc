#include "bellows/simplicial/complex.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

#include "bellows/errors.hpp"

namespace bellows {

SimplicialComplex::SimplicialComplex() : by_dim_(1) { by_dim_[0].insert(Simplex{}); }

SimplicialComplex SimplicialComplex::from_simplices(const std::vector<Simplex>& simplices) {
  SimplicialComplex k;
  for (const auto& s : simplices) k.insert(s);
  return k;
}

void SimplicialComplex::insert(const Simplex& raw) {
  const Simplex s = make_simplex(raw);
  if (contains(s)) return;
  if (s.size() > 24) throw ResourceError("simplex too large to insert with all faces");
  if (by_dim_.size() < s.size() + 1) by_dim_.resize(s.size() + 1);
  const std::uint32_t full = 1u << s.size();
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    Simplex face;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (mask & (1u << i)) face.push_back(s[i]);
    }
    by_dim_[face.size()].insert(std::move(face));
  }
}

bool SimplicialComplex::contains(const Simplex& s) const {
  if (s.size() >= by_dim_.size()) return false;
  return by_dim_[s.size()].count(s) > 0;
}

std::vector<Simplex> SimplicialComplex::simplices(int k) const {
  if (k < -1 || k + 1 >= static_cast<int>(by_dim_.size())) return {};
  const auto& layer = by_dim_[static_cast<std::size_t>(k + 1)];
  return {layer.begin(), layer.end()};
}

std::size_t SimplicialComplex::count(int k) const {
  if (k < -1 || k + 1 >= static_cast<int>(by_dim_.size())) return 0;
  return by_dim_[static_cast<std::size_t>(k + 1)].size();
}

std::size_t SimplicialComplex::size() const {
  std::size_t n = 0;
  for (std::size_t i = 1; i < by_dim_.size(); ++i) n += by_dim_[i].size();
  return n;
}

std::vector<Vertex> SimplicialComplex::vertices() const {
  std::vector<Vertex> out;
  for (const auto& s : simplices(0)) out.push_back(s.front());
  return out;
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
  const auto verts = vertices();
  std::vector<Simplex> out;
  for (std::size_t d = 1; d < by_dim_.size(); ++d) {
    for (const auto& s : by_dim_[d]) {
      bool maximal = true;
      if (d + 1 < by_dim_.size()) {
        for (const auto& v : verts) {
          if (std::binary_search(s.begin(), s.end(), v)) continue;
          Simplex bigger = s;
          bigger.insert(std::lower_bound(bigger.begin(), bigger.end(), v), v);
          if (by_dim_[d + 1].count(bigger)) {
            maximal = false;
            break;
          }
        }
      }
      if (maximal) out.push_back(s);
    }
  }
  return out;
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
  for (const auto& layer : by_dim_) {
    for (const auto& s : layer) {
      if (!other.contains(s)) return false;
    }
  }
  return true;
}

SimplicialComplex support(const Chain& c) {
  SimplicialComplex k;
  for (const auto& [s, coeff] : c.terms()) k.insert(s);
  return k;
}

namespace {

Simplex drop(const Simplex& s, std::size_t i) {
  Simplex f = s;
  f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
  return f;
}

}  // namespace

PseudomanifoldReport validate_pseudomanifold(const SimplicialComplex& complex, int k) {
  PseudomanifoldReport report;
  const auto tops = complex.simplices(k);
  bool ok = !tops.empty() && k >= 1;
  for (const auto& m : complex.maximal_simplices()) {
    if (simplex_dimension(m) != k) {
      ok = false;
      report.offending.push_back(m);
    }
  }
  std::map<Simplex, std::vector<std::size_t>> cofaces;
  for (std::size_t t = 0; t < tops.size(); ++t) {
    for (std::size_t i = 0; i < tops[t].size(); ++i) cofaces[drop(tops[t], i)].push_back(t);
  }
  for (const auto& f : complex.simplices(k - 1)) {
    auto it = cofaces.find(f);
    if (it == cofaces.end() || it->second.size() != 2) {
      ok = false;
      report.offending.push_back(f);
    }
  }
  report.is_pseudomanifold = ok;

  if (!tops.empty()) {
    std::vector<bool> seen(tops.size(), false);
    std::deque<std::size_t> queue{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!queue.empty()) {
      const std::size_t t = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < tops[t].size(); ++i) {
        for (auto other : cofaces[drop(tops[t], i)]) {
          if (!seen[other]) {
            seen[other] = true;
            ++reached;
            queue.push_back(other);
          }
        }
      }
    }
    report.is_strongly_connected = reached == tops.size();
  }
  return report;
}

Chain fundamental_cycle(const SimplicialComplex& complex, const OrientedSimplex& seed) {
  const int k = seed.dimension();
  const auto report = validate_pseudomanifold(complex, k);
  if (!report.is_pseudomanifold || !report.is_strongly_connected) {
    throw PreconditionError("fundamental cycle needs a strongly connected " + std::to_string(k) + "-pseudo-manifold");
  }
  if (!complex.contains(seed.vertices)) throw PreconditionError("seed simplex is not in the complex");

  const auto tops = complex.simplices(k);
  std::map<Simplex, std::vector<std::size_t>> cofaces;
  std::map<Simplex, std::size_t> index;
  for (std::size_t t = 0; t < tops.size(); ++t) {
    index[tops[t]] = t;
    for (std::size_t i = 0; i < tops[t].size(); ++i) cofaces[drop(tops[t], i)].push_back(t);
  }
  std::vector<int> sign(tops.size(), 0);
  const std::size_t start = index.at(seed.vertices);
  sign[start] = seed.parity;
  std::deque<std::size_t> queue{start};
  while (!queue.empty()) {
    const std::size_t t = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < tops[t].size(); ++i) {
      const Simplex facet = drop(tops[t], i);
      const int induced = sign[t] * (i % 2 == 0 ? 1 : -1);
      for (auto other : cofaces[facet]) {
        if (other == t) continue;
        // Index of the vertex of `other` missing from the facet.
        std::size_t j = 0;
        while (j < facet.size() && tops[other][j] == facet[j]) ++j;
        const int required = -induced * (j % 2 == 0 ? 1 : -1);
        if (sign[other] == 0) {
          sign[other] = required;
          queue.push_back(other);
        } else if (sign[other] != required) {
          throw OrientabilityError("orientations conflict across a shared facet; the pseudo-manifold is not orientable");
        }
      }
    }
  }
  Chain z(k);
  for (std::size_t t = 0; t < tops.size(); ++t) z.add(tops[t], sign[t]);
  return z;
}

Graph::Graph(std::vector<Vertex> vertices) {
  for (auto& v : vertices) add_vertex(v);
}

void Graph::add_vertex(const Vertex& v) {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) vertices_.insert(it, v);
}

void Graph::add_edge(const Vertex& u, const Vertex& v) {
  if (u == v) throw PreconditionError("self-loops are not allowed in a simple graph");
  add_vertex(u);
  add_vertex(v);
  edges_.insert(u < v ? std::make_pair(u, v) : std::make_pair(v, u));
}

bool Graph::has_edge(const Vertex& u, const Vertex& v) const {
  return edges_.count(u < v ? std::make_pair(u, v) : std::make_pair(v, u)) > 0;
}

std::vector<Vertex> Graph::neighbors(const Vertex& v) const {
  std::vector<Vertex> out;
  for (const auto& w : vertices_) {
    if (w != v && has_edge(v, w)) out.push_back(w);
  }
  return out;
}

Graph Graph::complete(const std::vector<Vertex>& vertices) {
  Graph g(vertices);
  for (std::size_t i = 0; i < g.vertices_.size(); ++i) {
    for (std::size_t j = i + 1; j < g.vertices_.size(); ++j) g.add_edge(g.vertices_[i], g.vertices_[j]);
  }
  return g;
}

Graph Graph::skeleton(const SimplicialComplex& complex) {
  Graph g(complex.vertices());
  for (const auto& e : complex.simplices(1)) g.add_edge(e[0], e[1]);
  return g;
}

SimplicialComplex clique_complex(const Graph& g, int dimension_cap) {
  const auto& vs = g.vertices();
  const std::size_t n = vs.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) adj[i][j] = i != j && g.has_edge(vs[i], vs[j]);
  }
  SimplicialComplex out;
  // Bron-Kerbosch with pivoting; every maximal clique is inserted with its faces.
  std::function<void(std::vector<std::size_t>&, std::vector<std::size_t>, std::vector<std::size_t>)> expand =
      [&](std::vector<std::size_t>& r, std::vector<std::size_t> p, std::vector<std::size_t> x) {
        if (p.empty() && x.empty()) {
          if (static_cast<int>(r.size()) - 1 > dimension_cap) {
            throw ResourceError("clique of dimension " + std::to_string(r.size() - 1) + " exceeds the cap " +
                                std::to_string(dimension_cap));
          }
          Simplex s;
          for (auto i : r) s.push_back(vs[i]);
          out.insert(s);
          return;
        }
        std::size_t pivot = p.empty() ? x.front() : p.front();
        std::size_t best = 0;
        for (const auto* set : {&p, &x}) {
          for (auto u : *set) {
            std::size_t c = 0;
            for (auto w : p) c += adj[u][w];
            if (c >= best) {
              best = c;
              pivot = u;
            }
          }
        }
        std::vector<std::size_t> candidates;
        for (auto v : p) {
          if (!adj[pivot][v]) candidates.push_back(v);
        }
        for (auto v : candidates) {
          std::vector<std::size_t> np, nx;
          for (auto w : p) {
            if (adj[v][w]) np.push_back(w);
          }
          for (auto w : x) {
            if (adj[v][w]) nx.push_back(w);
          }
          r.push_back(v);
          expand(r, std::move(np), std::move(nx));
          r.pop_back();
          p.erase(std::find(p.begin(), p.end(), v));
          x.push_back(v);
        }
      };
  std::vector<std::size_t> r, p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  if (n) expand(r, p, {});
  return out;
}

}  // namespace bellows
