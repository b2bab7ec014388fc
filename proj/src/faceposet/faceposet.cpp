#include "bellows/faceposet/faceposet.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <json.hpp>

#include "bellows/geometry/scalar.hpp"
#include "bellows/geometry/volume.hpp"
#include "bellows/homology/homology.hpp"
#include "bellows/simplicial/io.hpp"

namespace bellows {

namespace {

int sign_of(const IncidenceSigns& signs, const FaceId& f, const FaceId& g) {
  const auto it = signs.find({f, g});
  return it == signs.end() ? 0 : it->second;
}

/// Calls fn on every k-subset of {0, ..., n-1}.
template <class Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Chain boundary_target(const IncidenceSigns& signs, const Face& f, const std::map<FaceId, Chain>& chains) {
  Chain rhs(f.dim - 1);
  for (const auto& g : f.covers) {
    if (const int e = sign_of(signs, f.id, g); e != 0) rhs += Integer(e) * chains.at(g);
  }
  return rhs;
}

/// The k-skeleton of the full simplex on `vertices`; acyclic in degree k - 1,
/// which is all a filling of a (k-1)-cycle needs.
SimplicialComplex skeleton(const std::vector<Vertex>& vertices, int k) {
  constexpr std::size_t kMaxSimplices = 1500;
  std::vector<Simplex> top;
  for_each_subset(vertices.size(), static_cast<std::size_t>(k + 1), [&](const std::vector<std::size_t>& idx) {
    if (top.size() >= kMaxSimplices) {
      throw ResourceError("filling complex for a face on " + std::to_string(vertices.size()) +
                          " vertices is too large for the Smith rule; use a cone rule");
    }
    Simplex s;
    for (auto i : idx) s.push_back(vertices[i]);
    top.push_back(std::move(s));
  });
  return SimplicialComplex::from_simplices(top);
}

template <class S>
void flatness(const FacePoset& poset, const Embedding<S>& e) {
  const int n = poset.dimension();
  if (e.dim != n) throw DimensionError("embedding dimension differs from the poset dimension");
  for (const auto& v : poset.vertices()) {
    if (!e.contains(v)) throw PreconditionError("embedding misses vertex '" + v + "'");
  }
  for (const auto& f : poset.faces()) {
    const auto k = static_cast<std::size_t>(f.dim);
    if (f.dim == 0 || f.dim >= n || f.vertices.size() <= k + 1) continue;
    const auto& x0 = e.point(f.vertices.front());
    std::vector<std::vector<S>> diff;  // one column per vertex
    double scale = 0;
    for (std::size_t j = 1; j < f.vertices.size(); ++j) {
      std::vector<S> col;
      const auto& x = e.point(f.vertices[j]);
      for (int i = 0; i < n; ++i) {
        col.push_back(x[static_cast<std::size_t>(i)] - x0[static_cast<std::size_t>(i)]);
        scale = std::max(scale, ScalarTraits<S>::magnitude(col.back()));
      }
      diff.push_back(std::move(col));
    }
    const double tol = kFloatTolerance * std::pow(std::max(scale, 1e-300), static_cast<double>(k + 1));
    for_each_subset(static_cast<std::size_t>(n), k + 1, [&](const std::vector<std::size_t>& rows) {
      for_each_subset(diff.size(), k + 1, [&](const std::vector<std::size_t>& cols) {
        Grid<S> m(k + 1, std::vector<S>(k + 1));
        for (std::size_t r = 0; r <= k; ++r) {
          for (std::size_t c = 0; c <= k; ++c) m[r][c] = diff[cols[c]][rows[r]];
        }
        const S d = scalar_det(m);
        if (!ScalarTraits<S>::is_zero(d, tol)) {
          throw FacePlanarityError(f.id, "a " + std::to_string(k + 1) + "-minor equals " + ScalarTraits<S>::str(d));
        }
      });
    });
  }
}

template <class S>
S volume_of(const FacePoset& poset, const GeneralizedTriangulation& t, const Embedding<S>& e) {
  flatness(poset, e);
  return chain_normalized_volume(e, t.at(poset.top().id));
}

}  // namespace

// ---------------------------------------------------------------------------

FacePoset::FacePoset(std::vector<Face> faces) : faces_(std::move(faces)) {
  if (faces_.empty()) throw SchemaError("face poset is empty");
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    auto& f = faces_[i];
    if (f.dim < 0) throw SchemaError("face '" + f.id + "' has negative dimension");
    if (!index_.emplace(f.id, i).second) throw SchemaError("duplicate face id '" + f.id + "'");
    dim_ = std::max(dim_, f.dim);
  }
  std::set<FaceId> covered;
  for (auto& f : faces_) {
    if (f.dim == 0) {
      if (!f.covers.empty()) throw SchemaError("vertex '" + f.id + "' cannot cover anything");
      if (!f.vertices.empty() && f.vertices != std::vector<Vertex>{f.id}) {
        throw SchemaError("vertex '" + f.id + "' must list only itself");
      }
      f.vertices = {f.id};
      continue;
    }
    if (f.covers.empty()) throw SchemaError("face '" + f.id + "' covers nothing");
    std::sort(f.covers.begin(), f.covers.end());
    if (std::adjacent_find(f.covers.begin(), f.covers.end()) != f.covers.end()) {
      throw SchemaError("face '" + f.id + "' lists a covered face twice");
    }
    for (const auto& g : f.covers) {
      if (!contains(g)) throw SchemaError("face '" + f.id + "' covers unknown face '" + g + "'");
      if (face(g).dim != f.dim - 1) {
        throw SchemaError("face '" + f.id + "' of dimension " + std::to_string(f.dim) + " covers '" + g +
                          "' of dimension " + std::to_string(face(g).dim));
      }
      covered.insert(g);
    }
  }
  // vertex sets bottom up
  for (int k = 1; k <= dim_; ++k) {
    for (auto& f : faces_) {
      if (f.dim != k) continue;
      std::set<Vertex> vs;
      for (const auto& g : f.covers) vs.insert(face(g).vertices.begin(), face(g).vertices.end());
      std::vector<Vertex> union_(vs.begin(), vs.end());
      if (!f.vertices.empty()) {
        std::sort(f.vertices.begin(), f.vertices.end());
        if (f.vertices != union_) throw SchemaError("vertex set of face '" + f.id + "' differs from its boundary");
      }
      f.vertices = std::move(union_);
      if (static_cast<int>(f.vertices.size()) < k + 1) {
        throw SchemaError("face '" + f.id + "' has too few vertices for dimension " + std::to_string(k));
      }
    }
  }
  std::vector<std::size_t> maximal;
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    if (!covered.count(faces_[i].id)) maximal.push_back(i);
  }
  if (maximal.size() != 1) throw SchemaError("face poset needs a unique maximal element");
  top_ = maximal.front();
  if (faces_[top_].dim != dim_) throw SchemaError("maximal face does not have the top dimension");
}

const Face& FacePoset::face(const FaceId& id) const {
  const auto it = index_.find(id);
  if (it == index_.end()) throw PreconditionError("unknown face '" + id + "'");
  return faces_[it->second];
}

std::vector<FaceId> FacePoset::faces_of_dimension(int k) const {
  std::vector<FaceId> out;
  for (const auto& f : faces_) {
    if (f.dim == k) out.push_back(f.id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool FacePoset::covers(const FaceId& f, const FaceId& g) const {
  const auto& c = face(f).covers;
  return std::binary_search(c.begin(), c.end(), g);
}

bool FacePoset::has_triangular_2faces() const {
  return std::all_of(faces_.begin(), faces_.end(), [](const Face& f) { return f.dim != 2 || f.vertices.size() == 3; });
}

// ---------------------------------------------------------------------------

IncidenceReport validate_incidence(const FacePoset& poset, const IncidenceSigns& signs) {
  IncidenceReport r;
  for (const auto& [key, e] : signs) {
    const auto& [f, g] = key;
    if (!poset.contains(f) || !poset.contains(g)) {
      r.violations.push_back("sign on unknown pair (" + f + "," + g + ")");
    } else if (!poset.covers(f, g)) {
      r.violations.push_back("sign on (" + f + "," + g + ") which is not a covering pair");
    } else if (e != 1 && e != -1) {
      r.violations.push_back("sign on (" + f + "," + g + ") is " + std::to_string(e));
    }
  }
  for (const auto& f : poset.faces()) {
    for (const auto& g : f.covers) {
      if (sign_of(signs, f.id, g) == 0) r.violations.push_back("missing sign on (" + f.id + "," + g + ")");
    }
    if (f.dim == 1) {
      int total = 0;
      for (const auto& v : f.covers) total += sign_of(signs, f.id, v);
      if (total != 0 || f.covers.size() != 2) r.violations.push_back("edge " + f.id + " is not oriented from one vertex to another");
    }
    if (f.dim < 2) continue;
    std::map<FaceId, int> sums;
    for (const auto& g : f.covers) {
      for (const auto& h : poset.face(g).covers) sums[h] += sign_of(signs, f.id, g) * sign_of(signs, g, h);
    }
    for (const auto& [h, s] : sums) {
      if (s != 0) r.violations.push_back("(" + f.id + "," + h + "): sum of eps products is " + std::to_string(s));
    }
  }
  return r;
}

IncidenceSigns flip_orientation(const FacePoset& poset, const IncidenceSigns& signs, const FaceId& g) {
  if (poset.face(g).dim == 0) throw PreconditionError("vertices are always positively oriented");
  if (g == poset.top().id) throw PreconditionError("flipping the maximal face changes the oriented type");
  IncidenceSigns out = signs;
  for (auto& [key, e] : out) {
    if (key.first == g || key.second == g) e = -e;
  }
  return out;
}

// ---------------------------------------------------------------------------

GeneralizedTriangulation build_generalized_triangulation(const FacePoset& poset, const IncidenceSigns& signs,
                                                         FillRule rule) {
  if (const auto r = validate_incidence(poset, signs); !r.ok()) {
    throw PreconditionError("incidence signs do not validate: " + r.violations.front());
  }
  GeneralizedTriangulation t;
  for (int k = 0; k <= poset.dimension(); ++k) {
    for (const auto& id : poset.faces_of_dimension(k)) {
      const Face& f = poset.face(id);
      if (k == 0) {
        t.chains.emplace(id, Chain::single(Simplex{id}));
        continue;
      }
      const Chain rhs = boundary_target(signs, f, t.chains);
      Chain y(k);
      switch (rule) {
        case FillRule::smith:
          y = fill_boundary(rhs, skeleton(f.vertices, k));
          break;
        case FillRule::cone_first:
          y = cone(f.vertices.front(), rhs);
          break;
        case FillRule::cone_second:
          y = cone(f.vertices[1], rhs);
          break;
        case FillRule::cone_last:
          y = cone(f.vertices.back(), rhs);
          break;
      }
      if (boundary(y) != rhs) {
        throw InternalConsistencyError("chain for face '" + id + "' misses its boundary relation");
      }
      t.chains.emplace(id, std::move(y));
    }
  }
  return t;
}

std::vector<FaceId> check_triangulation(const FacePoset& poset, const IncidenceSigns& signs,
                                        const GeneralizedTriangulation& t) {
  std::vector<FaceId> bad;
  for (const auto& f : poset.faces()) {
    const auto it = t.chains.find(f.id);
    if (it == t.chains.end() || it->second.dimension() != f.dim) {
      bad.push_back(f.id);
      continue;
    }
    const auto vs = it->second.vertices();
    const bool inside = std::includes(f.vertices.begin(), f.vertices.end(), vs.begin(), vs.end());
    bool relation = false;
    if (f.dim == 0) {
      relation = it->second == Chain::single(Simplex{f.id});
    } else {
      bool complete = true;
      for (const auto& g : f.covers) complete = complete && t.chains.count(g);
      relation = complete && boundary(it->second) == boundary_target(signs, f, t.chains);
    }
    if (!inside || !relation) bad.push_back(f.id);
  }
  return bad;
}

void check_flatness(const FacePoset& poset, const Embedding<Rational>& e) { flatness(poset, e); }
void check_flatness(const FacePoset& poset, const Embedding<double>& e) { flatness(poset, e); }

Rational volume_ns(const FacePoset& poset, const GeneralizedTriangulation& t, const Embedding<Rational>& e) {
  return volume_of(poset, t, e);
}

double volume_ns(const FacePoset& poset, const GeneralizedTriangulation& t, const Embedding<double>& e) {
  return volume_of(poset, t, e);
}

Rational triangulation_invariance(const FacePoset& poset, const GeneralizedTriangulation& t1,
                                  const GeneralizedTriangulation& t2, const Embedding<Rational>& e) {
  return volume_ns(poset, t1, e) - volume_ns(poset, t2, e);
}

// ---------------------------------------------------------------------------

PosetData parse_poset_json(const std::string& text) {
  using json = nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("poset file is not valid JSON: ") + e.what());
  }
  PosetData out;
  try {
    if (!j.is_object() || !j.contains("faces")) throw SchemaError("poset file needs a 'faces' array");
    std::vector<Face> faces;
    std::set<FaceId> ids;
    std::set<Vertex> mentioned;
    std::vector<std::pair<FaceId, std::vector<Vertex>>> edge_orders;
    for (const auto& jf : j.at("faces")) {
      Face f;
      f.id = jf.at("id").get<std::string>();
      f.dim = jf.at("dim").get<int>();
      if (jf.contains("vertices")) f.vertices = jf.at("vertices").get<std::vector<Vertex>>();
      if (jf.contains("covers")) f.covers = jf.at("covers").get<std::vector<FaceId>>();
      if (f.dim == 1 && f.covers.empty()) {
        if (f.vertices.size() != 2) throw SchemaError("edge '" + f.id + "' needs two vertices or explicit covers");
        f.covers = f.vertices;
      }
      if (f.dim == 1 && f.vertices.size() == 2) edge_orders.emplace_back(f.id, f.vertices);
      if (f.dim > 0) mentioned.insert(f.vertices.begin(), f.vertices.end());
      if (f.dim == 1) mentioned.insert(f.covers.begin(), f.covers.end());
      ids.insert(f.id);
      faces.push_back(std::move(f));
    }
    for (const auto& v : mentioned) {
      if (!ids.count(v)) faces.push_back(Face{v, 0, {v}, {}});
    }
    out.poset = FacePoset(std::move(faces));
    if (j.contains("signs")) {
      for (const auto& [key, value] : j.at("signs").items()) {
        const auto bar = key.find('|');
        if (bar == std::string::npos) throw SchemaError("sign key '" + key + "' must look like \"F|G\"");
        out.signs[{key.substr(0, bar), key.substr(bar + 1)}] = value.get<int>();
      }
    }
    for (const auto& [e, vs] : edge_orders) {
      out.signs.try_emplace({e, vs[0]}, -1);
      out.signs.try_emplace({e, vs[1]}, 1);
    }
  } catch (const json::exception& e) {
    throw SchemaError(std::string("malformed poset file: ") + e.what());
  }
  return out;
}

PosetData load_poset(const std::filesystem::path& path) { return parse_poset_json(read_text_file(path)); }

std::string poset_to_json(const PosetData& data) {
  using json = nlohmann::ordered_json;
  json faces = json::array();
  for (int k = 0; k <= data.poset.dimension(); ++k) {
    for (const auto& id : data.poset.faces_of_dimension(k)) {
      const Face& f = data.poset.face(id);
      json jf{{"id", f.id}, {"dim", f.dim}, {"vertices", f.vertices}};
      if (!f.covers.empty()) jf["covers"] = f.covers;
      faces.push_back(jf);
    }
  }
  json signs = json::object();
  for (const auto& [key, e] : data.signs) signs[key.first + "|" + key.second] = e;
  json j;
  j["faces"] = faces;
  j["signs"] = signs;
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------

PosetData cube_poset(int n) {
  if (n < 1 || n > 10) throw PreconditionError("cube dimension must be in 1..10");
  std::vector<Face> faces;
  IncidenceSigns signs;
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::string id(static_cast<std::size_t>(n), '0');
    std::size_t c = code;
    for (int i = 0; i < n; ++i, c /= 3) id[static_cast<std::size_t>(i)] = "01*"[c % 3];
    Face f{id, static_cast<int>(std::count(id.begin(), id.end(), '*')), {}, {}};
    // d = sum_r (-1)^r (face with star r set to 1 - face with star r set to 0)
    int r = 0;
    for (std::size_t i = 0; i < id.size(); ++i) {
      if (id[i] != '*') continue;
      for (char bit : {'0', '1'}) {
        std::string g = id;
        g[i] = bit;
        f.covers.push_back(g);
        signs[{id, g}] = (r % 2 == 0 ? 1 : -1) * (bit == '1' ? 1 : -1);
      }
      ++r;
    }
    if (f.dim == 0) f.vertices = {id};
    faces.push_back(std::move(f));
  }
  return {FacePoset(std::move(faces)), signs};
}

Embedding<Rational> unit_cube(int n) {
  Embedding<Rational> e(n);
  for (unsigned long bits = 0; bits < (1UL << n); ++bits) {
    std::string id(static_cast<std::size_t>(n), '0');
    std::vector<Rational> x(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      if (bits >> i & 1UL) {
        id[static_cast<std::size_t>(i)] = '1';
        x[static_cast<std::size_t>(i)] = 1;
      }
    }
    e.set(id, x);
  }
  return e;
}

namespace {

Vertex cross_vertex(int axis, bool negative) {
  return std::string(1, static_cast<char>('a' + axis)) + (negative ? "2" : "1");
}

FaceId simplex_id(const std::vector<Vertex>& ordered) {
  FaceId id;
  for (const auto& v : ordered) id += (id.empty() ? "" : ",") + v;
  return id;
}

/// Faces of the simplex on `ordered` (proper and improper), oriented by the
/// induced vertex order; the top face gets `top_id`.
void add_simplex_faces(const std::vector<Vertex>& ordered, std::map<FaceId, Face>& faces, IncidenceSigns& signs,
                       const FaceId& top_id = {}) {
  const std::size_t m = ordered.size();
  for (unsigned long bits = 1; bits < (1UL << m); ++bits) {
    std::vector<Vertex> sub;
    for (std::size_t i = 0; i < m; ++i) {
      if (bits >> i & 1UL) sub.push_back(ordered[i]);
    }
    const bool is_top = bits == (1UL << m) - 1 && !top_id.empty();
    const FaceId id = is_top ? top_id : simplex_id(sub);
    if (faces.count(id)) continue;
    Face f{id, static_cast<int>(sub.size()) - 1, sub.size() == 1 ? sub : std::vector<Vertex>{}, {}};
    if (sub.size() > 1) {
      for (std::size_t r = 0; r < sub.size(); ++r) {
        std::vector<Vertex> g = sub;
        g.erase(g.begin() + static_cast<long>(r));
        const FaceId gid = simplex_id(g);
        f.covers.push_back(gid);
        signs[{id, gid}] = r % 2 == 0 ? 1 : -1;
      }
    }
    faces.emplace(id, std::move(f));
  }
}

}  // namespace

PosetData cross_polytope_poset(int n) {
  if (n < 2 || n > 8) throw PreconditionError("cross-polytope dimension must be in 2..8");
  std::map<FaceId, Face> faces;
  IncidenceSigns signs;
  Face top{"Q", n, {}, {}};
  for (unsigned long neg = 0; neg < (1UL << n); ++neg) {
    std::vector<Vertex> facet;
    int parity = 1;
    for (int i = 0; i < n; ++i) {
      const bool negative = neg >> i & 1UL;
      facet.push_back(cross_vertex(i, negative));
      parity *= negative ? -1 : 1;
    }
    add_simplex_faces(facet, faces, signs);
    const FaceId fid = simplex_id(facet);
    top.covers.push_back(fid);
    signs[{"Q", fid}] = parity;
  }
  std::vector<Face> list;
  for (auto& [id, f] : faces) list.push_back(std::move(f));
  list.push_back(std::move(top));
  return {FacePoset(std::move(list)), signs};
}

Embedding<Rational> standard_cross_polytope(int n) {
  Embedding<Rational> e(n);
  for (int i = 0; i < n; ++i) {
    for (bool negative : {false, true}) {
      std::vector<Rational> x(static_cast<std::size_t>(n));
      x[static_cast<std::size_t>(i)] = negative ? -1 : 1;
      e.set(cross_vertex(i, negative), x);
    }
  }
  return e;
}

PosetData simplex_poset(const std::vector<Vertex>& vertices) {
  if (vertices.size() < 2) throw PreconditionError("a simplex poset needs at least two vertices");
  make_simplex(vertices);  // rejects repeats
  std::map<FaceId, Face> faces;
  IncidenceSigns signs;
  add_simplex_faces(vertices, faces, signs, "Q");
  std::vector<Face> list;
  for (auto& [id, f] : faces) list.push_back(std::move(f));
  return {FacePoset(std::move(list)), signs};
}

}  // namespace bellows
