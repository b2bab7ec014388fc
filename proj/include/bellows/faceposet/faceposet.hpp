#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "bellows/errors.hpp"
#include "bellows/geometry/embedding.hpp"
#include "bellows/simplicial/chain.hpp"

namespace bellows {

using FaceId = std::string;

struct Face {
  FaceId id;
  int dim = 0;
  std::vector<Vertex> vertices;  // V_F, sorted
  std::vector<FaceId> covers;    // faces of dimension dim - 1 in the boundary
};

/// Graded face poset with a unique maximal element. Vertices are the faces of
/// dimension 0 and carry their own name as id.
class FacePoset {
 public:
  /// Checks the grading, the vertex sets (V_F is the union over the covered
  /// faces) and the unique maximal element. Throws SchemaError.
  explicit FacePoset(std::vector<Face> faces);
  FacePoset() = default;

  int dimension() const { return dim_; }
  const Face& face(const FaceId& id) const;
  bool contains(const FaceId& id) const { return index_.count(id) > 0; }
  const Face& top() const { return faces_.at(top_); }
  const std::vector<Face>& faces() const { return faces_; }
  std::vector<FaceId> faces_of_dimension(int k) const;
  std::vector<Vertex> vertices() const { return faces_of_dimension(0); }
  bool covers(const FaceId& f, const FaceId& g) const;
  /// Every 2-face has exactly three vertices.
  bool has_triangular_2faces() const;

 private:
  std::vector<Face> faces_;
  std::map<FaceId, std::size_t> index_;
  std::size_t top_ = 0;
  int dim_ = 0;
};

/// epsilon_{F,G} keyed by (F, G); absent pairs are 0.
using IncidenceSigns = std::map<std::pair<FaceId, FaceId>, int>;

struct IncidenceReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Signs are +-1 exactly on covering pairs, sum_G eps_{F,G} eps_{G,H} = 0
/// whenever dim F = dim H + 2, and each edge has one +1 and one -1 vertex.
IncidenceReport validate_incidence(const FacePoset& poset, const IncidenceSigns& signs);

/// Reverses the orientation of g: negates eps_{F,g} and eps_{g,H}.
IncidenceSigns flip_orientation(const FacePoset& poset, const IncidenceSigns& signs, const FaceId& g);

struct GeneralizedTriangulation {
  std::map<FaceId, Chain> chains;  // Y_F in C_{dim F}(Delta^{V_F})
  const Chain& at(const FaceId& id) const { return chains.at(id); }
};

/// How Y_F is chosen once the right-hand side of its boundary relation is known.
enum class FillRule {
  smith,       // integral solution in the skeleton of Delta^{V_F} via the Smith form;
               // ResourceError beyond 1500 top simplices
  cone_first,  // cone from the first vertex of V_F
  cone_second, // cone from the second vertex of V_F
  cone_last,   // cone from the last vertex of V_F
};

/// Builds Y_F by induction on dim F. Throws PreconditionError when the signs
/// do not validate and InternalConsistencyError if a built chain misses its
/// boundary relation.
GeneralizedTriangulation build_generalized_triangulation(const FacePoset& poset, const IncidenceSigns& signs,
                                                         FillRule rule = FillRule::smith);

/// Faces whose boundary relation dY_F = sum_G eps_{F,G} Y_G fails, or whose
/// chain leaves Delta^{V_F}.
std::vector<FaceId> check_triangulation(const FacePoset& poset, const IncidenceSigns& signs,
                                        const GeneralizedTriangulation& t);

/// All (k+1)-minors of the differences x_v - x_{v_0}, v in V_F, vanish for
/// each proper face F of dimension k: exactly over Q, within 1e-9 relative to
/// the face scale in floating point. Throws FacePlanarityError naming F.
void check_flatness(const FacePoset& poset, const Embedding<Rational>& e);
void check_flatness(const FacePoset& poset, const Embedding<double>& e);

/// W_{Y_Q} = 2^floor(n/2) n! V_{Y_Q} in the embedding after the flatness check.
Rational volume_ns(const FacePoset& poset, const GeneralizedTriangulation& t, const Embedding<Rational>& e);
double volume_ns(const FacePoset& poset, const GeneralizedTriangulation& t, const Embedding<double>& e);

/// W_{T1} - W_{T2}; zero for rational embeddings.
Rational triangulation_invariance(const FacePoset& poset, const GeneralizedTriangulation& t1,
                                  const GeneralizedTriangulation& t2, const Embedding<Rational>& e);

struct PosetData {
  FacePoset poset;
  IncidenceSigns signs;
};

/// {"faces":[{"id":"F1","dim":2,"vertices":[..],"covers":[..]}], "signs":{"F1|e1":1}}.
/// Vertex faces may be omitted. Edge-to-vertex signs default to -1 on the
/// first listed vertex and +1 on the second.
PosetData parse_poset_json(const std::string& text);
PosetData load_poset(const std::filesystem::path& path);
std::string poset_to_json(const PosetData& data);

/// Cube [0,1]^n: vertices are 0/1 strings, faces 0/1/* strings, cubical signs.
PosetData cube_poset(int n);
Embedding<Rational> unit_cube(int n);

/// Cross-polytope: vertex "a1" is +e_1, "a2" is -e_1, "b1" is +e_2, ...
PosetData cross_polytope_poset(int n);
Embedding<Rational> standard_cross_polytope(int n);

/// The n-simplex on the given vertices, faces oriented by vertex order.
PosetData simplex_poset(const std::vector<Vertex>& vertices);

}  // namespace bellows
