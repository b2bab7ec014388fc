#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bellows/errors.hpp"
#include "bellows/geometry/embedding.hpp"

namespace bellows {

inline constexpr double kRankGap = 1e-8;
inline constexpr double kEdgeTolerance = 1e-10;
inline constexpr double kVolumeTolerance = 1e-9;
inline constexpr double kDiagonalCertificate = 1e-6;

using Edge = std::pair<Vertex, Vertex>;

struct RigidityReport {
  int rank = 0;
  int kernel_dimension = 0;
  int trivial_dimension = 0;  // n(n+1)/2
  int internal_dof = 0;
  std::vector<double> singular_values;
};

struct RigidityMatrix {
  Eigen::MatrixXd matrix;        // one row per edge of supp(Z)
  std::vector<Edge> edges;
  std::vector<Vertex> vertices;  // column block order
  RigidityReport report;
};

/// Jacobian of the squared-edge-length map at P. Rank by singular values
/// above rank_gap times the largest one.
RigidityMatrix rigidity_matrix(const Polyhedron<double>& p, double rank_gap = kRankGap);

/// Columns spanning the infinitesimal translations and rotations at e,
/// in the vertex order given.
Eigen::MatrixXd trivial_motions(const Embedding<double>& e, const std::vector<Vertex>& vertices);

/// Two pairs of opposite vertices a1/a2, b1/b2, c1/c2 swapped by the
/// half-turn about the z axis. Target squared lengths, one per symmetric edge
/// class (a1b1, a1b2, a1c1, a1c2, b1c1, b1c2), default to those of the
/// starting points stretched by `stretch`.
struct BricardParams {
  std::optional<std::array<std::array<double, 3>, 3>> start;  // a1, b1, c1; seeded when absent
  std::optional<std::array<double, 6>> targets;
  double stretch = 0.01;
  std::uint64_t seed = 1;
};

/// Line-symmetric (type 1) octahedron solved by Newton on the symmetric
/// coordinates so that its edges meet the targets to 1e-12 relative.
/// Throws ConstructionError on a vertex on the axis, coincident vertices, or
/// Newton failure.
Polyhedron<double> bricard_type1(const BricardParams& params = {});

/// Octahedral cycle on a1, a2, b1, b2, c1, c2 with faces {a_i, b_j, c_k}.
Chain octahedral_cycle();

struct FlexSample {
  double t = 0;
  Embedding<double> embedding;
};

struct FlexFamily {
  Chain cycle;
  int dim = 0;
  std::map<Edge, double> targets;  // squared edge lengths
  std::vector<FlexSample> samples;
  bool complete = true;
  std::string stop_reason;  // why tracing ended early
};

struct TraceOptions {
  int steps = 200;
  double step_size = 5e-3;
  double newton_tolerance = 1e-13;  // relative edge residual
  int newton_iterations = 30;
  double rank_gap = kRankGap;
};

/// Predictor-corrector continuation along the internal kernel direction of
/// the rigidity matrix, each sample projected back onto the edge-length
/// constraints by Gauss-Newton. Throws PreconditionError when P0 has no
/// internal degree of freedom. Stops early, with complete = false, when the
/// degree of freedom is lost or the corrector fails.
FlexFamily trace_flex(const Polyhedron<double>& p0, const TraceOptions& options = {});

enum class Verdict { pass, fail, withheld };
std::string verdict_name(Verdict v);

struct BellowsReport {
  double max_edge_deviation = 0;  // relative
  double volume_spread = 0;       // max |V(t) - V(0)|
  double volume_tolerance = 0;    // kVolumeTolerance * scale^n
  double scale = 0;
  double diagonal_variation = 0;  // max over non-edges of (max - min) squared length
  double origin_disagreement = 0; // max |V_0 - V_O| over samples
  std::vector<double> volumes;
  Verdict verdict = Verdict::withheld;
  std::string reason;
};

/// The edge gate is checked first (else WITHHELD), then the diagonal
/// certificate (else WITHHELD), then the volume spread decides PASS or FAIL.
BellowsReport verify_bellows(const FlexFamily& family, double edge_tolerance = kEdgeTolerance,
                             double volume_tolerance = kVolumeTolerance);

/// Relative deviations |l - target| / target per edge above `tolerance`.
std::vector<std::string> edge_gate(const FlexFamily& family, double tolerance = kEdgeTolerance);

/// Rejection of a family whose own samples miss its target lengths.
class EdgeGateError : public PreconditionError {
 public:
  EdgeGateError(std::vector<std::string> diagnostics);
  const std::vector<std::string>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<std::string> diagnostics_;
};

/// {"dim":3, "cycle":{...} or "cycle_file":"...", "targets":{"u,v":"l"},
///  "samples":[{"t":0.0,"coords":{"u":["x","y","z"],...}}, ...]}.
/// Relative cycle files resolve against `base`. Samples are re-gated.
FlexFamily parse_flex_json(const std::string& text, const std::filesystem::path& base = {},
                           double edge_tolerance = kEdgeTolerance);
FlexFamily load_flex(const std::filesystem::path& path, double edge_tolerance = kEdgeTolerance);
std::string flex_to_json(const FlexFamily& family);

/// OBJ text for one sample: "v" lines, then "f" faces (n = 3) or "l" segments
/// (n = 2), oriented by the sign of each coefficient.
std::string sample_to_obj(const FlexFamily& family, std::size_t sample);

/// Planar quadrilateral (1-cycle) with unit square coordinates.
Polyhedron<double> planar_square();

}  // namespace bellows
