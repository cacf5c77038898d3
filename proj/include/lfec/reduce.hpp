#pragma once
// Reducible-configuration engine: detect a configuration, apply its surgery,
// recursively color the smaller graph, and extend the coloring back -
// a constructive reading of the induction behind the 7-color theorem.

#include <optional>
#include <string>
#include <vector>

#include "lfec/embed.hpp"
#include "lfec/facial.hpp"

namespace lfec::reduce {

// Kinds in detection order; each configuration's surgery assumes all earlier
// kinds are absent, so detect honors this order exactly.
enum class ConfigKind {
  Cutvertex,
  DegreeLE1,
  AdjacentTwoVertices,
  FaceLE3,
  SeparatingCycleLE5,
  SixFace,
  SmallFaceWithTwoVertex,  // variant = face length (4, 5 or 7)
  TwoVerticesClose,        // variant = facial distance (2 or 3)
  EightFaceTwoTwoVertices,
  AdjacentFourFaces,
  FourFiveLowDegree,
  FiveFiveLowDegree,
  FourFaceAllThrees,
};
const char* kind_name(ConfigKind k);

struct Configuration {
  ConfigKind kind;
  int variant = 0;
  std::vector<VertexId> vertices;  // witness, in the configuration's labeling order
  std::vector<EdgeId> edges;
  std::vector<FaceId> faces;
};

// First configuration in kind order with a canonical (least-id) witness;
// nullopt only if no kind matches.
std::optional<Configuration> detect(const PlaneGraph& g);

// Re-evaluates the witness predicate; used as a self-check on every emitted
// configuration.
bool recheck(const PlaneGraph& g, const Configuration& c);

struct ReductionStep {
  Configuration config;
  PlaneGraph reduced;
  // Identified edge pairs old -> surviving; all other surviving edges map to
  // themselves. Colors are transported through this map only.
  std::vector<std::pair<EdgeId, EdgeId>> edge_map;
  std::vector<EdgeId> to_color;  // old edge ids colored fresh during extension

  // Split kinds (Cutvertex, SeparatingCycleLE5): two parts instead of one
  // reduced graph; shared_edges are the cycle edges present in both parts.
  bool is_split = false;
  PlaneGraph part2;
  std::vector<EdgeId> shared_edges;
};

// Applies the configuration's surgery. Side conditions the surgery assumes
// (distinct endpoints, non-2-facial identified pairs) are re-verified here;
// a violation throws GraphError naming the failed precondition, which
// signals a detect-ordering bug rather than bad input.
ReductionStep apply(const PlaneGraph& g, const Configuration& c);

struct ExtensionFailedError : std::runtime_error {
  explicit ExtensionFailedError(const std::string& what_, std::string instance_pg)
      : std::runtime_error(what_), instance(std::move(instance_pg)) {}
  std::string instance;  // offending graph, .pg text
};

// Transports phi_reduced through the id map, applies the configuration's bespoke
// recolor moves where needed, and solves the residual list coloring exactly.
facial::Coloring extend(const PlaneGraph& g, const ReductionStep& step,
                        const facial::Coloring& phi_reduced);

// Merge for the split kinds: finds a color permutation of phi2 making the
// union a valid coloring of g (at most 7! candidates).
facial::Coloring extend_split(const PlaneGraph& g, const ReductionStep& step,
                              const facial::Coloring& phi1, const facial::Coloring& phi2);

struct TraceStep {
  int index;
  Configuration config;
  int vertices;
  int edges;
};

struct ConstructResult {
  facial::Coloring coloring;  // verified 2-FEC with <= 7 colors
  std::vector<TraceStep> trace;
  int detect_gaps = 0;  // detect() == nullopt above the base case (exact fallback)
};

// Constructive 7-coloring of a connected plane multigraph. Graphs with at
// most 12 edges go straight to the exact solver.
ConstructResult construct_7_coloring(const PlaneGraph& g);

std::string render_trace(const std::vector<TraceStep>& trace);

}  // namespace lfec::reduce
