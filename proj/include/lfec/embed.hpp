#pragma once
// Dart-based combinatorial embeddings of plane multigraphs.
//
// A dart is one directed side of an edge. twin swaps the two darts of an
// edge and sigma steps to the next dart in the fixed cyclic order around
// the dart's tail vertex. Faces are the orbits of phi = sigma . twin: for
// a dart d running u -> v, phi(d) leaves v at the corner just after the
// arrival side of d, so phi-orbits trace boundary walks. Loops and parallel
// edges are representable; a loop contributes two darts at one vertex.
//
// Ids (darts, vertices, edges) stay stable across surgeries; deleted ids
// simply become dead. Face ids are recomputed per graph, ordered by least
// dart on the walk. Every constructor and surgery validates that twin is a
// fixed-point-free involution, sigma a permutation, and that each dart
// component satisfies Euler's formula |V| - |E| + |F| = 2.

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lfec {

using DartId = int;
using VertexId = int;
using EdgeId = int;
using FaceId = int;

inline constexpr int kInfiniteDistance = std::numeric_limits<int>::max();

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FaceWalk {
  FaceId face = -1;
  std::vector<DartId> darts;  // cyclic, listed from the least dart id
};

// Raw tables of an embedding. Index = dart id; -1 marks dead slots.
struct EmbeddingData {
  std::vector<DartId> twin;
  std::vector<DartId> sigma;
  std::vector<VertexId> vertex_of;
  std::vector<EdgeId> edge_of;
  std::vector<bool> vertex_alive;  // indexed by vertex id
  std::vector<bool> edge_alive;    // indexed by edge id

  bool dart_alive(DartId d) const {
    return d >= 0 && d < (int)twin.size() && twin[d] >= 0;
  }
};

struct RotationSpec {
  VertexId vertex;
  std::vector<DartId> darts;  // cyclic order; may be empty (isolated vertex)
};

struct EdgeSpec {
  EdgeId edge;
  DartId a;
  DartId b;
};

class PlaneGraph {
 public:
  PlaneGraph() = default;
  explicit PlaneGraph(EmbeddingData data);  // validates, computes faces

  // --- element enumeration (alive ids, ascending) ---
  std::vector<DartId> darts() const;
  std::vector<VertexId> vertices() const;
  std::vector<EdgeId> edges() const;
  const std::vector<FaceWalk>& faces() const { return faces_; }

  int vertex_count() const { return n_vertices_; }
  int edge_count() const { return n_edges_; }
  int dart_count() const { return n_darts_; }
  int face_count() const { return (int)faces_.size(); }

  bool has_vertex(VertexId v) const {
    return v >= 0 && v < (int)data_.vertex_alive.size() && data_.vertex_alive[v];
  }
  bool has_edge(EdgeId e) const {
    return e >= 0 && e < (int)data_.edge_alive.size() && data_.edge_alive[e];
  }
  bool has_dart(DartId d) const { return data_.dart_alive(d); }

  // --- basic maps ---
  DartId twin(DartId d) const { return data_.twin[d]; }
  DartId sigma(DartId d) const { return data_.sigma[d]; }
  DartId phi(DartId d) const { return data_.sigma[data_.twin[d]]; }
  VertexId vertex_of(DartId d) const { return data_.vertex_of[d]; }
  EdgeId edge_of(DartId d) const { return data_.edge_of[d]; }
  VertexId head_of(DartId d) const { return data_.vertex_of[data_.twin[d]]; }
  FaceId face_of(DartId d) const { return face_of_[d]; }

  // Rotation (cyclic dart order) at v, from the least incident dart. Empty
  // for isolated vertices. Degree counts loops twice.
  std::vector<DartId> rotation(VertexId v) const;
  int degree(VertexId v) const;

  std::pair<DartId, DartId> edge_darts(EdgeId e) const;
  std::pair<VertexId, VertexId> edge_endpoints(EdgeId e) const;
  bool is_loop(EdgeId e) const;

  const FaceWalk& walk(FaceId f) const { return faces_[f]; }
  int face_length(FaceId f) const { return (int)faces_[f].darts.size(); }

  // Edge ids appearing on the walk of f (with repetition).
  std::vector<EdgeId> face_edges(FaceId f) const;
  // Vertex ids in walk order (tails of the walk darts).
  std::vector<VertexId> face_vertices(FaceId f) const;

  bool is_connected() const;  // over darts; isolated vertices ignored

  const EmbeddingData& raw() const { return data_; }

 private:
  EmbeddingData data_;
  std::vector<FaceId> face_of_;
  std::vector<FaceWalk> faces_;
  int n_vertices_ = 0;
  int n_edges_ = 0;
  int n_darts_ = 0;

  void validate_and_finalize();
};

// --- constructors -----------------------------------------------------------

// Build from explicit per-vertex rotations and a dart pairing. Errors name
// the offending dart: malformed involution, dangling dart, duplicate dart.
PlaneGraph build_from_rotation(const std::vector<RotationSpec>& rotations,
                               const std::vector<EdgeSpec>& edges);

// Build from an oriented face list: each face is a cyclic sequence of
// (tail vertex, edge id); every edge must appear in exactly two face slots,
// once per direction. Convenient for the fixed polyhedra and test patches.
struct FaceSpecEntry {
  VertexId from;
  VertexId to;
  EdgeId edge;
};
PlaneGraph build_from_faces(const std::vector<std::vector<FaceSpecEntry>>& faces);

// Same, for simple graphs: faces given as vertex cycles, edge ids assigned
// by first appearance.
PlaneGraph build_from_simple_faces(const std::vector<std::vector<VertexId>>& faces);

// --- facial metrics ---------------------------------------------------------

// Minimum over all faces and occurrence pairs of the cyclic step distance
// between e and f on the walk (consecutive = 1); kInfiniteDistance when no
// walk contains both. Walks may traverse a bridge twice; all occurrence
// pairs count.
int facial_distance(const PlaneGraph& g, EdgeId e, EdgeId f);

// { f != e : facial_distance(e, f) <= l }, ascending.
std::vector<EdgeId> l_facial_neighborhood(const PlaneGraph& g, EdgeId e, int l);

// Minimum cyclic walk distance between occurrences of vertices u and v on a
// common face, or kInfiniteDistance. Used by the medial cross-check and the
// 2-vertex configurations.
int vertex_facial_distance(const PlaneGraph& g, VertexId u, VertexId v);

// --- surgeries (pure; each returns a new validated graph) -------------------

PlaneGraph delete_edge(const PlaneGraph& g, EdgeId e);
PlaneGraph delete_vertex(const PlaneGraph& g, VertexId v);

// Identify edges e and f across a common face. The orientation maps e's
// endpoints onto f's endpoints and must match the face walk as in the
// hexagon surgery: with a the dart of e and b the dart of f on the shared
// walk, head(a) merges with tail(b) and tail(a) with head(b). The merged
// edge and merged vertices keep f's ids; |V| drops by 2 and |E| by 1.
struct EdgeIdentification {
  PlaneGraph graph;
  EdgeId merged_edge;                          // == f
  std::vector<std::pair<EdgeId, EdgeId>> edge_map;  // {e -> f}; others identity
};
EdgeIdentification identify_edges(const PlaneGraph& g, EdgeId e, EdgeId f,
                                  std::pair<VertexId, VertexId> end_map1,
                                  std::pair<VertexId, VertexId> end_map2,
                                  FaceId through = -1);

// Identify non-adjacent co-facial vertices u and v; rotations are spliced at
// their first corners on the shared face (the least common face unless
// `through` picks one). The merged vertex keeps u's id.
PlaneGraph identify_vertices(const PlaneGraph& g, VertexId u, VertexId v,
                             FaceId through = -1);

// Remove the boundary edges of a 3-face with distinct vertices and merge its
// three vertices into one (keeping the least id).
PlaneGraph contract_face(const PlaneGraph& g, FaceId f);

// --- cycles and connectivity -------------------------------------------------

struct CycleInfo {
  std::vector<EdgeId> edges;      // sorted
  std::vector<VertexId> vertices; // cycle order
  int side_a_vertices = 0;        // vertices strictly on either side
  int side_b_vertices = 0;
};

// All cycles of length <= max_len (loops count as 1-cycles, parallel pairs as
// 2-cycles) with at least one vertex strictly on each side, each reported
// once, sorted by edge set.
std::vector<CycleInfo> separating_cycles_up_to(const PlaneGraph& g, int max_len);

// Partition of the non-cycle edges by side of a cycle, given as a closed
// dart walk (head of each dart = tail of the next).
struct CycleSides {
  std::vector<EdgeId> side_a;
  std::vector<EdgeId> side_b;
};
CycleSides cycle_side_edges(const PlaneGraph& g, const std::vector<DartId>& cycle);

// The dart walk of a cycle given by vertices in cycle order and the edges
// joining consecutive ones.
std::vector<DartId> cycle_darts(const PlaneGraph& g, const std::vector<VertexId>& vertices,
                                const std::vector<EdgeId>& edges);

std::vector<VertexId> cutvertices(const PlaneGraph& g);
std::vector<std::vector<EdgeId>> blocks(const PlaneGraph& g);
bool is_2_connected(const PlaneGraph& g);

// Edge sets of the dart-connected components, each sorted.
std::vector<std::vector<EdgeId>> connected_components(const PlaneGraph& g);

// Embedded subgraph keeping exactly the given edges (ids preserved) and any
// endpoint of a kept edge.
PlaneGraph edge_subgraph(const PlaneGraph& g, const std::vector<EdgeId>& keep);

// --- medial -----------------------------------------------------------------

// Medial graph: one vertex per edge of g (same id), one edge per facial
// corner at which two edges are consecutive. Bridges yield loops (both
// corners on one face). Requires a connected graph with at least one edge.
PlaneGraph medial_graph(const PlaneGraph& g);

}  // namespace lfec
