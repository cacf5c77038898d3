#pragma once
// l-facial adjacency semantics: colorings, the verifier, availability, and
// the 2-medial graph of an edge subset.

#include <map>
#include <optional>
#include <vector>

#include "lfec/embed.hpp"

namespace lfec::facial {

struct Coloring {
  int palette = 0;                    // colors are 1..palette
  std::map<EdgeId, int> assignment;   // partial map

  std::optional<int> color(EdgeId e) const {
    auto it = assignment.find(e);
    return it == assignment.end() ? std::nullopt : std::optional<int>(it->second);
  }
  void set(EdgeId e, int c) { assignment[e] = c; }
  bool is_total_on(const PlaneGraph& g) const;
};

struct Violation {
  EdgeId e;
  EdgeId f;
  FaceId face;    // least face realizing the minimal distance
  int distance;   // minimal facial distance between e and f
};

// Exhaustive violation list; empty iff phi is an l-FEC. Throws GraphError on
// a partial coloring or a color outside 1..palette.
std::vector<Violation> verify(const PlaneGraph& g, int l, const Coloring& phi);

// Same check restricted to the colored edges (partial colorings allowed).
std::vector<Violation> verify_partial(const PlaneGraph& g, int l, const Coloring& phi);

// {1..k} minus the colors on l-facial neighbors of e. Throws if e is colored.
std::vector<int> available_colors(const PlaneGraph& g, int l, const Coloring& phi,
                                  EdgeId e, int k);

// Abstract graph on an edge subset H with adjacency = l-facial neighborhood.
struct MedialSubgraph {
  std::vector<EdgeId> vertices;        // sorted
  std::vector<std::vector<int>> adj;   // indices into `vertices`

  int index_of(EdgeId e) const;
};

MedialSubgraph build_2medial(const PlaneGraph& g, const std::vector<EdgeId>& H, int l);

struct ListAssignment {
  std::vector<std::vector<int>> lists;  // parallel to MedialSubgraph::vertices
};

// Packages the extension step: uncolored edges H with their available colors.
std::pair<MedialSubgraph, ListAssignment> lists_from_partial(
    const PlaneGraph& g, int l, const Coloring& phi, const std::vector<EdgeId>& H, int k);

// Cross-check helper: reads per-vertex colors on a plane graph (the medial
// graph of another) and checks the l-facial vertex condition: vertices at
// facial distance <= l on a common walk receive distinct colors.
bool is_facial_vertex_coloring(const PlaneGraph& g, int l,
                               const std::map<VertexId, int>& colors);

}  // namespace lfec::facial
