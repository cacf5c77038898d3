#pragma once
// List-coloring engine behind the degree-choosability theorem: free-vertex
// core reduction, Gallai-tree recognition, and an exact L-coloring solver.

#include <optional>
#include <vector>

#include "lfec/facial.hpp"

namespace lfec::listcolor {

struct ListGraph {
  std::vector<std::vector<int>> adj;    // simple graph, 0..n-1
  std::vector<std::vector<int>> lists;  // allowed colors per vertex

  int size() const { return (int)adj.size(); }
};

ListGraph from_medial(const facial::MedialSubgraph& m, const facial::ListAssignment& la);

struct CoreResult {
  ListGraph core;                 // induced on `kept`, reindexed
  std::vector<int> kept;          // original vertex ids of the core
  std::vector<int> removed_order; // free vertices in removal order (lowest id first)
};

// Repeatedly removes any free vertex (|L(v)| > current degree) until none
// remains; the result may be the null graph.
CoreResult core(const ListGraph& g);

// True iff every block of the (connected) graph is a complete graph or an
// odd cycle. Throws on disconnected input.
bool is_gallai_tree(const std::vector<std::vector<int>>& adj);

// Degree-choosability hypothesis: |L(v)| >= d(v) everywhere and either some
// vertex is free or the graph is not a Gallai tree. Connected input.
bool theorem_applies(const ListGraph& g);

// Exact solver: proper coloring with c(v) in L(v), or nullopt. Core
// reduction first, then backtracking choosing the smallest remaining list.
std::optional<std::vector<int>> l_color(const ListGraph& g);

}  // namespace lfec::listcolor
