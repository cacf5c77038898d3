#pragma once
// Exact l-facial edge chromatic index by branch and bound over the full
// l-medial graph; the ground-truth oracle for the rest of the toolkit.

#include <cstdint>

#include "lfec/facial.hpp"

namespace lfec::exact {

enum class Status { Colorable, NotColorable, Unknown };

struct Options {
  long long node_budget = 200'000'000;  // Unknown when exhausted
  bool symmetry_breaking = true;        // greedy clique precoloring + first-use order
  int jobs = 1;                         // parallelism for min_colors across k
};

struct KResult {
  Status status = Status::Unknown;
  facial::Coloring witness;  // verified l-FEC when Colorable
  long long nodes = 0;
};

KResult is_k_colorable(const PlaneGraph& g, int l, int k, const Options& opt = {});

struct SolveReport {
  Status status = Status::Unknown;  // NotColorable means chi > kmax
  int chi = 0;                      // valid when status == Colorable
  int kmax = 0;
  facial::Coloring witness;
  long long nodes = 0;
  double seconds = 0.0;
};

// Least k <= kmax admitting an l-FEC; status NotColorable reports chi > kmax.
// kmax < 0 selects the default 3l+3.
SolveReport min_colors(const PlaneGraph& g, int l, int kmax = -1, const Options& opt = {});

}  // namespace lfec::exact
