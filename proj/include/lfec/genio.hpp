#pragma once
// Graph generators, the ".pg"/".col" text formats, and the CLI.

#include <iosfwd>
#include <string>
#include <vector>

#include "lfec/embed.hpp"
#include "lfec/facial.hpp"

namespace lfec {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- generators ---------------------------------------------------------

PlaneGraph gen_cycle(int n);                 // n >= 3
PlaneGraph gen_wheel(int n);                 // n >= 3 rim vertices
PlaneGraph gen_prism(int n);                 // n >= 3
PlaneGraph gen_cube();                       // prism(4)
PlaneGraph gen_octahedron();
PlaneGraph gen_dodecahedron();

// Two vertices joined by three internally disjoint paths of lengths
// l, l, l+1. All 3l+1 edges are pairwise l-facial neighbors, so the
// l-facial chromatic index is exactly 3l+1.
PlaneGraph gen_tight_family(int l);

// K4 with the three edges at one vertex subdivided l-1 times each.
PlaneGraph gen_subdivided_k4(int l);

// Random stacked plane triangulation on n vertices followed by random
// non-bridge edge deletions; connected and simple, reproducible per seed.
PlaneGraph gen_random_planar(int n, unsigned long long seed);

// Dispatch by family name ("cycle", "wheel", "prism", "cube", "octahedron",
// "dodecahedron", "tight_family", "subdivided_k4", "random_planar").
PlaneGraph generate(const std::string& family, int n, int l, unsigned long long seed);

// --- .pg format -----------------------------------------------------------

PlaneGraph parse_pg(const std::string& text);
std::string serialize_pg(const PlaneGraph& g);

// --- .col format ------------------------------------------------------------

facial::Coloring parse_col(const std::string& text);
std::string serialize_col(const facial::Coloring& c);

// --- CLI ----------------------------------------------------------------

// Subcommands: gen, solve, verify, construct, audit, medial.
// Exit codes: 0 success, 1 domain failure, 2 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lfec
