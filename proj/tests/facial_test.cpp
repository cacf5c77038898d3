#include <random>

#include "doctest.h"
#include "lfec/facial.hpp"
#include "lfec/genio.hpp"
#include "oracles.hpp"

using namespace lfec;
using facial::Coloring;

namespace {

Coloring make(int k, std::initializer_list<std::pair<EdgeId, int>> cs) {
  Coloring c;
  c.palette = k;
  for (auto [e, col] : cs) c.set(e, col);
  return c;
}

}  // namespace

TEST_CASE("verify accepts and rejects on the triangle") {
  PlaneGraph c3 = gen_cycle(3);
  CHECK(facial::verify(c3, 2, make(3, {{0, 1}, {1, 2}, {2, 3}})).empty());
  std::vector<facial::Violation> bad = facial::verify(c3, 2, make(3, {{0, 1}, {1, 1}, {2, 2}}));
  REQUIRE(bad.size() == 1);
  CHECK(bad[0].e == 0);
  CHECK(bad[0].f == 1);
  CHECK(bad[0].distance == 1);
}

TEST_CASE("verify on C7 with l=2") {
  PlaneGraph c7 = gen_cycle(7);
  CHECK(facial::verify(c7, 2, make(4, {{0, 1}, {1, 2}, {2, 3}, {3, 1}, {4, 2}, {5, 3}, {6, 4}}))
            .empty());
  // partial colorings are rejected by verify but allowed by verify_partial
  Coloring partial = make(4, {{0, 1}, {1, 2}});
  CHECK_THROWS_AS(facial::verify(c7, 2, partial), GraphError);
  CHECK(facial::verify_partial(c7, 2, partial).empty());
}

TEST_CASE("violations are exhaustive") {
  PlaneGraph c5 = gen_cycle(5);
  Coloring all_same = make(5, {{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}});
  CHECK(facial::verify(c5, 2, all_same).size() == 10);  // every pair conflicts
}

TEST_CASE("available colors") {
  PlaneGraph c7 = gen_cycle(7);
  Coloring empty;
  empty.palette = 7;
  CHECK(facial::available_colors(c7, 2, empty, 0, 7) ==
        std::vector<int>{1, 2, 3, 4, 5, 6, 7});
  Coloring some = make(7, {{1, 1}, {2, 2}, {5, 3}, {6, 4}});
  CHECK(facial::available_colors(c7, 2, some, 0, 7) == std::vector<int>{5, 6, 7});
  CHECK_THROWS_AS(facial::available_colors(c7, 2, some, 1, 7), GraphError);
}

TEST_CASE("2-medial graphs of edge subsets") {
  PlaneGraph c7 = gen_cycle(7);
  facial::MedialSubgraph m = facial::build_2medial(c7, c7.edges(), 2);
  for (const auto& nb : m.adj) CHECK(nb.size() == 4);  // circulant C7(1,2)

  facial::MedialSubgraph single = facial::build_2medial(c7, {3}, 2);
  CHECK(single.vertices.size() == 1);
  CHECK(single.adj[0].empty());

  CHECK_THROWS_AS(facial::build_2medial(c7, {42}, 2), GraphError);
}

TEST_CASE("verify equals properness on the full 2-medial graph") {
  std::mt19937_64 rng(11);
  for (const PlaneGraph& g : {gen_cycle(6), gen_wheel(4), gen_tight_family(2),
                              gen_subdivided_k4(2), gen_random_planar(7, 5)}) {
    facial::MedialSubgraph m = facial::build_2medial(g, g.edges(), 2);
    for (int trial = 0; trial < 50; ++trial) {
      Coloring phi;
      phi.palette = 7;
      for (EdgeId e : g.edges()) phi.set(e, 1 + (int)(rng() % 7));
      bool ok = facial::verify(g, 2, phi).empty();
      bool proper = true;
      for (size_t i = 0; i < m.vertices.size(); ++i)
        for (int j : m.adj[i])
          if (*phi.color(m.vertices[i]) == *phi.color(m.vertices[j])) proper = false;
      CHECK(ok == proper);
    }
  }
}

TEST_CASE("lists from a partial coloring") {
  PlaneGraph c7 = gen_cycle(7);
  Coloring some = make(7, {{1, 1}, {2, 2}, {5, 3}, {6, 4}});
  auto [m, lists] = facial::lists_from_partial(c7, 2, some, {0, 3, 4}, 7);
  CHECK(m.vertices == std::vector<EdgeId>{0, 3, 4});
  CHECK(lists.lists[m.index_of(0)] == std::vector<int>{5, 6, 7});
}

TEST_CASE("available colors never grow as the coloring is extended") {
  std::mt19937_64 rng(31);
  for (const PlaneGraph& g : {gen_cycle(7), gen_cube(), gen_random_planar(7, 9)}) {
    std::vector<EdgeId> es = g.edges();
    for (int trial = 0; trial < 30; ++trial) {
      Coloring phi;
      phi.palette = 7;
      std::vector<EdgeId> order = es;
      std::shuffle(order.begin(), order.end(), rng);
      std::map<EdgeId, std::vector<int>> before;
      for (EdgeId e : es) before[e] = facial::available_colors(g, 2, phi, e, 7);
      for (size_t k = 0; k + 1 < order.size(); ++k) {
        std::vector<int> avail = facial::available_colors(g, 2, phi, order[k], 7);
        if (avail.empty()) break;
        phi.set(order[k], avail[(size_t)(rng() % avail.size())]);
        for (size_t j = k + 1; j < order.size(); ++j) {
          std::vector<int> now = facial::available_colors(g, 2, phi, order[j], 7);
          CHECK(std::includes(before[order[j]].begin(), before[order[j]].end(), now.begin(),
                              now.end()));
          before[order[j]] = now;
        }
      }
    }
  }
}

TEST_CASE("medial correspondence: exact at l=1, one-directional at l=2") {
  std::mt19937_64 rng(23);
  for (const PlaneGraph& g : {gen_cycle(5), gen_wheel(4), gen_cube(), gen_tight_family(2),
                              gen_subdivided_k4(2), gen_random_planar(7, 3)}) {
    PlaneGraph mg = medial_graph(g);
    int maxdeg = 0;
    for (VertexId v : g.vertices()) maxdeg = std::max(maxdeg, g.degree(v));
    for (int trial = 0; trial < 60; ++trial) {
      Coloring phi;
      phi.palette = 7;
      for (EdgeId e : g.edges()) phi.set(e, 1 + (int)(rng() % 7));
      std::map<VertexId, int> as_vertex_colors(phi.assignment.begin(), phi.assignment.end());

      bool edge_ok_1 = facial::verify(g, 1, phi).empty();
      bool medial_ok_1 = facial::is_facial_vertex_coloring(mg, 1, as_vertex_colors);
      CHECK(edge_ok_1 == medial_ok_1);

      bool edge_ok_2 = facial::verify(g, 2, phi).empty();
      bool medial_ok_2 = facial::is_facial_vertex_coloring(mg, 2, as_vertex_colors);
      if (medial_ok_2) CHECK(edge_ok_2);      // always: M(G)-valid implies G-valid
      if (maxdeg <= 3) CHECK(edge_ok_2 == medial_ok_2);  // exact on subcubic graphs
    }
  }
}

TEST_CASE("medial correspondence gap witness: W4 at l=2") {
  // Opposite spokes of W4 share no face of G but sit at distance 2 on the
  // hub face of M(G); equal colors there are fine in G, not in M(G).
  PlaneGraph g = gen_wheel(4);  // rim edges then spokes; spokes join hub 4
  std::vector<EdgeId> spokes;
  for (EdgeId e : g.edges()) {
    auto [u, v] = g.edge_endpoints(e);
    if (u == 4 || v == 4) spokes.push_back(e);
  }
  REQUIRE(spokes.size() == 4);
  CHECK(facial_distance(g, spokes[0], spokes[2]) == kInfiniteDistance);

  Coloring phi;
  phi.palette = 10;
  int next = 3;
  for (EdgeId e : g.edges()) phi.set(e, next++);
  phi.set(spokes[0], 1);
  phi.set(spokes[2], 1);
  CHECK(facial::verify(g, 2, phi).empty());
  std::map<VertexId, int> cols(phi.assignment.begin(), phi.assignment.end());
  CHECK(!facial::is_facial_vertex_coloring(medial_graph(g), 2, cols));
}
