#include <algorithm>
#include <set>

#include "doctest.h"
#include "lfec/embed.hpp"
#include "lfec/genio.hpp"
#include "oracles.hpp"

using namespace lfec;

namespace {

PlaneGraph path_graph(int n) {
  // n vertices, n-1 edges, a single face of length 2(n-1)
  std::vector<VertexId> walk;
  for (int i = 0; i < n; ++i) walk.push_back(i);
  for (int i = n - 2; i >= 1; --i) walk.push_back(i);
  return build_from_simple_faces({walk});
}

PlaneGraph k4() {
  return build_from_simple_faces({{0, 1, 3}, {1, 2, 3}, {2, 0, 3}, {2, 1, 0}});
}

PlaneGraph single_loop() {
  return build_from_rotation({{0, {0, 1}}}, {{0, 0, 1}});
}

PlaneGraph two_triangles_shared_vertex() {
  return build_from_simple_faces({{0, 1, 2}, {0, 3, 4}, {2, 1, 0, 4, 3, 0}});
}

std::multiset<int> face_lengths(const PlaneGraph& g) {
  std::multiset<int> out;
  for (const FaceWalk& w : g.faces()) out.insert((int)w.darts.size());
  return out;
}

}  // namespace

TEST_CASE("triangle embedding") {
  PlaneGraph g = gen_cycle(3);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(face_lengths(g) == std::multiset<int>{3, 3});
}

TEST_CASE("cube satisfies Euler") {
  PlaneGraph g = gen_cube();
  CHECK(g.vertex_count() == 8);
  CHECK(g.edge_count() == 12);
  CHECK(g.face_count() == 6);
  CHECK(face_lengths(g) == std::multiset<int>{4, 4, 4, 4, 4, 4});
}

TEST_CASE("single loop has two faces of length 1") {
  PlaneGraph g = single_loop();
  CHECK(g.vertex_count() == 1);
  CHECK(g.edge_count() == 1);
  CHECK(face_lengths(g) == std::multiset<int>{1, 1});
  CHECK(g.degree(0) == 2);
}

TEST_CASE("build validation errors name the offender") {
  // dart appearing in two rotations
  CHECK_THROWS_AS(build_from_rotation({{0, {0, 1}}, {1, {1}}}, {{0, 0, 1}}), GraphError);
  // fixed point in the pairing
  CHECK_THROWS_AS(build_from_rotation({{0, {0}}}, {{0, 0, 0}}), GraphError);
  // dangling dart in a rotation
  CHECK_THROWS_AS(build_from_rotation({{0, {0, 1, 5}}}, {{0, 0, 1}}), GraphError);
}

TEST_CASE("face walks are canonical and partition the darts") {
  for (const PlaneGraph& g : {gen_cycle(5), k4(), gen_prism(3)}) {
    std::set<DartId> seen;
    for (const FaceWalk& w : g.faces()) {
      CHECK(w.darts.front() == *std::min_element(w.darts.begin(), w.darts.end()));
      for (DartId d : w.darts) {
        CHECK(!seen.count(d));
        seen.insert(d);
      }
    }
    CHECK((int)seen.size() == g.dart_count());
  }
  CHECK(face_lengths(k4()) == std::multiset<int>{3, 3, 3, 3});
  CHECK(face_lengths(gen_cycle(5)) == std::multiset<int>{5, 5});
}

TEST_CASE("facial distance basics") {
  PlaneGraph c5 = gen_cycle(5);
  CHECK(facial_distance(c5, 0, 1) == 1);
  PlaneGraph c7 = gen_cycle(7);
  CHECK(facial_distance(c7, 0, 2) == 2);
  CHECK(facial_distance(c7, 0, 3) == 3);

  PlaneGraph p3 = path_graph(3);
  CHECK(p3.edge_count() == 2);
  CHECK(face_lengths(p3) == std::multiset<int>{4});
  CHECK(facial_distance(p3, 0, 1) == 1);

  CHECK_THROWS_AS(facial_distance(c5, 0, 99), GraphError);
}

TEST_CASE("facial distance agrees with the position-enumeration oracle") {
  for (const PlaneGraph& g :
       {gen_cycle(5), gen_cycle(7), k4(), gen_prism(3), gen_wheel(4), path_graph(4),
        gen_tight_family(2), two_triangles_shared_vertex(), gen_octahedron()}) {
    std::vector<EdgeId> es = g.edges();
    for (size_t i = 0; i < es.size(); ++i)
      for (size_t j = 0; j < es.size(); ++j) {
        if (i == j) continue;
        int d = facial_distance(g, es[i], es[j]);
        CHECK(d == oracles::brute_facial_distance(g, es[i], es[j]));
        CHECK(d == facial_distance(g, es[j], es[i]));
      }
  }
}

TEST_CASE("l-facial neighborhoods") {
  PlaneGraph c7 = gen_cycle(7);
  CHECK(l_facial_neighborhood(c7, 0, 2) == std::vector<EdgeId>{1, 2, 5, 6});
  PlaneGraph c3 = gen_cycle(3);
  CHECK(l_facial_neighborhood(c3, 0, 2) == std::vector<EdgeId>{1, 2});
  // In K4 the opposite edge pair shares no face, so each edge has exactly
  // four 2-facial neighbors.
  PlaneGraph g = k4();
  for (EdgeId e : g.edges()) CHECK(l_facial_neighborhood(g, e, 2).size() == 4);
}

TEST_CASE("delete vertex and edge") {
  PlaneGraph c4 = gen_cycle(4);
  PlaneGraph p3 = delete_vertex(c4, 3);
  CHECK(p3.vertex_count() == 3);
  CHECK(p3.edge_count() == 2);
  CHECK(face_lengths(p3) == std::multiset<int>{4});

  PlaneGraph c5 = gen_cycle(5);
  PlaneGraph p5 = delete_edge(c5, 0);
  CHECK(p5.vertex_count() == 5);
  CHECK(p5.edge_count() == 4);
  CHECK(face_lengths(p5) == std::multiset<int>{8});

  PlaneGraph g = k4();
  PlaneGraph diamond = delete_edge(g, 0);
  CHECK(diamond.edge_count() == 5);
  CHECK(diamond.face_count() == 3);

  CHECK_THROWS_AS(delete_edge(c5, 17), GraphError);
}

TEST_CASE("identify opposite edges of a hexagon") {
  PlaneGraph c6 = gen_cycle(6);
  // edge 5 runs v5-v0, edge 2 runs v2-v3; fold v0 onto v2 and v3 onto v5
  EdgeIdentification id = identify_edges(c6, 5, 2, {0, 2}, {5, 3});
  CHECK(id.graph.vertex_count() == 4);
  CHECK(id.graph.edge_count() == 5);
  CHECK(face_lengths(id.graph) == std::multiset<int>{2, 2, 6});
  CHECK(id.merged_edge == 2);

  // prism hexagon: identify opposite boundary edges of a 6-face
  PlaneGraph pr = gen_prism(6);
  int before = pr.edge_count();
  FaceId hexf = -1;
  for (const FaceWalk& w : pr.faces())
    if (w.darts.size() == 6) hexf = w.face;
  REQUIRE(hexf >= 0);
  std::vector<VertexId> vs = pr.face_vertices(hexf);
  std::vector<EdgeId> es = pr.face_edges(hexf);
  EdgeIdentification id2 = identify_edges(pr, es[5], es[2], {vs[0], vs[2]}, {vs[5], vs[3]});
  CHECK(id2.graph.edge_count() == before - 1);
  CHECK(id2.graph.vertex_count() == pr.vertex_count() - 2);

  // sharing an endpoint is rejected
  CHECK_THROWS_AS(identify_edges(c6, 0, 1, {0, 1}, {1, 2}), GraphError);
}

TEST_CASE("identify vertices across a face") {
  PlaneGraph c5 = gen_cycle(5);
  PlaneGraph g = identify_vertices(c5, 0, 2);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 5);
  for (EdgeId e : g.edges()) CHECK(!g.is_loop(e));

  PlaneGraph c4 = gen_cycle(4);
  PlaneGraph h = identify_vertices(c4, 0, 2);
  CHECK(h.vertex_count() == 3);
  // the pinched face splits into two 2-faces; the other 4-face persists
  CHECK(face_lengths(h) == std::multiset<int>{2, 2, 4});

  CHECK_THROWS_AS(identify_vertices(c4, 0, 1), GraphError);  // adjacent
}

TEST_CASE("contract a triangular face") {
  PlaneGraph g = k4();
  FaceId tri = g.faces().front().face;
  PlaneGraph c = contract_face(g, tri);
  CHECK(c.vertex_count() == 2);
  CHECK(c.edge_count() == 3);
  CHECK(c.face_count() == 3);

  PlaneGraph c3 = gen_cycle(3);
  PlaneGraph point = contract_face(c3, 0);
  CHECK(point.vertex_count() == 1);
  CHECK(point.edge_count() == 0);

  PlaneGraph c4 = gen_cycle(4);
  CHECK_THROWS_AS(contract_face(c4, 0), GraphError);
}

TEST_CASE("separating cycles") {
  CHECK(separating_cycles_up_to(k4(), 5).empty());
  CHECK(separating_cycles_up_to(gen_cycle(5), 5).empty());
  // every triangle of the octahedron bounds a face
  CHECK(separating_cycles_up_to(gen_octahedron(), 3).empty());

  // K4 with a vertex stacked into one face: that face's triangle separates
  PlaneGraph stacked = build_from_simple_faces(
      {{0, 1, 4}, {1, 3, 4}, {3, 0, 4}, {1, 2, 3}, {2, 0, 3}, {2, 1, 0}});
  std::vector<CycleInfo> cyc = separating_cycles_up_to(stacked, 3);
  REQUIRE(cyc.size() == 1);
  CHECK(cyc[0].vertices.size() == 3);
  CHECK(cyc[0].side_a_vertices + cyc[0].side_b_vertices == 2);
  CHECK(std::min(cyc[0].side_a_vertices, cyc[0].side_b_vertices) == 1);
}

TEST_CASE("blocks and 2-connectivity") {
  CHECK(is_2_connected(gen_cycle(5)));
  PlaneGraph tt = two_triangles_shared_vertex();
  CHECK(!is_2_connected(tt));
  CHECK(blocks(tt).size() == 2);
  CHECK(cutvertices(tt) == std::vector<VertexId>{0});
  PlaneGraph p4 = path_graph(4);
  CHECK(blocks(p4).size() == 3);
  CHECK(!is_2_connected(p4));
}

TEST_CASE("medial graphs") {
  PlaneGraph m5 = medial_graph(gen_cycle(5));
  CHECK(m5.vertex_count() == 5);
  CHECK(m5.edge_count() == 10);
  for (VertexId v : m5.vertices()) CHECK(m5.degree(v) == 4);
  CHECK(face_lengths(m5) == std::multiset<int>{2, 2, 2, 2, 2, 5, 5});

  PlaneGraph mk4 = medial_graph(k4());
  CHECK(mk4.vertex_count() == 6);
  CHECK(mk4.edge_count() == 12);
  CHECK(mk4.face_count() == 8);
  CHECK(face_lengths(mk4) == std::multiset<int>{3, 3, 3, 3, 3, 3, 3, 3});
  for (VertexId v : mk4.vertices()) CHECK(mk4.degree(v) == 4);

  // bridges become loops at the medial vertex
  PlaneGraph mp2 = medial_graph(path_graph(2));
  CHECK(mp2.vertex_count() == 1);
  CHECK(mp2.edge_count() == 2);

  CHECK_THROWS_AS(medial_graph(build_from_rotation({{0, {}}}, {})), GraphError);
}

TEST_CASE("surgery monotonicity and dart conservation") {
  PlaneGraph pr = gen_prism(6);
  FaceId hexf = pr.faces().front().face;
  for (const FaceWalk& w : pr.faces())
    if (w.darts.size() == 6) hexf = w.face;
  std::vector<VertexId> vs = pr.face_vertices(hexf);
  std::vector<EdgeId> es = pr.face_edges(hexf);
  EdgeIdentification id = identify_edges(pr, es[5], es[2], {vs[0], vs[2]}, {vs[5], vs[3]});
  CHECK(id.graph.edge_count() == pr.edge_count() - 1);
  CHECK(id.graph.vertex_count() == pr.vertex_count() - 2);
  // twin stays a fixed-point-free involution over surviving darts
  const EmbeddingData& raw = id.graph.raw();
  for (DartId d = 0; d < (int)raw.twin.size(); ++d)
    if (raw.dart_alive(d)) {
      CHECK(raw.twin[d] != d);
      CHECK(raw.twin[raw.twin[d]] == d);
    }
}

TEST_CASE("edge subgraph and components") {
  PlaneGraph tt = two_triangles_shared_vertex();
  PlaneGraph sub = edge_subgraph(tt, {0, 1, 2});
  CHECK(sub.edge_count() == 3);
  CHECK(sub.vertex_count() == 3);
  CHECK(connected_components(tt).size() == 1);

  PlaneGraph g = delete_vertex(tt, 0);
  CHECK(connected_components(g).size() == 2);
}
