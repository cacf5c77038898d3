#include <set>

#include "doctest.h"
#include "lfec/exact.hpp"
#include "lfec/genio.hpp"
#include "lfec/reduce.hpp"

using namespace lfec;
using reduce::ConfigKind;

namespace {

PlaneGraph two_triangles_shared_vertex() {
  return build_from_simple_faces({{0, 1, 2}, {0, 3, 4}, {2, 1, 0, 4, 3, 0}});
}

PlaneGraph path_graph(int n) {
  std::vector<VertexId> walk;
  for (int i = 0; i < n; ++i) walk.push_back(i);
  for (int i = n - 2; i >= 1; --i) walk.push_back(i);
  return build_from_simple_faces({walk});
}

void check_construction(const PlaneGraph& g) {
  reduce::ConstructResult res = reduce::construct_7_coloring(g);
  CHECK(facial::verify(g, 2, res.coloring).empty());
  CHECK(res.coloring.palette <= 7);
  for (auto& [e, c] : res.coloring.assignment) {
    CHECK(c >= 1);
    CHECK(c <= 7);
  }
  CHECK(res.detect_gaps == 0);
}

}  // namespace

TEST_CASE("detect respects the configuration order") {
  CHECK(reduce::detect(two_triangles_shared_vertex())->kind == ConfigKind::Cutvertex);
  CHECK(reduce::detect(path_graph(4))->kind == ConfigKind::Cutvertex);
  CHECK(reduce::detect(path_graph(2))->kind == ConfigKind::DegreeLE1);
  CHECK(reduce::detect(gen_cycle(5))->kind == ConfigKind::AdjacentTwoVertices);
  CHECK(reduce::detect(gen_subdivided_k4(1))->kind == ConfigKind::FaceLE3);
  CHECK(reduce::detect(gen_prism(6))->kind == ConfigKind::SixFace);
  // adjacent 4-faces precede the all-threes kind, so the cube hits them first
  CHECK(reduce::detect(gen_cube())->kind == ConfigKind::AdjacentFourFaces);
  CHECK(reduce::detect(gen_dodecahedron())->kind == ConfigKind::FiveFiveLowDegree);
  CHECK(reduce::detect(gen_prism(5))->kind == ConfigKind::AdjacentFourFaces);

  // a stacked vertex inside a K4 face leaves a separating triangle after the
  // earlier kinds are ruled out? no: 3-faces exist, FaceLE3 wins
  PlaneGraph stacked = build_from_simple_faces(
      {{0, 1, 4}, {1, 3, 4}, {3, 0, 4}, {1, 2, 3}, {2, 0, 3}, {2, 1, 0}});
  CHECK(reduce::detect(stacked)->kind == ConfigKind::FaceLE3);
}

TEST_CASE("every detected configuration passes recheck") {
  std::vector<PlaneGraph> corpus = {gen_cycle(6), gen_cube(), gen_dodecahedron(),
                                    gen_prism(6), gen_wheel(7), gen_tight_family(2)};
  for (unsigned long long seed = 1; seed <= 20; ++seed)
    corpus.push_back(gen_random_planar(8, seed));
  for (const PlaneGraph& g : corpus) {
    auto c = reduce::detect(g);
    REQUIRE(c.has_value());
    CHECK(reduce::recheck(g, *c));
  }
}

TEST_CASE("apply shrinks the graph for every non-split kind") {
  std::vector<PlaneGraph> corpus = {gen_cycle(6), gen_prism(6), gen_dodecahedron(),
                                    gen_subdivided_k4(2), gen_wheel(7)};
  for (unsigned long long seed = 1; seed <= 20; ++seed)
    corpus.push_back(gen_random_planar(9, seed));
  for (const PlaneGraph& g : corpus) {
    auto c = reduce::detect(g);
    REQUIRE(c.has_value());
    reduce::ReductionStep step = reduce::apply(g, *c);
    if (step.is_split) {
      CHECK(step.reduced.vertex_count() + step.reduced.edge_count() <
            g.vertex_count() + g.edge_count());
      CHECK(step.part2.vertex_count() + step.part2.edge_count() <
            g.vertex_count() + g.edge_count());
    } else {
      CHECK(step.reduced.vertex_count() + step.reduced.edge_count() <
            g.vertex_count() + g.edge_count());
      // to_color and the surviving mapped edges cover E(G)
      std::set<EdgeId> covered(step.to_color.begin(), step.to_color.end());
      std::map<EdgeId, EdgeId> remap(step.edge_map.begin(), step.edge_map.end());
      for (EdgeId e : g.edges()) {
        EdgeId target = remap.count(e) ? remap.at(e) : e;
        if (!covered.count(e)) CHECK(step.reduced.has_edge(target));
      }
    }
  }
}

TEST_CASE("six-face surgery and extension on the hexagonal prism") {
  PlaneGraph g = gen_prism(6);
  auto c = reduce::detect(g);
  REQUIRE(c->kind == ConfigKind::SixFace);
  reduce::ReductionStep step = reduce::apply(g, *c);
  CHECK(step.reduced.edge_count() == g.edge_count() - 1);
  CHECK(step.reduced.vertex_count() == g.vertex_count() - 2);
  CHECK(step.to_color.size() == 4);
  REQUIRE(step.edge_map.size() == 1);

  // residual lists have at least 2 colors each and form a 4-cycle
  facial::Coloring phi_reduced =
      exact::is_k_colorable(step.reduced, 2, 7).witness;
  std::map<EdgeId, EdgeId> remap(step.edge_map.begin(), step.edge_map.end());
  facial::Coloring partial;
  partial.palette = 7;
  std::set<EdgeId> fresh(step.to_color.begin(), step.to_color.end());
  for (EdgeId e : g.edges()) {
    if (fresh.count(e)) continue;
    EdgeId t = remap.count(e) ? remap.at(e) : e;
    partial.set(e, *phi_reduced.color(t));
  }
  auto [medial, lists] = facial::lists_from_partial(g, 2, partial, step.to_color, 7);
  for (const auto& lst : lists.lists) CHECK(lst.size() >= 2);
  for (const auto& nb : medial.adj) CHECK(nb.size() == 2);  // a 4-cycle

  facial::Coloring phi = reduce::extend(g, step, phi_reduced);
  CHECK(facial::verify(g, 2, phi).empty());
}

TEST_CASE("adjacent four-faces extension leaves at most 6 forbidden colors") {
  PlaneGraph g = gen_cube();
  auto c = reduce::detect(g);
  REQUIRE(c->kind == ConfigKind::AdjacentFourFaces);
  reduce::ReductionStep step = reduce::apply(g, *c);
  CHECK(step.to_color.size() == 1);
  facial::Coloring phi_reduced = exact::is_k_colorable(step.reduced, 2, 7).witness;
  facial::Coloring partial;
  partial.palette = 7;
  for (EdgeId e : g.edges())
    if (e != step.to_color[0]) partial.set(e, *phi_reduced.color(e));
  CHECK(facial::available_colors(g, 2, partial, step.to_color[0], 7).size() >= 1);
  facial::Coloring phi = reduce::extend(g, step, phi_reduced);
  CHECK(facial::verify(g, 2, phi).empty());
}

TEST_CASE("four-face-all-threes surgery applied directly on the cube") {
  PlaneGraph g = gen_cube();
  // hand the configuration to apply() even though detect() picks an earlier kind
  FaceId f = g.faces().front().face;
  reduce::Configuration c{ConfigKind::FourFaceAllThrees, 0, g.face_vertices(f),
                          g.face_edges(f), {f}};
  REQUIRE(reduce::recheck(g, c));
  reduce::ReductionStep step = reduce::apply(g, c);
  CHECK(step.reduced.vertex_count() == 4);
  CHECK(step.reduced.edge_count() == 4);  // the opposite face's cycle
  CHECK(step.to_color.size() == 8);
  facial::Coloring phi_reduced = exact::is_k_colorable(step.reduced, 2, 7).witness;
  facial::Coloring phi = reduce::extend(g, step, phi_reduced);
  CHECK(facial::verify(g, 2, phi).empty());
}

TEST_CASE("cutvertex split and merge") {
  PlaneGraph g = two_triangles_shared_vertex();
  auto c = reduce::detect(g);
  REQUIRE(c->kind == ConfigKind::Cutvertex);
  reduce::ReductionStep step = reduce::apply(g, *c);
  REQUIRE(step.is_split);
  CHECK(step.reduced.edge_count() == 3);
  CHECK(step.part2.edge_count() == 3);
  facial::Coloring phi1 = exact::is_k_colorable(step.reduced, 2, 7).witness;
  facial::Coloring phi2 = exact::is_k_colorable(step.part2, 2, 7).witness;
  facial::Coloring phi = reduce::extend_split(g, step, phi1, phi2);
  CHECK(facial::verify(g, 2, phi).empty());
}

TEST_CASE("construct on the named corpus") {
  check_construction(gen_cycle(3));
  check_construction(gen_cycle(7));
  check_construction(gen_cycle(12));
  check_construction(gen_cube());
  check_construction(gen_octahedron());
  check_construction(gen_dodecahedron());
  check_construction(gen_prism(6));
  check_construction(gen_prism(8));
  check_construction(gen_wheel(5));
  check_construction(gen_wheel(9));
  check_construction(gen_subdivided_k4(2));
  check_construction(gen_subdivided_k4(3));
  check_construction(gen_tight_family(2));
  check_construction(two_triangles_shared_vertex());
  check_construction(path_graph(6));
}

TEST_CASE("dodecahedron trace starts with the five-five reduction") {
  reduce::ConstructResult res = reduce::construct_7_coloring(gen_dodecahedron());
  REQUIRE(!res.trace.empty());
  CHECK(res.trace[0].config.kind == ConfigKind::FiveFiveLowDegree);
  std::string trace = reduce::render_trace(res.trace);
  CHECK(trace.find("step 0 kind=FiveFiveLowDegree") == 0);
  CHECK(trace.find("|V|=20 |E|=30") != std::string::npos);
}

TEST_CASE("tight family member needs exactly 7") {
  PlaneGraph g = gen_tight_family(2);
  reduce::ConstructResult res = reduce::construct_7_coloring(g);
  CHECK(facial::verify(g, 2, res.coloring).empty());
  CHECK(exact::min_colors(g, 2).chi == 7);
}

TEST_CASE("construct on a random corpus, no failures or gaps") {
  for (unsigned long long seed = 1; seed <= 40; ++seed) {
    PlaneGraph g = gen_random_planar(4 + (int)(seed % 12), seed * 977 + 3);
    check_construction(g);
  }
}

#include "corpus.hpp"

namespace {

// Runs recheck + apply + extension from an exact coloring of the reduced
// graph; for split steps both parts are colored exactly and merged.
void exercise_config(const PlaneGraph& g, const reduce::Configuration& c) {
  REQUIRE(reduce::recheck(g, c));
  reduce::ReductionStep step = reduce::apply(g, c);
  facial::Coloring phi;
  if (step.is_split) {
    exact::KResult k1 = exact::is_k_colorable(step.reduced, 2, 7);
    exact::KResult k2 = exact::is_k_colorable(step.part2, 2, 7);
    REQUIRE(k1.status == exact::Status::Colorable);
    REQUIRE(k2.status == exact::Status::Colorable);
    phi = reduce::extend_split(g, step, k1.witness, k2.witness);
  } else {
    CHECK(step.reduced.vertex_count() + step.reduced.edge_count() <
          g.vertex_count() + g.edge_count());
    exact::KResult kr = exact::is_k_colorable(step.reduced, 2, 7);
    REQUIRE(kr.status == exact::Status::Colorable);
    phi = reduce::extend(g, step, kr.witness);
  }
  CHECK(facial::verify(g, 2, phi).empty());
}

}  // namespace

TEST_CASE("two-vertex on a 5-face, second face also length 5") {
  // subdividing a cube edge turns its two squares into pentagons sharing
  // the new 2-vertex; the engine reaches this naturally
  PlaneGraph g = corpus::subdivide_edge(gen_cube(), 0);
  auto c = reduce::detect(g);
  REQUIRE(c.has_value());
  CHECK(c->kind == ConfigKind::SmallFaceWithTwoVertex);
  CHECK(c->variant == 5);
  exercise_config(g, *c);
  check_construction(g);
}

TEST_CASE("two-vertex on a 5-face, second face of length 8") {
  // subdividing a rim edge of the 7-prism gives a pentagon against an 8-face
  PlaneGraph pr = gen_prism(7);
  EdgeId rim = -1;
  for (EdgeId e : pr.edges()) {
    auto [a, b] = pr.edge_darts(e);
    if (pr.face_length(pr.face_of(a)) + pr.face_length(pr.face_of(b)) == 11) {
      rim = e;
      break;
    }
  }
  REQUIRE(rim >= 0);
  PlaneGraph g = corpus::subdivide_edge(pr, rim);
  auto c = reduce::detect(g);
  REQUIRE(c.has_value());
  CHECK(c->kind == ConfigKind::SmallFaceWithTwoVertex);
  CHECK(c->variant == 5);
  exercise_config(g, *c);
  check_construction(g);
}

TEST_CASE("two-vertex on a 7-face") {
  // concentric 7-rings, spokes at 0,2,4,6: the inner face is a 7-face whose
  // vertex c1 has degree 2 (detect sees the 6-faces first; the surgery is
  // fed directly)
  PlaneGraph g = corpus::ring_with_spokes(7, {0, 2, 4, 6});
  std::vector<VertexId> labels = {0, 1, 2, 3, 4, 5, 6};  // u,v,w,x1..x4 with v=c1
  FaceId inner = -1;
  for (const FaceWalk& w : g.faces()) {
    std::vector<VertexId> vs = g.face_vertices(w.face);
    if (w.darts.size() == 7 && std::set<VertexId>(vs.begin(), vs.end()) ==
                                   std::set<VertexId>{0, 1, 2, 3, 4, 5, 6})
      inner = w.face;
  }
  REQUIRE(inner >= 0);
  // rotate the walk so the 2-vertex c1 sits at label index 1
  std::vector<VertexId> vs = g.face_vertices(inner);
  int at = -1;
  for (int i = 0; i < 7; ++i)
    if (vs[i] == 1) at = i;
  REQUIRE(at >= 0);
  reduce::Configuration c{ConfigKind::SmallFaceWithTwoVertex, 7, {}, {}, {inner}};
  for (int j = 0; j < 7; ++j) c.vertices.push_back(vs[(at - 1 + j + 7) % 7]);
  for (int j = 0; j < 7; ++j) {
    DartId d = g.walk(inner).darts[(at - 1 + j + 7) % 7];
    c.edges.push_back(g.edge_of(d));
  }
  exercise_config(g, c);
  check_construction(g);
}

TEST_CASE("two 2-vertices at facial distance 2 and 3") {
  {
    PlaneGraph g = corpus::ring_with_spokes(9, {0, 2, 4, 5, 6, 7, 8});  // c1, c3 free
    REQUIRE(g.degree(1) == 2);
    REQUIRE(g.degree(3) == 2);
    REQUIRE(vertex_facial_distance(g, 1, 3) == 2);
    reduce::Configuration c{ConfigKind::TwoVerticesClose, 2, {0, 1, 2, 3, 4}, {}, {}};
    FaceId inner = -1;
    for (const FaceWalk& w : g.faces())
      if (w.darts.size() == 9 && g.vertex_of(w.darts.front()) < 9) inner = w.face;
    REQUIRE(inner >= 0);
    c.faces = {inner};
    // edges x-u, u-w, w-v, v-y along the walk
    auto need = [&](VertexId a, VertexId b) {
      for (DartId d : g.rotation(a))
        if (g.head_of(d) == b) return g.edge_of(d);
      REQUIRE(false);
      return -1;
    };
    c.edges = {need(0, 1), need(1, 2), need(2, 3), need(3, 4)};
    exercise_config(g, c);
    check_construction(g);
  }
  {
    PlaneGraph g = corpus::ring_with_spokes(9, {0, 1, 2, 4, 6, 7, 8});  // c3, c5 free
    REQUIRE(g.degree(3) == 2);
    REQUIRE(g.degree(5) == 2);
    REQUIRE(vertex_facial_distance(g, 3, 5) == 2);
    check_construction(g);
  }
  {
    // distance 3: 2-vertices at c3 and c6
    PlaneGraph g = corpus::ring_with_spokes(10, {0, 1, 2, 4, 5, 7, 8, 9});
    REQUIRE(g.degree(3) == 2);
    REQUIRE(g.degree(6) == 2);
    REQUIRE(vertex_facial_distance(g, 3, 6) == 3);
    reduce::Configuration c{ConfigKind::TwoVerticesClose, 3, {2, 3, 4, 5, 6, 7}, {}, {}};
    FaceId inner = -1;
    for (const FaceWalk& w : g.faces())
      if (w.darts.size() == 10 && g.vertex_of(w.darts.front()) < 10) inner = w.face;
    c.faces = {inner};
    auto need = [&](VertexId a, VertexId b) {
      for (DartId d : g.rotation(a))
        if (g.head_of(d) == b) return g.edge_of(d);
      REQUIRE(false);
      return -1;
    };
    c.edges = {need(2, 3), need(3, 4), need(4, 5), need(5, 6), need(6, 7)};
    exercise_config(g, c);
    check_construction(g);
  }
}

TEST_CASE("8-face with two opposite 2-vertices") {
  PlaneGraph g = corpus::ring_with_spokes(8, {0, 2, 3, 4, 6, 7});  // c1, c5 free
  REQUIRE(g.degree(1) == 2);
  REQUIRE(g.degree(5) == 2);
  FaceId inner = -1;
  for (const FaceWalk& w : g.faces())
    if (w.darts.size() == 8 && g.vertex_of(w.darts.front()) < 8) inner = w.face;
  REQUIRE(inner >= 0);
  std::vector<VertexId> vs = g.face_vertices(inner);
  int at = -1;
  for (int i = 0; i < 8; ++i)
    if (vs[i] == 1) at = i;
  reduce::Configuration c{ConfigKind::EightFaceTwoTwoVertices, 0, {}, {}, {inner}};
  for (int j = 0; j < 8; ++j) c.vertices.push_back(vs[(at + j) % 8]);
  for (int j = 0; j < 8; ++j)
    c.edges.push_back(g.edge_of(g.walk(inner).darts[(at + j) % 8]));
  exercise_config(g, c);
  check_construction(g);
}

TEST_CASE("4-face and 5-face sharing a low-degree edge") {
  PlaneGraph g = corpus::subdivide_edge(gen_cube(), 0);
  // find an edge whose faces have lengths 4 and 5 and whose endpoints both
  // have degree 3
  for (EdgeId e : g.edges()) {
    auto [da, db] = g.edge_darts(e);
    FaceId f1 = g.face_of(da), f2 = g.face_of(db);
    int l1 = g.face_length(f1), l2 = g.face_length(f2);
    if (std::min(l1, l2) != 4 || std::max(l1, l2) != 5) continue;
    FaceId alpha = l1 == 4 ? f1 : f2;
    FaceId beta = l1 == 4 ? f2 : f1;
    auto [u, v] = g.edge_endpoints(e);
    if (g.degree(u) != 3 || g.degree(v) != 3) continue;
    auto nb = [&](FaceId f, VertexId x, VertexId skip) {
      std::vector<VertexId> vs = g.face_vertices(f);
      int len = (int)vs.size();
      for (int i = 0; i < len; ++i)
        if (vs[i] == x) {
          if (vs[(i + 1) % len] != skip) return vs[(i + 1) % len];
          return vs[(i - 1 + len) % len];
        }
      return -1;
    };
    VertexId v1 = nb(alpha, v, u), u1 = nb(alpha, u, v);
    VertexId v2 = nb(beta, v, u), u2 = nb(beta, u, v);
    VertexId w = nb(beta, v2, v);
    reduce::Configuration c{ConfigKind::FourFiveLowDegree, 0, {u, v, v1, u1, v2, w, u2},
                            {e}, {alpha, beta}};
    exercise_config(g, c);
    return;
  }
  FAIL("no suitable 4|5 edge found");
}

TEST_CASE("separating triangle split, fed directly") {
  PlaneGraph g = build_from_simple_faces(
      {{0, 1, 4}, {1, 3, 4}, {3, 0, 4}, {1, 2, 3}, {2, 0, 3}, {2, 1, 0}});
  std::vector<CycleInfo> cyc = separating_cycles_up_to(g, 3);
  REQUIRE(cyc.size() == 1);
  reduce::Configuration c{ConfigKind::SeparatingCycleLE5, 3, cyc[0].vertices, cyc[0].edges,
                          {}};
  exercise_config(g, c);
}

TEST_CASE("construct across the cubic-flavoured corpus") {
  for (int i = 1; i <= 60; ++i)
    check_construction(corpus::random_cubicish(5 + i % 14, 40'000 + i));
}
