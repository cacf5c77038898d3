#include "lfec/reduce.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "lfec/exact.hpp"
#include "lfec/genio.hpp"
#include "lfec/listcolor.hpp"

namespace lfec::reduce {

const char* kind_name(ConfigKind k) {
  switch (k) {
    case ConfigKind::Cutvertex: return "Cutvertex";
    case ConfigKind::DegreeLE1: return "DegreeLE1";
    case ConfigKind::AdjacentTwoVertices: return "AdjacentTwoVertices";
    case ConfigKind::FaceLE3: return "FaceLE3";
    case ConfigKind::SeparatingCycleLE5: return "SeparatingCycleLE5";
    case ConfigKind::SixFace: return "SixFace";
    case ConfigKind::SmallFaceWithTwoVertex: return "SmallFaceWithTwoVertex";
    case ConfigKind::TwoVerticesClose: return "TwoVerticesClose";
    case ConfigKind::EightFaceTwoTwoVertices: return "EightFaceTwoTwoVertices";
    case ConfigKind::AdjacentFourFaces: return "AdjacentFourFaces";
    case ConfigKind::FourFiveLowDegree: return "FourFiveLowDegree";
    case ConfigKind::FiveFiveLowDegree: return "FiveFiveLowDegree";
    case ConfigKind::FourFaceAllThrees: return "FourFaceAllThrees";
  }
  return "?";
}

namespace {

EdgeId edge_between_on_walk(const PlaneGraph& g, FaceId f, int pos) {
  return g.edge_of(g.walk(f).darts[pos]);
}

// Face whose walk carries every listed edge (least id), or -1.
FaceId find_face_with_edges(const PlaneGraph& g, const std::vector<EdgeId>& need) {
  for (const FaceWalk& w : g.faces()) {
    std::vector<EdgeId> fe = g.face_edges(w.face);
    bool all = true;
    for (EdgeId e : need)
      all = all && std::find(fe.begin(), fe.end(), e) != fe.end();
    if (all) return w.face;
  }
  return -1;
}

// Other face at a 2-vertex (its rotation has two darts).
FaceId other_face_of_two_vertex(const PlaneGraph& g, VertexId v, FaceId alpha) {
  for (DartId d : g.rotation(v))
    if (g.face_of(d) != alpha) return g.face_of(d);
  // both corners may lie on alpha only through the twin side
  for (DartId d : g.rotation(v))
    if (g.face_of(g.twin(d)) != alpha) return g.face_of(g.twin(d));
  return alpha;
}

// The unique edge joining u and v when one exists (least id).
std::optional<EdgeId> edge_between(const PlaneGraph& g, VertexId u, VertexId v) {
  std::optional<EdgeId> best;
  for (DartId d : g.rotation(u))
    if (g.head_of(d) == v) {
      EdgeId e = g.edge_of(d);
      if (!best || e < *best) best = e;
    }
  return best;
}

// --- detection, one helper per kind ----------------------------------------

std::optional<Configuration> find_cutvertex(const PlaneGraph& g) {
  std::vector<VertexId> cuts = cutvertices(g);
  if (cuts.empty()) return std::nullopt;
  Configuration c{ConfigKind::Cutvertex, 0, {cuts.front()}, {}, {}};
  return c;
}

std::optional<Configuration> find_degree_le1(const PlaneGraph& g) {
  for (VertexId v : g.vertices()) {
    if (g.degree(v) <= 1) {
      Configuration c{ConfigKind::DegreeLE1, 0, {v}, {}, {}};
      for (DartId d : g.rotation(v)) c.edges.push_back(g.edge_of(d));
      return c;
    }
  }
  return std::nullopt;
}

std::optional<Configuration> find_adjacent_two_vertices(const PlaneGraph& g) {
  for (EdgeId e : g.edges()) {
    auto [u, v] = g.edge_endpoints(e);
    if (u == v) continue;
    if (g.degree(u) == 2 && g.degree(v) == 2) {
      if (u > v) std::swap(u, v);
      return Configuration{ConfigKind::AdjacentTwoVertices, 0, {u, v}, {e}, {}};
    }
  }
  return std::nullopt;
}

std::optional<Configuration> find_face_le3(const PlaneGraph& g) {
  for (int target : {1, 2, 3}) {
    for (const FaceWalk& w : g.faces()) {
      if ((int)w.darts.size() != target) continue;
      Configuration c{ConfigKind::FaceLE3, target, {}, {}, {w.face}};
      c.vertices = g.face_vertices(w.face);
      c.edges = g.face_edges(w.face);
      return c;
    }
  }
  return std::nullopt;
}

std::optional<Configuration> find_separating_cycle(const PlaneGraph& g) {
  std::vector<CycleInfo> cycles = separating_cycles_up_to(g, 5);
  if (cycles.empty()) return std::nullopt;
  const CycleInfo& c = cycles.front();
  return Configuration{ConfigKind::SeparatingCycleLE5, (int)c.edges.size(), c.vertices,
                       c.edges, {}};
}

std::optional<Configuration> find_six_face(const PlaneGraph& g) {
  for (const FaceWalk& w : g.faces())
    if ((int)w.darts.size() == 6) {
      Configuration c{ConfigKind::SixFace, 0, g.face_vertices(w.face), g.face_edges(w.face),
                      {w.face}};
      return c;
    }
  return std::nullopt;
}

std::optional<Configuration> find_small_face_with_two_vertex(const PlaneGraph& g) {
  for (int target : {4, 5, 7}) {
    for (const FaceWalk& w : g.faces()) {
      if ((int)w.darts.size() != target) continue;
      std::vector<VertexId> vs = g.face_vertices(w.face);
      for (int i = 0; i < target; ++i) {
        VertexId v = vs[i];
        if (g.degree(v) != 2) continue;
        // rotate labels so the 2-vertex sits at index 1: (u, v, w, x1, ...)
        Configuration c{ConfigKind::SmallFaceWithTwoVertex, target, {}, {}, {w.face}};
        for (int j = 0; j < target; ++j) c.vertices.push_back(vs[(i - 1 + j + target) % target]);
        for (int j = 0; j < target; ++j)
          c.edges.push_back(edge_between_on_walk(g, w.face, (i - 1 + j + target) % target));
        return c;
      }
    }
  }
  return std::nullopt;
}

std::optional<Configuration> find_two_vertices_close(const PlaneGraph& g) {
  for (int dist : {2, 3}) {
    for (const FaceWalk& w : g.faces()) {
      const int len = (int)w.darts.size();
      if (len <= 2 * dist) continue;
      std::vector<VertexId> vs = g.face_vertices(w.face);
      for (int i = 0; i < len; ++i) {
        int j = (i + dist) % len;
        VertexId u = vs[i], v = vs[j];
        if (u == v) continue;
        if (g.degree(u) != 2 || g.degree(v) != 2) continue;
        // labels along the walk: x,u,w,(z,)v,y with u at walk index i
        Configuration c{ConfigKind::TwoVerticesClose, dist, {}, {}, {w.face}};
        for (int s = -1; s <= dist + 1; ++s) c.vertices.push_back(vs[(i + s + len) % len]);
        for (int s = -1; s <= dist; ++s)
          c.edges.push_back(edge_between_on_walk(g, w.face, (i + s + len) % len));
        return c;
      }
    }
  }
  return std::nullopt;
}

std::optional<Configuration> find_eight_face_two(const PlaneGraph& g) {
  for (const FaceWalk& w : g.faces()) {
    if ((int)w.darts.size() != 8) continue;
    std::vector<VertexId> vs = g.face_vertices(w.face);
    int count = 0;
    for (VertexId v : vs)
      if (g.degree(v) == 2) ++count;
    if (count < 2) continue;
    for (int i = 0; i < 8; ++i) {
      if (g.degree(vs[i]) == 2 && g.degree(vs[(i + 4) % 8]) == 2 && vs[i] != vs[(i + 4) % 8]) {
        Configuration c{ConfigKind::EightFaceTwoTwoVertices, 0, {}, {}, {w.face}};
        for (int j = 0; j < 8; ++j) c.vertices.push_back(vs[(i + j) % 8]);
        for (int j = 0; j < 8; ++j) c.edges.push_back(edge_between_on_walk(g, w.face, (i + j) % 8));
        return c;
      }
    }
  }
  return std::nullopt;
}

std::optional<Configuration> find_adjacent_four_faces(const PlaneGraph& g) {
  for (EdgeId e : g.edges()) {
    auto [a, b] = g.edge_darts(e);
    FaceId f1 = g.face_of(a), f2 = g.face_of(b);
    if (f1 == f2) continue;
    if (g.face_length(f1) == 4 && g.face_length(f2) == 4)
      return Configuration{ConfigKind::AdjacentFourFaces, 0, {}, {e}, {std::min(f1, f2), std::max(f1, f2)}};
  }
  return std::nullopt;
}

// Walk neighbors of v on face f, excluding `not_this` (for faces that are
// simple cycles these are the two boundary neighbors).
std::vector<VertexId> walk_neighbors(const PlaneGraph& g, FaceId f, VertexId v,
                                     VertexId not_this) {
  std::vector<VertexId> out;
  std::vector<VertexId> vs = g.face_vertices(f);
  const int len = (int)vs.size();
  for (int i = 0; i < len; ++i)
    if (vs[i] == v) {
      VertexId p = vs[(i - 1 + len) % len], n = vs[(i + 1) % len];
      if (p != not_this) out.push_back(p);
      if (n != not_this) out.push_back(n);
    }
  return out;
}

std::optional<Configuration> find_four_five(const PlaneGraph& g) {
  for (EdgeId e : g.edges()) {
    auto [da, db] = g.edge_darts(e);
    FaceId f1 = g.face_of(da), f2 = g.face_of(db);
    if (f1 == f2) continue;
    FaceId alpha, beta;
    if (g.face_length(f1) == 4 && g.face_length(f2) == 5) {
      alpha = f1;
      beta = f2;
    } else if (g.face_length(f1) == 5 && g.face_length(f2) == 4) {
      alpha = f2;
      beta = f1;
    } else {
      continue;
    }
    auto [x, y] = g.edge_endpoints(e);
    if (g.degree(x) > 3 && g.degree(y) > 3) continue;
    VertexId u = x, v = y;
    if (g.degree(u) > 3 || (g.degree(v) <= 3 && v < u)) std::swap(u, v);
    // labels: alpha = (u, v, v1, u1), beta = (u, v, v2, w, u2)
    VertexId v1 = walk_neighbors(g, alpha, v, u).front();
    VertexId u1 = walk_neighbors(g, alpha, u, v).front();
    VertexId v2 = walk_neighbors(g, beta, v, u).front();
    VertexId u2 = walk_neighbors(g, beta, u, v).front();
    VertexId w = walk_neighbors(g, beta, v2, v).front();
    return Configuration{ConfigKind::FourFiveLowDegree, 0, {u, v, v1, u1, v2, w, u2},
                         {e}, {alpha, beta}};
  }
  return std::nullopt;
}

std::optional<Configuration> find_five_five(const PlaneGraph& g) {
  for (EdgeId e : g.edges()) {
    auto [da, db] = g.edge_darts(e);
    FaceId f1 = g.face_of(da), f2 = g.face_of(db);
    if (f1 == f2) continue;
    if (g.face_length(f1) != 5 || g.face_length(f2) != 5) continue;
    auto [u, v] = g.edge_endpoints(e);
    if (g.degree(u) > 3 || g.degree(v) > 3) continue;
    if (u > v) std::swap(u, v);
    FaceId alpha = std::min(f1, f2), beta = std::max(f1, f2);
    // labels: alpha = (u, v, v1, w1, u1), beta = (u, v, v2, w2, u2)
    VertexId v1 = walk_neighbors(g, alpha, v, u).front();
    VertexId u1 = walk_neighbors(g, alpha, u, v).front();
    VertexId w1 = walk_neighbors(g, alpha, v1, v).front();
    VertexId v2 = walk_neighbors(g, beta, v, u).front();
    VertexId u2 = walk_neighbors(g, beta, u, v).front();
    VertexId w2 = walk_neighbors(g, beta, v2, v).front();
    return Configuration{ConfigKind::FiveFiveLowDegree, 0, {u, v, v1, w1, u1, v2, w2, u2},
                         {e}, {alpha, beta}};
  }
  return std::nullopt;
}

std::optional<Configuration> find_four_face_all_threes(const PlaneGraph& g) {
  for (const FaceWalk& w : g.faces()) {
    if ((int)w.darts.size() != 4) continue;
    std::vector<VertexId> vs = g.face_vertices(w.face);
    if (std::set<VertexId>(vs.begin(), vs.end()).size() != 4) continue;
    bool all3 = true;
    for (VertexId v : vs) all3 = all3 && g.degree(v) == 3;
    if (!all3) continue;
    Configuration c{ConfigKind::FourFaceAllThrees, 0, vs, g.face_edges(w.face), {w.face}};
    return c;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Configuration> detect(const PlaneGraph& g) {
  if (auto c = find_cutvertex(g)) return c;
  if (auto c = find_degree_le1(g)) return c;
  if (auto c = find_adjacent_two_vertices(g)) return c;
  if (auto c = find_face_le3(g)) return c;
  if (auto c = find_separating_cycle(g)) return c;
  if (auto c = find_six_face(g)) return c;
  if (auto c = find_small_face_with_two_vertex(g)) return c;
  if (auto c = find_two_vertices_close(g)) return c;
  if (auto c = find_eight_face_two(g)) return c;
  if (auto c = find_adjacent_four_faces(g)) return c;
  if (auto c = find_four_five(g)) return c;
  if (auto c = find_five_five(g)) return c;
  if (auto c = find_four_face_all_threes(g)) return c;
  return std::nullopt;
}

bool recheck(const PlaneGraph& g, const Configuration& c) {
  auto deg_ok = [&](VertexId v, int d) { return g.has_vertex(v) && g.degree(v) == d; };
  switch (c.kind) {
    case ConfigKind::Cutvertex: {
      std::vector<VertexId> cuts = cutvertices(g);
      return std::find(cuts.begin(), cuts.end(), c.vertices.at(0)) != cuts.end();
    }
    case ConfigKind::DegreeLE1:
      return g.has_vertex(c.vertices.at(0)) && g.degree(c.vertices.at(0)) <= 1;
    case ConfigKind::AdjacentTwoVertices:
      return deg_ok(c.vertices.at(0), 2) && deg_ok(c.vertices.at(1), 2) &&
             g.has_edge(c.edges.at(0));
    case ConfigKind::FaceLE3:
      return g.face_length(c.faces.at(0)) <= 3;
    case ConfigKind::SeparatingCycleLE5: {
      auto [a, b] = std::pair<int, int>{0, 0};
      CycleSides sides = cycle_side_edges(g, cycle_darts(g, c.vertices, c.edges));
      a = (int)sides.side_a.size();
      b = (int)sides.side_b.size();
      // a separating cycle has vertices on both sides; edge emptiness on a
      // side can only happen with isolated side vertices, which cannot occur
      return a > 0 && b > 0;
    }
    case ConfigKind::SixFace:
      return g.face_length(c.faces.at(0)) == 6;
    case ConfigKind::SmallFaceWithTwoVertex:
      return g.face_length(c.faces.at(0)) == c.variant && deg_ok(c.vertices.at(1), 2);
    case ConfigKind::TwoVerticesClose:
      return deg_ok(c.vertices.at(1), 2) && deg_ok(c.vertices.at(c.variant + 1), 2) &&
             vertex_facial_distance(g, c.vertices.at(1), c.vertices.at(c.variant + 1)) ==
                 c.variant;
    case ConfigKind::EightFaceTwoTwoVertices:
      return g.face_length(c.faces.at(0)) == 8 && deg_ok(c.vertices.at(0), 2) &&
             deg_ok(c.vertices.at(4), 2);
    case ConfigKind::AdjacentFourFaces:
      return g.face_length(c.faces.at(0)) == 4 && g.face_length(c.faces.at(1)) == 4;
    case ConfigKind::FourFiveLowDegree:
      return g.face_length(c.faces.at(0)) == 4 && g.face_length(c.faces.at(1)) == 5 &&
             g.degree(c.vertices.at(0)) == 3;
    case ConfigKind::FiveFiveLowDegree:
      return g.face_length(c.faces.at(0)) == 5 && g.face_length(c.faces.at(1)) == 5 &&
             g.degree(c.vertices.at(0)) == 3 && g.degree(c.vertices.at(1)) == 3;
    case ConfigKind::FourFaceAllThrees: {
      if (g.face_length(c.faces.at(0)) != 4) return false;
      for (VertexId v : c.vertices)
        if (!deg_ok(v, 3)) return false;
      return true;
    }
  }
  return false;
}

namespace {

[[noreturn]] void ordering_bug(const std::string& what) {
  throw GraphError("reduction precondition failed (detect-ordering bug): " + what);
}

// Hexagon identification with the three label rotations; first one whose
// side conditions hold wins.
struct HexStep {
  PlaneGraph graph;
  std::vector<std::pair<EdgeId, EdgeId>> edge_map;
  std::vector<EdgeId> to_color;
};

HexStep hexagon_identify(const PlaneGraph& g, FaceId face) {
  if (g.face_length(face) != 6) ordering_bug("hexagon surgery on a non-6-face");
  std::vector<VertexId> vs = g.face_vertices(face);
  if (std::set<VertexId>(vs.begin(), vs.end()).size() != 6)
    ordering_bug("6-face with repeated vertices");
  std::vector<EdgeId> es = g.face_edges(face);

  for (int r = 0; r < 3; ++r) {
    // labels v1..v6 starting at walk offset r: identify v1v6 with v3v4,
    // v1 goes to v3 and v4 goes to v6
    VertexId v1 = vs[r], v3 = vs[(r + 2) % 6], v4 = vs[(r + 3) % 6], v6 = vs[(r + 5) % 6];
    EdgeId e = es[(r + 5) % 6];  // v6v1
    EdgeId f = es[(r + 2) % 6];  // v3v4
    std::set<VertexId> ends{v1, v3, v4, v6};
    if (ends.size() != 4) continue;
    if (facial_distance(g, e, f) <= 2) continue;
    EdgeIdentification id = identify_edges(g, e, f, {v1, v3}, {v6, v4}, face);
    HexStep out{std::move(id.graph), std::move(id.edge_map), {}};
    for (int j : {0, 1, 3, 4}) out.to_color.push_back(es[(r + j) % 6]);
    return out;
  }
  ordering_bug("no admissible opposite pair on the 6-face");
}

std::vector<EdgeId> incident_edges(const PlaneGraph& g, VertexId v) {
  std::set<EdgeId> out;
  for (DartId d : g.rotation(v)) out.insert(g.edge_of(d));
  return {out.begin(), out.end()};
}

ReductionStep split_at_cutvertex(const PlaneGraph& g, const Configuration& c) {
  VertexId x = c.vertices.at(0);
  // vertex component of g - x containing the least non-x vertex
  std::set<VertexId> comp;
  for (VertexId v : g.vertices()) {
    if (v == x) continue;
    comp.insert(v);
    break;
  }
  if (comp.empty()) ordering_bug("cutvertex in a single-vertex graph");
  std::vector<VertexId> stack{*comp.begin()};
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (DartId d : g.rotation(v)) {
      VertexId w = g.head_of(d);
      if (w == x || comp.count(w)) continue;
      comp.insert(w);
      stack.push_back(w);
    }
  }
  std::vector<EdgeId> part1, part2;
  for (EdgeId e : g.edges()) {
    auto [u, v] = g.edge_endpoints(e);
    bool u_in = comp.count(u), v_in = comp.count(v);
    if ((u_in && v_in) || (u_in && v == x) || (v_in && u == x))
      part1.push_back(e);
    else
      part2.push_back(e);
  }
  if (part1.empty() || part2.empty()) ordering_bug("cutvertex split left an empty part");
  ReductionStep step;
  step.config = c;
  step.reduced = edge_subgraph(g, part1);
  step.part2 = edge_subgraph(g, part2);
  step.is_split = true;
  return step;
}

ReductionStep split_at_cycle(const PlaneGraph& g, const Configuration& c) {
  std::vector<DartId> cyc = cycle_darts(g, c.vertices, c.edges);
  CycleSides sides = cycle_side_edges(g, cyc);
  if (sides.side_a.empty() || sides.side_b.empty())
    ordering_bug("separating cycle with an empty side");
  std::vector<EdgeId> part1 = c.edges, part2 = c.edges;
  part1.insert(part1.end(), sides.side_a.begin(), sides.side_a.end());
  part2.insert(part2.end(), sides.side_b.begin(), sides.side_b.end());
  ReductionStep step;
  step.config = c;
  step.reduced = edge_subgraph(g, part1);
  step.part2 = edge_subgraph(g, part2);
  step.is_split = true;
  step.shared_edges = c.edges;
  return step;
}

}  // namespace

ReductionStep apply(const PlaneGraph& g, const Configuration& c) {
  if (!recheck(g, c)) ordering_bug("witness predicate no longer holds");
  ReductionStep step;
  step.config = c;

  switch (c.kind) {
    case ConfigKind::Cutvertex:
      return split_at_cutvertex(g, c);
    case ConfigKind::SeparatingCycleLE5:
      return split_at_cycle(g, c);

    case ConfigKind::DegreeLE1: {
      VertexId v = c.vertices.at(0);
      step.to_color = incident_edges(g, v);
      step.reduced = delete_vertex(g, v);
      return step;
    }

    case ConfigKind::AdjacentTwoVertices: {
      VertexId v = c.vertices.at(1);
      step.to_color = incident_edges(g, v);
      step.reduced = delete_vertex(g, v);
      return step;
    }

    case ConfigKind::FaceLE3: {
      FaceId f = c.faces.at(0);
      std::vector<EdgeId> boundary = g.face_edges(f);
      std::optional<EdgeId> loop;
      for (EdgeId e : boundary)
        if (g.is_loop(e) && (!loop || e < *loop)) loop = e;
      if (loop) {
        step.to_color = {*loop};
        step.reduced = delete_edge(g, *loop);
      } else if ((int)boundary.size() <= 2) {
        EdgeId e = *std::min_element(boundary.begin(), boundary.end());
        step.to_color = {e};
        step.reduced = delete_edge(g, e);
      } else {
        // parallel copies of boundary edges become loops at the merged
        // vertex; the fan splice keeps every surviving walk intact, so the
        // transported coloring stays valid and later kinds clear the loops
        step.to_color = boundary;
        std::sort(step.to_color.begin(), step.to_color.end());
        step.to_color.erase(std::unique(step.to_color.begin(), step.to_color.end()),
                            step.to_color.end());
        step.reduced = contract_face(g, f);
      }
      return step;
    }

    case ConfigKind::SixFace: {
      HexStep hex = hexagon_identify(g, c.faces.at(0));
      step.reduced = std::move(hex.graph);
      step.edge_map = std::move(hex.edge_map);
      step.to_color = std::move(hex.to_color);
      return step;
    }

    case ConfigKind::SmallFaceWithTwoVertex: {
      VertexId u = c.vertices.at(0), v = c.vertices.at(1), w = c.vertices.at(2);
      EdgeId uv = c.edges.at(0), vw = c.edges.at(1);
      if (c.variant == 4) {
        step.to_color = {uv, vw};
        step.reduced = delete_vertex(g, v);
        return step;
      }
      if (c.variant == 5) {
        FaceId beta = other_face_of_two_vertex(g, v, c.faces.at(0));
        int lb = g.face_length(beta);
        if (lb == 5) {
          // remove v; alpha and beta merge into a 6-face, then the hexagon
          // identification supplies the equal-colored pair
          PlaneGraph g1 = delete_vertex(g, v);
          EdgeId wx1 = c.edges.at(2);
          std::optional<EdgeId> wy1;
          for (DartId d : g.rotation(w)) {
            if (g.face_of(d) == beta || g.face_of(g.twin(d)) == beta) {
              EdgeId e2 = g.edge_of(d);
              if (e2 != vw && e2 != wx1 && (!wy1 || e2 < *wy1)) wy1 = e2;
            }
          }
          if (!wy1) ordering_bug("missing beta-edge at w");
          FaceId gamma = -1;
          for (const FaceWalk& fw : g1.faces()) {
            if ((int)fw.darts.size() != 6) continue;
            std::vector<EdgeId> fe = g1.face_edges(fw.face);
            bool has1 = std::find(fe.begin(), fe.end(), wx1) != fe.end();
            bool has2 = std::find(fe.begin(), fe.end(), *wy1) != fe.end();
            if (has1 && has2) {
              gamma = fw.face;
              break;
            }
          }
          if (gamma < 0) ordering_bug("merged 6-face not found after removing the 2-vertex");
          HexStep hex = hexagon_identify(g1, gamma);
          step.reduced = std::move(hex.graph);
          step.edge_map = std::move(hex.edge_map);
          step.to_color = {uv, vw};
          step.to_color.insert(step.to_color.end(), hex.to_color.begin(), hex.to_color.end());
          return step;
        }
        if (lb < 7) ordering_bug("2-vertex on a 5-face with a 6-face behind it");
        // beta is a 7+-face (y2, y1, u, v, w, z1, z2, ...)
        std::vector<VertexId> bvs = g.face_vertices(beta);
        const int blen = (int)bvs.size();
        int pos_v = -1;
        for (int i = 0; i < blen; ++i)
          if (bvs[i] == v) pos_v = i;
        if (pos_v < 0) ordering_bug("2-vertex missing from its second face");
        VertexId left = bvs[(pos_v - 1 + blen) % blen];
        VertexId right = bvs[(pos_v + 1) % blen];
        VertexId y1, z1;
        if (left == u && right == w) {
          y1 = bvs[(pos_v - 2 + blen) % blen];
          z1 = bvs[(pos_v + 2) % blen];
        } else if (left == w && right == u) {
          z1 = bvs[(pos_v - 2 + blen) % blen];
          y1 = bvs[(pos_v + 2) % blen];
        } else {
          ordering_bug("beta walk does not pass u,v,w");
        }
        if (y1 == z1) ordering_bug("beta too short for the vertex identification");
        std::optional<EdgeId> uy1 = edge_between(g, u, y1);
        std::optional<EdgeId> wz1 = edge_between(g, w, z1);
        if (!uy1 || !wz1) ordering_bug("beta boundary edges missing");
        if (edge_between(g, y1, z1)) ordering_bug("y1 and z1 adjacent");
        PlaneGraph g1 = delete_vertex(g, v);
        FaceId merged = find_face_with_edges(g1, {*uy1, *wz1, c.edges.at(2)});
        if (merged < 0) ordering_bug("merged face missing after removing the 2-vertex");
        step.reduced = identify_vertices(g1, y1, z1, merged);
        step.to_color = {uv, vw, *uy1, *wz1};
        return step;
      }
      // variant 7: alpha = (u, v, w, x1, x2, x3, x4)
      EdgeId e = c.edges.at(6);  // x4u
      EdgeId f = c.edges.at(3);  // x1x2
      VertexId x1 = c.vertices.at(3), x2 = c.vertices.at(4), x4 = c.vertices.at(6);
      if (std::set<VertexId>{u, x4, x1, x2}.size() != 4)
        ordering_bug("7-face identification endpoints not distinct");
      if (facial_distance(g, e, f) <= 2) ordering_bug("ux4 and x1x2 are 2-facial neighbors");
      EdgeIdentification id = identify_edges(g, e, f, {u, x1}, {x4, x2}, c.faces.at(0));
      step.reduced = std::move(id.graph);
      step.edge_map = std::move(id.edge_map);
      step.to_color = {c.edges.at(0), c.edges.at(1), c.edges.at(2), c.edges.at(4),
                       c.edges.at(5)};
      return step;
    }

    case ConfigKind::TwoVerticesClose: {
      // labels: x,u,w,(z,)v,y ; edges: xu,uw,(wz,)(z)v,vy
      VertexId u = c.vertices.at(1);
      VertexId v = c.vertices.at(c.variant + 1);
      step.to_color = incident_edges(g, u);
      for (EdgeId e : incident_edges(g, v)) step.to_color.push_back(e);
      std::sort(step.to_color.begin(), step.to_color.end());
      step.to_color.erase(std::unique(step.to_color.begin(), step.to_color.end()),
                          step.to_color.end());
      step.reduced = delete_vertex(delete_vertex(g, u), v);
      return step;
    }

    case ConfigKind::EightFaceTwoTwoVertices: {
      EdgeId e = c.edges.at(1);  // v2v3
      EdgeId f = c.edges.at(5);  // v6v7
      VertexId v2 = c.vertices.at(1), v3 = c.vertices.at(2);
      VertexId v6 = c.vertices.at(5), v7 = c.vertices.at(6);
      if (std::set<VertexId>{v2, v3, v6, v7}.size() != 4)
        ordering_bug("8-face identification endpoints not distinct");
      if (facial_distance(g, e, f) <= 2) ordering_bug("v2v3 and v6v7 are 2-facial neighbors");
      EdgeIdentification id = identify_edges(g, e, f, {v2, v7}, {v3, v6}, c.faces.at(0));
      step.reduced = std::move(id.graph);
      step.edge_map = std::move(id.edge_map);
      for (int j : {0, 2, 3, 4, 6, 7}) step.to_color.push_back(c.edges.at(j));
      return step;
    }

    case ConfigKind::AdjacentFourFaces: {
      EdgeId e = c.edges.at(0);
      step.to_color = {e};
      step.reduced = delete_edge(g, e);
      return step;
    }

    case ConfigKind::FourFiveLowDegree: {
      // vertices: u, v, v1, u1, v2, w, u2 with d(u) = 3
      VertexId u = c.vertices.at(0), v = c.vertices.at(1), v1 = c.vertices.at(2),
               u1 = c.vertices.at(3), v2 = c.vertices.at(4), w = c.vertices.at(5),
               u2 = c.vertices.at(6);
      EdgeId uv = c.edges.at(0);
      auto need = [&](VertexId a, VertexId b) {
        auto e = edge_between(g, a, b);
        if (!e) ordering_bug("expected boundary edge missing");
        return *e;
      };
      EdgeId vv1 = need(v, v1), uu1 = need(u, u1), u1v1 = need(u1, v1);
      EdgeId vv2 = need(v, v2), v2w = need(v2, w), wu2 = need(w, u2), uu2 = need(u, u2);
      if (std::set<VertexId>{v, v1, w, u2}.size() != 4)
        ordering_bug("4-5 identification endpoints not distinct");
      PlaneGraph g1 = delete_edge(g, uv);
      if (facial_distance(g1, vv1, wu2) <= 2) ordering_bug("vv1 and u2w are 2-facial neighbors");
      FaceId merged = find_face_with_edges(g1, {vv1, wu2, uu1});
      if (merged < 0) ordering_bug("merged 7-walk missing after removing uv");
      EdgeIdentification id = identify_edges(g1, vv1, wu2, {v, w}, {v1, u2}, merged);
      step.reduced = std::move(id.graph);
      step.edge_map = std::move(id.edge_map);
      step.to_color = {uv, uu1, u1v1, vv2, v2w, uu2};
      return step;
    }

    case ConfigKind::FiveFiveLowDegree: {
      // vertices: u, v, v1, w1, u1, v2, w2, u2 with d(u) = d(v) = 3
      VertexId u = c.vertices.at(0), v = c.vertices.at(1), v1 = c.vertices.at(2),
               w1 = c.vertices.at(3), u1 = c.vertices.at(4), v2 = c.vertices.at(5),
               w2 = c.vertices.at(6), u2 = c.vertices.at(7);
      EdgeId uv = c.edges.at(0);
      auto need = [&](VertexId a, VertexId b) {
        auto e = edge_between(g, a, b);
        if (!e) ordering_bug("expected boundary edge missing");
        return *e;
      };
      EdgeId uu1 = need(u, u1), u1w1 = need(u1, w1), w1v1 = need(w1, v1), vv1 = need(v, v1);
      EdgeId vv2 = need(v, v2), v2w2 = need(v2, w2), w2u2 = need(w2, u2), uu2 = need(u, u2);
      if (std::set<VertexId>{u1, w1, v2, w2}.size() != 4)
        ordering_bug("5-5 identification endpoints not distinct");
      PlaneGraph g1 = delete_edge(g, uv);
      if (facial_distance(g1, u1w1, v2w2) <= 2)
        ordering_bug("u1w1 and v2w2 are 2-facial neighbors");
      FaceId merged = find_face_with_edges(g1, {u1w1, v2w2, uu1});
      if (merged < 0) ordering_bug("merged 8-walk missing after removing uv");
      EdgeIdentification id = identify_edges(g1, u1w1, v2w2, {u1, w2}, {w1, v2}, merged);
      step.reduced = std::move(id.graph);
      step.edge_map = std::move(id.edge_map);
      step.to_color = {uv, uu1, w1v1, vv1, vv2, w2u2, uu2};
      return step;
    }

    case ConfigKind::FourFaceAllThrees: {
      std::set<EdgeId> h;
      for (VertexId v : c.vertices)
        for (EdgeId e : incident_edges(g, v)) h.insert(e);
      if (h.size() != 8) ordering_bug("4-face of 3-vertices without 8 distinct edges");
      for (VertexId v : c.vertices)
        for (DartId d : g.rotation(v)) {
          VertexId n = g.head_of(d);
          bool on_face = std::find(c.vertices.begin(), c.vertices.end(), n) != c.vertices.end();
          bool edge_on_face =
              std::find(c.edges.begin(), c.edges.end(), g.edge_of(d)) != c.edges.end();
          if (on_face && !edge_on_face) ordering_bug("chord at the 4-face");
        }
      step.to_color = {h.begin(), h.end()};
      PlaneGraph cur = g;
      for (VertexId v : c.vertices) cur = delete_vertex(cur, v);
      step.reduced = std::move(cur);
      return step;
    }
  }
  ordering_bug("unhandled configuration kind");
}

// --- extension ---------------------------------------------------------------

namespace {

facial::Coloring transport(const PlaneGraph& g, const ReductionStep& step,
                           const facial::Coloring& phi_reduced) {
  std::map<EdgeId, EdgeId> remap(step.edge_map.begin(), step.edge_map.end());
  std::set<EdgeId> fresh(step.to_color.begin(), step.to_color.end());
  facial::Coloring phi;
  phi.palette = std::max(7, phi_reduced.palette);
  for (EdgeId e : g.edges()) {
    if (fresh.count(e)) continue;
    EdgeId target = remap.count(e) ? remap.at(e) : e;
    auto col = phi_reduced.color(target);
    if (!col)
      throw std::logic_error("reduced coloring misses edge " + std::to_string(target));
    phi.set(e, *col);
  }
  return phi;
}

bool color_residual(const PlaneGraph& g, facial::Coloring& phi,
                    const std::vector<EdgeId>& residual) {
  if (residual.empty()) return true;
  auto [medial, lists] = facial::lists_from_partial(g, 2, phi, residual, phi.palette);
  auto lg = listcolor::from_medial(medial, lists);
  auto sol = listcolor::l_color(lg);
  if (!sol) return false;
  for (size_t i = 0; i < medial.vertices.size(); ++i) phi.set(medial.vertices[i], (*sol)[i]);
  return true;
}

[[noreturn]] void extension_failed(const PlaneGraph& g, const std::string& what) {
  throw ExtensionFailedError("extension failed: " + what, serialize_pg(g));
}

}  // namespace

facial::Coloring extend(const PlaneGraph& g, const ReductionStep& step,
                        const facial::Coloring& phi_reduced) {
  if (step.is_split) throw std::logic_error("extend called on a split step");
  facial::Coloring phi = transport(g, step, phi_reduced);
  if (!facial::verify_partial(g, 2, phi).empty())
    extension_failed(g, "transported partial coloring is invalid");

  // The distance-3 two-vertex case tries its recolor move first:
  // uncolor wz and reuse its color on ux and vz.
  if (step.config.kind == ConfigKind::TwoVerticesClose && step.config.variant == 3) {
    // edges: xu, uw, wz, zv, vy
    EdgeId xu = step.config.edges.at(0), uw = step.config.edges.at(1),
           wz = step.config.edges.at(2), zv = step.config.edges.at(3),
           vy = step.config.edges.at(4);
    if (auto cwz = phi.color(wz)) {
      facial::Coloring trial = phi;
      trial.assignment.erase(wz);
      trial.set(xu, *cwz);
      trial.set(zv, *cwz);
      if (facial::verify_partial(g, 2, trial).empty() &&
          color_residual(g, trial, {uw, vy, wz})) {
        if (facial::verify(g, 2, trial).empty()) return trial;
      }
    }
  }

  facial::Coloring attempt = phi;
  if (color_residual(g, attempt, step.to_color)) {
    if (facial::verify(g, 2, attempt).empty()) return attempt;
    extension_failed(g, "residual solution fails full verification");
  }
  extension_failed(g, std::string("residual list coloring unsolvable after ") +
                          kind_name(step.config.kind));
}

facial::Coloring extend_split(const PlaneGraph& g, const ReductionStep& step,
                              const facial::Coloring& phi1, const facial::Coloring& phi2) {
  if (!step.is_split) throw std::logic_error("extend_split called on a non-split step");
  const int k = 7;

  std::set<EdgeId> shared(step.shared_edges.begin(), step.shared_edges.end());
  std::vector<EdgeId> own2;
  for (EdgeId e : step.part2.edges())
    if (!shared.count(e)) own2.push_back(e);
  std::vector<EdgeId> own1;
  for (EdgeId e : step.reduced.edges())
    if (!shared.count(e)) own1.push_back(e);

  // Cross pairs that must disagree after permuting phi2.
  std::vector<std::pair<EdgeId, EdgeId>> cross;
  for (EdgeId e : own1)
    for (EdgeId f : own2)
      if (facial_distance(g, e, f) <= 2) cross.push_back({e, f});

  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    bool ok = true;
    for (EdgeId e : step.shared_edges) {
      int want = *phi1.color(e);
      int have = perm[*phi2.color(e) - 1];
      if (want != have) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    for (auto& [e, f] : cross) {
      if (*phi1.color(e) == perm[*phi2.color(f) - 1]) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    facial::Coloring phi;
    phi.palette = k;
    for (EdgeId e : step.reduced.edges()) phi.set(e, *phi1.color(e));
    for (EdgeId e : own2) phi.set(e, perm[*phi2.color(e) - 1]);
    if (facial::verify(g, 2, phi).empty()) return phi;
  } while (std::next_permutation(perm.begin(), perm.end()));
  extension_failed(g, "no color permutation merges the split parts");
}

// --- the engine ---------------------------------------------------------------

namespace {

facial::Coloring construct_inner(const PlaneGraph& g, ConstructResult& res);

facial::Coloring construct_connected(const PlaneGraph& g, ConstructResult& res) {
  if (g.edge_count() == 0) {
    facial::Coloring phi;
    phi.palette = 7;
    return phi;
  }
  if (g.edge_count() <= 12) {
    exact::KResult kr = exact::is_k_colorable(g, 2, 7);
    if (kr.status != exact::Status::Colorable)
      throw std::logic_error("base case not 7-colorable; the theorem forbids this");
    return kr.witness;
  }
  std::optional<Configuration> c = detect(g);
  if (!c) {
    ++res.detect_gaps;
    exact::KResult kr = exact::is_k_colorable(g, 2, 7);
    if (kr.status != exact::Status::Colorable)
      throw std::logic_error("detect gap and exact fallback failed");
    return kr.witness;
  }
  if (!recheck(g, *c)) throw std::logic_error("detect produced a witness failing recheck");
  res.trace.push_back({(int)res.trace.size(), *c, g.vertex_count(), g.edge_count()});

  ReductionStep step = apply(g, *c);
  if (step.is_split) {
    facial::Coloring phi1 = construct_inner(step.reduced, res);
    facial::Coloring phi2 = construct_inner(step.part2, res);
    return extend_split(g, step, phi1, phi2);
  }
  if (step.reduced.vertex_count() + step.reduced.edge_count() >=
      g.vertex_count() + g.edge_count())
    throw std::logic_error("reduction did not shrink the graph");
  facial::Coloring phi_reduced = construct_inner(step.reduced, res);
  return extend(g, step, phi_reduced);
}

facial::Coloring construct_inner(const PlaneGraph& g, ConstructResult& res) {
  std::vector<std::vector<EdgeId>> comps = connected_components(g);
  if (comps.size() <= 1) return construct_connected(g, res);
  facial::Coloring phi;
  phi.palette = 7;
  for (const auto& comp : comps) {
    facial::Coloring sub = construct_connected(edge_subgraph(g, comp), res);
    for (auto& [e, col] : sub.assignment) phi.set(e, col);
  }
  return phi;
}

}  // namespace

ConstructResult construct_7_coloring(const PlaneGraph& g) {
  ConstructResult res;
  res.coloring = construct_inner(g, res);
  std::vector<facial::Violation> bad = facial::verify(g, 2, res.coloring);
  if (!bad.empty()) extension_failed(g, "final coloring fails verification");
  return res;
}

std::string render_trace(const std::vector<TraceStep>& trace) {
  std::ostringstream os;
  for (const TraceStep& t : trace) {
    os << "step " << t.index << " kind=" << kind_name(t.config.kind);
    if (t.config.variant != 0) os << "." << t.config.variant;
    os << " witness=";
    bool first = true;
    auto put = [&](char tag, const std::vector<int>& ids) {
      if (ids.empty()) return;
      if (!first) os << ";";
      first = false;
      os << tag;
      for (size_t i = 0; i < ids.size(); ++i) os << (i ? "," : "") << ids[i];
    };
    put('v', t.config.vertices);
    put('e', t.config.edges);
    put('f', t.config.faces);
    os << " |V|=" << t.vertices << " |E|=" << t.edges << "\n";
  }
  return os.str();
}

}  // namespace lfec::reduce
