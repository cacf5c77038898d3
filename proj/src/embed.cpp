#include "lfec/embed.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace lfec {

namespace {

std::string id_str(const char* what, int id) {
  return std::string(what) + " " + std::to_string(id);
}

// Removes d from the rotation cycle it sits in. The vertex may end up with
// an empty rotation (isolated).
void unlink_from_rotation(EmbeddingData& data, DartId d) {
  DartId pred = d;
  while (data.sigma[pred] != d) pred = data.sigma[pred];
  if (pred == d) {
    data.sigma[d] = -1;
  } else {
    data.sigma[pred] = data.sigma[d];
    data.sigma[d] = -1;
  }
}

void kill_edge(EmbeddingData& data, EdgeId e, DartId a, DartId b) {
  unlink_from_rotation(data, a);
  unlink_from_rotation(data, b);
  data.twin[a] = data.twin[b] = -1;
  data.edge_alive[e] = false;
}

std::vector<DartId> rotation_list(const EmbeddingData& data, DartId start) {
  std::vector<DartId> out;
  DartId d = start;
  do {
    out.push_back(d);
    d = data.sigma[d];
  } while (d != start);
  return out;
}

void write_rotation(EmbeddingData& data, const std::vector<DartId>& rot) {
  for (size_t i = 0; i < rot.size(); ++i)
    data.sigma[rot[i]] = rot[(i + 1) % rot.size()];
}

}  // namespace

// --- PlaneGraph -------------------------------------------------------------

PlaneGraph::PlaneGraph(EmbeddingData data) : data_(std::move(data)) {
  validate_and_finalize();
}

void PlaneGraph::validate_and_finalize() {
  const int nd = (int)data_.twin.size();
  if ((int)data_.sigma.size() != nd || (int)data_.vertex_of.size() != nd ||
      (int)data_.edge_of.size() != nd)
    throw GraphError("embedding tables disagree in size");

  n_darts_ = 0;
  for (DartId d = 0; d < nd; ++d) {
    if (!data_.dart_alive(d)) continue;
    ++n_darts_;
    DartId t = data_.twin[d];
    if (t < 0 || t >= nd || t == d)
      throw GraphError("twin is not fixed-point-free at " + id_str("dart", d));
    if (data_.twin[t] != d)
      throw GraphError("twin is not an involution at " + id_str("dart", d));
    if (data_.edge_of[d] != data_.edge_of[t])
      throw GraphError("twin darts disagree on edge at " + id_str("dart", d));
    DartId s = data_.sigma[d];
    if (s < 0 || s >= nd || !data_.dart_alive(s))
      throw GraphError("sigma leaves the graph at " + id_str("dart", d));
    if (data_.vertex_of[s] != data_.vertex_of[d])
      throw GraphError("sigma crosses vertices at " + id_str("dart", d));
    VertexId v = data_.vertex_of[d];
    if (v < 0 || v >= (int)data_.vertex_alive.size() || !data_.vertex_alive[v])
      throw GraphError("dangling " + id_str("dart", d));
    EdgeId e = data_.edge_of[d];
    if (e < 0 || e >= (int)data_.edge_alive.size() || !data_.edge_alive[e])
      throw GraphError("dart on dead edge: " + id_str("dart", d));
  }

  // sigma must be injective on alive darts (a permutation).
  {
    std::vector<char> seen(nd, 0);
    for (DartId d = 0; d < nd; ++d) {
      if (!data_.dart_alive(d)) continue;
      DartId s = data_.sigma[d];
      if (seen[s]) throw GraphError("duplicate dart in rotations: " + id_str("dart", s));
      seen[s] = 1;
    }
  }

  // Each vertex's darts must form a single sigma orbit; each edge exactly
  // two darts.
  std::map<VertexId, std::vector<DartId>> at_vertex;
  std::map<EdgeId, std::vector<DartId>> at_edge;
  for (DartId d = 0; d < nd; ++d) {
    if (!data_.dart_alive(d)) continue;
    at_vertex[data_.vertex_of[d]].push_back(d);
    at_edge[data_.edge_of[d]].push_back(d);
  }
  for (auto& [e, ds] : at_edge)
    if (ds.size() != 2) throw GraphError("edge without dart pair: " + id_str("edge", e));
  for (auto& [v, ds] : at_vertex) {
    size_t len = 0;
    DartId d = ds.front();
    DartId cur = d;
    do {
      ++len;
      cur = data_.sigma[cur];
    } while (cur != d && len <= ds.size());
    if (len != ds.size())
      throw GraphError("rotation at " + id_str("vertex", v) + " splits into several cycles");
  }

  n_vertices_ = 0;
  for (bool a : data_.vertex_alive) n_vertices_ += a ? 1 : 0;
  n_edges_ = 0;
  for (bool a : data_.edge_alive) n_edges_ += a ? 1 : 0;

  // Faces: orbits of phi = sigma . twin.
  face_of_.assign(nd, -1);
  faces_.clear();
  for (DartId d = 0; d < nd; ++d) {
    if (!data_.dart_alive(d) || face_of_[d] >= 0) continue;
    FaceWalk w;
    w.face = (FaceId)faces_.size();
    DartId cur = d;
    do {
      face_of_[cur] = w.face;
      w.darts.push_back(cur);
      cur = data_.sigma[data_.twin[cur]];
    } while (cur != d);
    faces_.push_back(std::move(w));
  }

  // Euler per dart component.
  std::vector<char> visited(nd, 0);
  for (DartId d0 = 0; d0 < nd; ++d0) {
    if (!data_.dart_alive(d0) || visited[d0]) continue;
    std::set<VertexId> vs;
    std::set<EdgeId> es;
    std::set<FaceId> fs;
    std::vector<DartId> stack{d0};
    visited[d0] = 1;
    while (!stack.empty()) {
      DartId d = stack.back();
      stack.pop_back();
      vs.insert(data_.vertex_of[d]);
      es.insert(data_.edge_of[d]);
      fs.insert(face_of_[d]);
      for (DartId n : {data_.twin[d], data_.sigma[d]}) {
        if (!visited[n]) {
          visited[n] = 1;
          stack.push_back(n);
        }
      }
    }
    long euler = (long)vs.size() - (long)es.size() + (long)fs.size();
    if (euler != 2)
      throw GraphError("component at dart " + std::to_string(d0) +
                       " is not plane: V-E+F = " + std::to_string(euler));
  }
}

std::vector<DartId> PlaneGraph::darts() const {
  std::vector<DartId> out;
  for (DartId d = 0; d < (int)data_.twin.size(); ++d)
    if (data_.dart_alive(d)) out.push_back(d);
  return out;
}

std::vector<VertexId> PlaneGraph::vertices() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < (int)data_.vertex_alive.size(); ++v)
    if (data_.vertex_alive[v]) out.push_back(v);
  return out;
}

std::vector<EdgeId> PlaneGraph::edges() const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < (int)data_.edge_alive.size(); ++e)
    if (data_.edge_alive[e]) out.push_back(e);
  return out;
}

std::vector<DartId> PlaneGraph::rotation(VertexId v) const {
  if (!has_vertex(v)) throw GraphError("unknown " + id_str("vertex", v));
  DartId least = -1;
  for (DartId d = 0; d < (int)data_.twin.size(); ++d)
    if (data_.dart_alive(d) && data_.vertex_of[d] == v) {
      least = d;
      break;
    }
  if (least < 0) return {};
  return rotation_list(data_, least);
}

int PlaneGraph::degree(VertexId v) const { return (int)rotation(v).size(); }

std::pair<DartId, DartId> PlaneGraph::edge_darts(EdgeId e) const {
  if (!has_edge(e)) throw GraphError("unknown " + id_str("edge", e));
  DartId a = -1, b = -1;
  for (DartId d = 0; d < (int)data_.twin.size(); ++d)
    if (data_.dart_alive(d) && data_.edge_of[d] == e) {
      if (a < 0)
        a = d;
      else
        b = d;
    }
  return {a, b};
}

std::pair<VertexId, VertexId> PlaneGraph::edge_endpoints(EdgeId e) const {
  auto [a, b] = edge_darts(e);
  return {data_.vertex_of[a], data_.vertex_of[b]};
}

bool PlaneGraph::is_loop(EdgeId e) const {
  auto [u, v] = edge_endpoints(e);
  return u == v;
}

std::vector<EdgeId> PlaneGraph::face_edges(FaceId f) const {
  std::vector<EdgeId> out;
  for (DartId d : faces_[f].darts) out.push_back(data_.edge_of[d]);
  return out;
}

std::vector<VertexId> PlaneGraph::face_vertices(FaceId f) const {
  std::vector<VertexId> out;
  for (DartId d : faces_[f].darts) out.push_back(data_.vertex_of[d]);
  return out;
}

bool PlaneGraph::is_connected() const {
  std::vector<VertexId> vs = vertices();
  if (vs.empty()) return true;
  int covered = 0;
  for (VertexId v : vs)
    if (!rotation(v).empty()) ++covered;
  int isolated = (int)vs.size() - covered;
  int comps = (int)connected_components(*this).size();
  return comps + isolated <= 1;
}

// --- constructors -----------------------------------------------------------

PlaneGraph build_from_rotation(const std::vector<RotationSpec>& rotations,
                               const std::vector<EdgeSpec>& edges) {
  int max_dart = -1, max_vertex = -1, max_edge = -1;
  for (const auto& es : edges) {
    max_dart = std::max({max_dart, es.a, es.b});
    max_edge = std::max(max_edge, es.edge);
  }
  for (const auto& rs : rotations) {
    max_vertex = std::max(max_vertex, rs.vertex);
    for (DartId d : rs.darts) max_dart = std::max(max_dart, d);
  }
  EmbeddingData data;
  data.twin.assign(max_dart + 1, -1);
  data.sigma.assign(max_dart + 1, -1);
  data.vertex_of.assign(max_dart + 1, -1);
  data.edge_of.assign(max_dart + 1, -1);
  data.vertex_alive.assign(max_vertex + 1, false);
  data.edge_alive.assign(max_edge + 1, false);

  for (const auto& es : edges) {
    if (es.a < 0 || es.b < 0 || es.a == es.b)
      throw GraphError("pairing is not a fixed-point-free involution at " +
                       id_str("dart", es.a));
    if (data.twin[es.a] >= 0) throw GraphError("duplicate " + id_str("dart", es.a));
    if (data.twin[es.b] >= 0) throw GraphError("duplicate " + id_str("dart", es.b));
    if (es.edge < 0 || data.edge_alive[es.edge])
      throw GraphError("duplicate " + id_str("edge", es.edge));
    data.twin[es.a] = es.b;
    data.twin[es.b] = es.a;
    data.edge_of[es.a] = data.edge_of[es.b] = es.edge;
    data.edge_alive[es.edge] = true;
  }
  for (const auto& rs : rotations) {
    if (rs.vertex < 0 || data.vertex_alive[rs.vertex])
      throw GraphError("duplicate " + id_str("vertex", rs.vertex));
    data.vertex_alive[rs.vertex] = true;
    for (size_t i = 0; i < rs.darts.size(); ++i) {
      DartId d = rs.darts[i];
      if (d < 0 || d > max_dart || data.twin[d] < 0)
        throw GraphError("dangling " + id_str("dart", d));
      if (data.vertex_of[d] >= 0)
        throw GraphError("dart in two rotations: " + id_str("dart", d));
      data.vertex_of[d] = rs.vertex;
      data.sigma[d] = rs.darts[(i + 1) % rs.darts.size()];
    }
  }
  for (DartId d = 0; d <= max_dart; ++d)
    if (data.twin[d] >= 0 && data.vertex_of[d] < 0)
      throw GraphError("dart missing from every rotation: " + id_str("dart", d));
  return PlaneGraph(std::move(data));
}

PlaneGraph build_from_faces(const std::vector<std::vector<FaceSpecEntry>>& faces) {
  // One dart per face slot. Pair the two slots of each edge as twins and
  // read sigma off consecutive walk positions: sigma(twin(d_i)) = d_{i+1}.
  struct Slot {
    VertexId from, to;
    EdgeId edge;
  };
  std::vector<Slot> slots;
  for (const auto& f : faces)
    for (const auto& ent : f) slots.push_back({ent.from, ent.to, ent.edge});
  const int nd = (int)slots.size();

  std::map<EdgeId, std::vector<DartId>> by_edge;
  for (DartId d = 0; d < nd; ++d) by_edge[slots[d].edge].push_back(d);

  int max_vertex = -1, max_edge = -1;
  for (const auto& s : slots) {
    max_vertex = std::max({max_vertex, s.from, s.to});
    max_edge = std::max(max_edge, s.edge);
  }
  EmbeddingData data;
  data.twin.assign(nd, -1);
  data.sigma.assign(nd, -1);
  data.vertex_of.assign(nd, -1);
  data.edge_of.assign(nd, -1);
  data.vertex_alive.assign(max_vertex + 1, false);
  data.edge_alive.assign(max_edge + 1, false);

  for (auto& [e, ds] : by_edge) {
    if (ds.size() != 2)
      throw GraphError("edge not used exactly twice in face list: " + id_str("edge", e));
    const Slot& s0 = slots[ds[0]];
    const Slot& s1 = slots[ds[1]];
    bool opposite = (s0.from == s1.to && s0.to == s1.from);
    bool loop_pair = (s0.from == s0.to && s1.from == s1.to && s0.from == s1.from);
    if (!opposite && !loop_pair)
      throw GraphError("face list uses edge with inconsistent orientation: " +
                       id_str("edge", e));
    data.twin[ds[0]] = ds[1];
    data.twin[ds[1]] = ds[0];
    data.edge_of[ds[0]] = data.edge_of[ds[1]] = e;
    data.edge_alive[e] = true;
  }
  for (DartId d = 0; d < nd; ++d) {
    data.vertex_of[d] = slots[d].from;
    data.vertex_alive[slots[d].from] = true;
    data.vertex_alive[slots[d].to] = true;
  }
  // sigma from walk succession.
  int base = 0;
  for (const auto& f : faces) {
    int k = (int)f.size();
    for (int i = 0; i < k; ++i) {
      DartId d = base + i;
      DartId next = base + (i + 1) % k;
      DartId t = data.twin[d];
      if (data.sigma[t] >= 0)
        throw GraphError("face list overdetermines rotation at dart " + std::to_string(t));
      data.sigma[t] = next;
    }
    base += k;
  }
  return PlaneGraph(std::move(data));
}

PlaneGraph build_from_simple_faces(const std::vector<std::vector<VertexId>>& faces) {
  std::map<std::pair<VertexId, VertexId>, EdgeId> ids;
  std::vector<std::vector<FaceSpecEntry>> out;
  EdgeId next = 0;
  for (const auto& f : faces) {
    std::vector<FaceSpecEntry> walk;
    int k = (int)f.size();
    for (int i = 0; i < k; ++i) {
      VertexId a = f[i], b = f[(i + 1) % k];
      auto key = std::minmax(a, b);
      auto it = ids.find(key);
      EdgeId e = (it == ids.end()) ? (ids[key] = next++) : it->second;
      walk.push_back({a, b, e});
    }
    out.push_back(std::move(walk));
  }
  return build_from_faces(out);
}

// --- facial metrics ---------------------------------------------------------

int facial_distance(const PlaneGraph& g, EdgeId e, EdgeId f) {
  if (!g.has_edge(e)) throw GraphError("unknown " + id_str("edge", e));
  if (!g.has_edge(f)) throw GraphError("unknown " + id_str("edge", f));
  if (e == f) throw GraphError("facial_distance needs distinct edges");
  int best = kInfiniteDistance;
  for (const FaceWalk& w : g.faces()) {
    const int len = (int)w.darts.size();
    std::vector<int> pe, pf;
    for (int i = 0; i < len; ++i) {
      EdgeId x = g.edge_of(w.darts[i]);
      if (x == e) pe.push_back(i);
      if (x == f) pf.push_back(i);
    }
    for (int i : pe)
      for (int j : pf) {
        int d = std::abs(i - j);
        d = std::min(d, len - d);
        best = std::min(best, d);
      }
  }
  return best;
}

std::vector<EdgeId> l_facial_neighborhood(const PlaneGraph& g, EdgeId e, int l) {
  if (!g.has_edge(e)) throw GraphError("unknown " + id_str("edge", e));
  std::set<EdgeId> out;
  for (const FaceWalk& w : g.faces()) {
    const int len = (int)w.darts.size();
    for (int i = 0; i < len; ++i) {
      if (g.edge_of(w.darts[i]) != e) continue;
      for (int step = 1; step <= std::min(l, len - 1); ++step) {
        out.insert(g.edge_of(w.darts[(i + step) % len]));
        out.insert(g.edge_of(w.darts[(i - step + len) % len]));
      }
    }
  }
  out.erase(e);
  return {out.begin(), out.end()};
}

int vertex_facial_distance(const PlaneGraph& g, VertexId u, VertexId v) {
  int best = kInfiniteDistance;
  for (const FaceWalk& w : g.faces()) {
    const int len = (int)w.darts.size();
    std::vector<int> pu, pv;
    for (int i = 0; i < len; ++i) {
      VertexId x = g.vertex_of(w.darts[i]);
      if (x == u) pu.push_back(i);
      if (x == v) pv.push_back(i);
    }
    for (int i : pu)
      for (int j : pv) {
        int d = std::abs(i - j);
        d = std::min(d, len - d);
        best = std::min(best, d);
      }
  }
  return best;
}

// --- surgeries --------------------------------------------------------------

PlaneGraph delete_edge(const PlaneGraph& g, EdgeId e) {
  if (!g.has_edge(e)) throw GraphError("unknown " + id_str("edge", e));
  EmbeddingData data = g.raw();
  auto [a, b] = g.edge_darts(e);
  kill_edge(data, e, a, b);
  return PlaneGraph(std::move(data));
}

PlaneGraph delete_vertex(const PlaneGraph& g, VertexId v) {
  if (!g.has_vertex(v)) throw GraphError("unknown " + id_str("vertex", v));
  EmbeddingData data = g.raw();
  std::set<EdgeId> incident;
  for (DartId d : g.rotation(v)) incident.insert(g.edge_of(d));
  for (EdgeId e : incident) {
    auto [a, b] = g.edge_darts(e);
    kill_edge(data, e, a, b);
  }
  data.vertex_alive[v] = false;
  return PlaneGraph(std::move(data));
}

EdgeIdentification identify_edges(const PlaneGraph& g, EdgeId e, EdgeId f,
                                  std::pair<VertexId, VertexId> end_map1,
                                  std::pair<VertexId, VertexId> end_map2,
                                  FaceId through) {
  if (!g.has_edge(e) || !g.has_edge(f) || e == f)
    throw GraphError("identify_edges needs two distinct edges");
  auto [eu, ev] = g.edge_endpoints(e);
  auto [fu, fv] = g.edge_endpoints(f);
  std::set<VertexId> ends{eu, ev, fu, fv};
  if (ends.size() != 4) throw GraphError("identify_edges: endpoints not distinct");

  auto maps_to = [&](VertexId a, VertexId b) {
    return (end_map1.first == a && end_map1.second == b) ||
           (end_map2.first == a && end_map2.second == b);
  };
  if (!((maps_to(eu, fu) && maps_to(ev, fv)) || (maps_to(eu, fv) && maps_to(ev, fu))))
    throw GraphError("identify_edges: endpoint mapping does not pair e onto f");

  // Locate co-facial darts a (of e) and b (of f) with head(a) ~ tail(b) and
  // tail(a) ~ head(b) matching the requested mapping.
  auto [ea0, ea1] = g.edge_darts(e);
  auto [fb0, fb1] = g.edge_darts(f);
  DartId a = -1, b = -1;
  bool cofacial = false;
  for (DartId ca : {ea0, ea1}) {
    for (DartId cb : {fb0, fb1}) {
      if (g.face_of(ca) != g.face_of(cb)) continue;
      if (through >= 0 && g.face_of(ca) != through) continue;
      cofacial = true;
      if (maps_to(g.head_of(ca), g.vertex_of(cb)) &&
          maps_to(g.vertex_of(ca), g.head_of(cb))) {
        a = ca;
        b = cb;
        break;
      }
    }
    if (a >= 0) break;
  }
  if (!cofacial) throw GraphError("identify_edges: edges not co-facial");
  if (a < 0) throw GraphError("identify_edges: orientation mismatch with the face walk");

  EmbeddingData data = g.raw();
  DartId at = g.twin(a);
  DartId bt = g.twin(b);
  VertexId dying1 = g.head_of(a);   // merges into tail(b)
  VertexId live1 = g.vertex_of(b);
  VertexId dying2 = g.vertex_of(a); // merges into head(b)
  VertexId live2 = g.head_of(b);

  // Splice: in dying1's rotation the dart of e (= at) is replaced by live1's
  // whole rotation opened at the merged dart b (b first); at the other end
  // the mirror image applies, with the merged dart bt closing the block.
  auto splice = [&](VertexId dying, DartId dead_dart, VertexId live, DartId open_at) {
    std::vector<DartId> rot = rotation_list(data, dead_dart);
    std::vector<DartId> incoming = rotation_list(data, open_at);
    std::vector<DartId> merged;
    for (DartId d : rot) {
      if (d == dead_dart)
        merged.insert(merged.end(), incoming.begin(), incoming.end());
      else
        merged.push_back(d);
    }
    write_rotation(data, merged);
    for (DartId d : merged) data.vertex_of[d] = live;
    data.vertex_alive[dying] = false;
  };
  splice(dying1, at, live1, b);
  splice(dying2, a, live2, data.sigma[bt]);

  data.twin[a] = data.twin[at] = -1;
  data.edge_alive[e] = false;

  EdgeIdentification out{PlaneGraph(std::move(data)), f, {{e, f}}};
  return out;
}

PlaneGraph identify_vertices(const PlaneGraph& g, VertexId u, VertexId v, FaceId through) {
  if (!g.has_vertex(u) || !g.has_vertex(v) || u == v)
    throw GraphError("identify_vertices needs two distinct vertices");
  for (DartId d : g.rotation(u))
    if (g.head_of(d) == v)
      throw GraphError("identify_vertices: vertices are adjacent");

  // First corner of u and of v on the least common face.
  DartId ru = -1, rv = -1;
  for (const FaceWalk& w : g.faces()) {
    if (through >= 0 && w.face != through) continue;
    ru = rv = -1;
    const int len = (int)w.darts.size();
    for (int i = 0; i < len && (ru < 0 || rv < 0); ++i) {
      DartId arriving = w.darts[(i - 1 + len) % len];
      VertexId corner = g.vertex_of(w.darts[i]);
      if (corner == u && ru < 0) ru = g.twin(arriving);
      if (corner == v && rv < 0) rv = g.twin(arriving);
    }
    if (ru >= 0 && rv >= 0) break;
  }
  if (ru < 0 || rv < 0) throw GraphError("identify_vertices: vertices not co-facial");

  EmbeddingData data = g.raw();
  std::swap(data.sigma[ru], data.sigma[rv]);
  for (DartId d : g.rotation(v)) data.vertex_of[d] = u;
  data.vertex_alive[v] = false;
  return PlaneGraph(std::move(data));
}

PlaneGraph contract_face(const PlaneGraph& g, FaceId f) {
  if (f < 0 || f >= g.face_count()) throw GraphError("unknown face " + std::to_string(f));
  if (g.face_length(f) != 3) throw GraphError("contract_face: wrong face length");
  std::vector<VertexId> vs = g.face_vertices(f);
  if (std::set<VertexId>(vs.begin(), vs.end()).size() != 3)
    throw GraphError("contract_face: boundary vertices not distinct");
  const std::vector<DartId>& walk = g.walk(f).darts;  // g_i runs w_i -> w_{i+1}

  // The merged rotation concatenates the three outside fans in walk order;
  // every corner away from the triangle survives, so facial adjacencies of
  // the remaining edges are preserved.
  EmbeddingData data = g.raw();
  VertexId target = *std::min_element(vs.begin(), vs.end());
  std::vector<DartId> merged;
  for (int i = 2; i >= 0; --i) {
    // out-darts of w_{i+1}: g_{i+1} and twin(g_i); fan = the rest, read from
    // sigma(g_{i+1}) up to the dart before twin(g_i)
    DartId gi1 = walk[(i + 1) % 3];
    DartId ti = data.twin[walk[i]];
    for (DartId d = data.sigma[gi1]; d != ti; d = data.sigma[d]) merged.push_back(d);
  }
  for (EdgeId e : g.face_edges(f)) {
    auto [a, b] = g.edge_darts(e);
    data.twin[a] = data.twin[b] = -1;
    data.edge_alive[e] = false;
  }
  for (VertexId v : vs) data.vertex_alive[v] = false;
  data.vertex_alive[target] = true;
  if (!merged.empty()) write_rotation(data, merged);
  for (DartId d : merged) data.vertex_of[d] = target;
  return PlaneGraph(std::move(data));
}

// --- cycles and connectivity -------------------------------------------------

namespace {

// At each cycle vertex, darts strictly between twin(d_i) and d_{i+1} in
// rotation order fall on one side of the cycle, the rest on the other.
std::map<DartId, int> cycle_dart_sides(const PlaneGraph& g, const std::vector<DartId>& cyc) {
  const int k = (int)cyc.size();
  std::set<EdgeId> cycle_edges;
  for (DartId d : cyc) cycle_edges.insert(g.edge_of(d));
  std::map<DartId, int> side;
  for (int i = 0; i < k; ++i) {
    DartId din = cyc[i];
    DartId dout = cyc[(i + 1) % k];
    DartId from = g.twin(din);  // dart out of head(din)
    int s = 0;
    for (DartId d = g.sigma(from); d != from; d = g.sigma(d)) {
      if (d == dout) {
        s = 1;
        continue;
      }
      if (cycle_edges.count(g.edge_of(d))) continue;  // bridges of the walk itself
      side[d] = s;
    }
  }
  return side;
}

// Vertex counts strictly on each side of the cycle.
std::pair<int, int> side_counts(const PlaneGraph& g, const std::vector<DartId>& cyc) {
  std::set<VertexId> on_cycle;
  for (DartId d : cyc) on_cycle.insert(g.vertex_of(d));
  std::map<DartId, int> side = cycle_dart_sides(g, cyc);

  std::set<VertexId> assigned;
  int count_a = 0, count_b = 0;
  for (auto& [d, s] : side) {
    VertexId w = g.head_of(d);
    if (on_cycle.count(w) || assigned.count(w)) continue;
    int n = 0;
    std::vector<VertexId> stack{w};
    assigned.insert(w);
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      ++n;
      for (DartId dd : g.rotation(x)) {
        VertexId y = g.head_of(dd);
        if (on_cycle.count(y) || assigned.count(y)) continue;
        assigned.insert(y);
        stack.push_back(y);
      }
    }
    (s == 0 ? count_a : count_b) += n;
  }
  return {count_a, count_b};
}

}  // namespace

std::vector<DartId> cycle_darts(const PlaneGraph& g, const std::vector<VertexId>& vertices,
                                const std::vector<EdgeId>& edges) {
  const int k = (int)vertices.size();
  if ((int)edges.size() != k) throw GraphError("cycle_darts: vertex/edge counts differ");
  std::vector<DartId> out;
  for (int i = 0; i < k; ++i) {
    auto [a, b] = g.edge_darts(edges[i]);
    if (g.vertex_of(a) == vertices[i])
      out.push_back(a);
    else if (g.vertex_of(b) == vertices[i])
      out.push_back(b);
    else
      throw GraphError("cycle_darts: edge does not leave the stated vertex");
  }
  return out;
}

CycleSides cycle_side_edges(const PlaneGraph& g, const std::vector<DartId>& cyc) {
  std::set<EdgeId> cycle_edges;
  std::set<VertexId> on_cycle;
  for (DartId d : cyc) {
    cycle_edges.insert(g.edge_of(d));
    on_cycle.insert(g.vertex_of(d));
    on_cycle.insert(g.head_of(d));
  }
  std::map<DartId, int> dart_side = cycle_dart_sides(g, cyc);

  // Component side for vertices off the cycle.
  std::map<VertexId, int> comp_side;
  for (auto& [d, s] : dart_side) {
    VertexId w = g.head_of(d);
    if (on_cycle.count(w) || comp_side.count(w)) continue;
    std::vector<VertexId> stack{w};
    comp_side[w] = s;
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (DartId dd : g.rotation(x)) {
        VertexId y = g.head_of(dd);
        if (on_cycle.count(y) || comp_side.count(y)) continue;
        comp_side[y] = s;
        stack.push_back(y);
      }
    }
  }

  CycleSides out;
  for (EdgeId e : g.edges()) {
    if (cycle_edges.count(e)) continue;
    auto [da, db] = g.edge_darts(e);
    int s;
    if (on_cycle.count(g.vertex_of(da)))
      s = dart_side.at(da);
    else if (on_cycle.count(g.vertex_of(db)))
      s = dart_side.at(db);
    else
      s = comp_side.at(g.vertex_of(da));
    (s == 0 ? out.side_a : out.side_b).push_back(e);
  }
  return out;
}

std::vector<CycleInfo> separating_cycles_up_to(const PlaneGraph& g, int max_len) {
  std::set<std::vector<EdgeId>> seen;
  std::vector<CycleInfo> out;

  auto consider = [&](const std::vector<DartId>& cyc) {
    std::vector<EdgeId> edges;
    for (DartId d : cyc) edges.push_back(g.edge_of(d));
    std::vector<EdgeId> key = edges;
    std::sort(key.begin(), key.end());
    if (seen.count(key)) return;
    seen.insert(key);
    auto [a, b] = side_counts(g, cyc);
    if (a == 0 || b == 0) return;
    CycleInfo info;
    info.edges = edges;  // cycle order, parallel to vertices
    for (DartId d : cyc) info.vertices.push_back(g.vertex_of(d));
    info.side_a_vertices = a;
    info.side_b_vertices = b;
    out.push_back(std::move(info));
  };

  // Loops.
  for (EdgeId e : g.edges())
    if (g.is_loop(e)) consider({g.edge_darts(e).first});

  // Simple cycles of length 2..max_len: dart paths with distinct vertices
  // and edges, rooted at their least vertex.
  std::vector<DartId> path;
  std::set<VertexId> used_v;
  std::set<EdgeId> used_e;
  VertexId root = -1;

  std::function<void(VertexId)> dfs = [&](VertexId at) {
    for (DartId d : g.rotation(at)) {
      VertexId to = g.head_of(d);
      EdgeId e = g.edge_of(d);
      if (used_e.count(e) || to < root) continue;
      if (to == root) {
        if ((int)path.size() >= 1) {
          path.push_back(d);
          if ((int)path.size() >= 2) consider(path);
          path.pop_back();
        }
        continue;
      }
      if (used_v.count(to) || (int)path.size() + 1 >= max_len) continue;
      path.push_back(d);
      used_v.insert(to);
      used_e.insert(e);
      dfs(to);
      used_e.erase(e);
      used_v.erase(to);
      path.pop_back();
    }
  };

  if (max_len >= 2) {
    for (VertexId s : g.vertices()) {
      root = s;
      used_v = {s};
      dfs(s);
    }
  }
  std::sort(out.begin(), out.end(), [](const CycleInfo& x, const CycleInfo& y) {
    std::vector<EdgeId> kx = x.edges, ky = y.edges;
    std::sort(kx.begin(), kx.end());
    std::sort(ky.begin(), ky.end());
    return kx < ky;
  });
  return out;
}

namespace {

struct BlockFinder {
  const PlaneGraph& g;
  std::map<VertexId, int> disc, low;
  std::set<VertexId> cuts;
  std::vector<std::pair<VertexId, EdgeId>> edge_stack;
  std::vector<std::vector<EdgeId>> blocks;
  int timer = 0;

  explicit BlockFinder(const PlaneGraph& graph) : g(graph) {}

  void pop_block(EdgeId until) {
    std::set<EdgeId> blk;
    while (!edge_stack.empty()) {
      EdgeId e = edge_stack.back().second;
      edge_stack.pop_back();
      blk.insert(e);
      if (e == until) break;
    }
    blocks.push_back(std::vector<EdgeId>(blk.begin(), blk.end()));
  }

  void run(VertexId root) {
    // Iterative DFS over darts; parallel edges are distinct, loops skipped
    // (they form their own trivial blocks).
    struct Frame {
      VertexId v;
      DartId via_edge_dart;  // dart used to enter v (-1 at root)
      std::vector<DartId> rot;
      size_t idx = 0;
    };
    std::vector<Frame> stack;
    stack.push_back({root, -1, g.rotation(root), 0});
    disc[root] = low[root] = timer++;
    int root_children = 0;

    while (!stack.empty()) {
      Frame& fr = stack.back();
      if (fr.idx < fr.rot.size()) {
        DartId d = fr.rot[fr.idx++];
        VertexId to = g.head_of(d);
        EdgeId e = g.edge_of(d);
        if (to == fr.v) continue;  // loop
        if (fr.via_edge_dart >= 0 && e == g.edge_of(fr.via_edge_dart)) continue;
        if (!disc.count(to)) {
          edge_stack.push_back({fr.v, e});
          disc[to] = low[to] = timer++;
          if (fr.v == root) ++root_children;
          stack.push_back({to, d, g.rotation(to), 0});
        } else if (disc[to] < disc[fr.v]) {
          edge_stack.push_back({fr.v, e});
          low[fr.v] = std::min(low[fr.v], disc[to]);
        }
      } else {
        VertexId v = fr.v;
        DartId via = fr.via_edge_dart;
        stack.pop_back();
        if (via < 0) break;
        VertexId parent = stack.back().v;
        low[parent] = std::min(low[parent], low[v]);
        if (low[v] >= disc[parent]) {
          if (parent != root) cuts.insert(parent);
          pop_block(g.edge_of(via));
        }
      }
    }
    if (root_children >= 2) cuts.insert(root);
  }
};

}  // namespace

std::vector<VertexId> cutvertices(const PlaneGraph& g) {
  BlockFinder bf(g);
  for (VertexId v : g.vertices())
    if (!bf.disc.count(v) && !g.rotation(v).empty()) bf.run(v);
  return {bf.cuts.begin(), bf.cuts.end()};
}

std::vector<std::vector<EdgeId>> blocks(const PlaneGraph& g) {
  BlockFinder bf(g);
  for (VertexId v : g.vertices())
    if (!bf.disc.count(v) && !g.rotation(v).empty()) bf.run(v);
  for (EdgeId e : g.edges())
    if (g.is_loop(e)) bf.blocks.push_back({e});
  std::sort(bf.blocks.begin(), bf.blocks.end());
  return bf.blocks;
}

bool is_2_connected(const PlaneGraph& g) {
  return g.is_connected() && g.vertex_count() >= 2 && blocks(g).size() == 1;
}

std::vector<std::vector<EdgeId>> connected_components(const PlaneGraph& g) {
  std::vector<std::vector<EdgeId>> out;
  std::set<DartId> visited;
  for (DartId d0 : g.darts()) {
    if (visited.count(d0)) continue;
    std::set<EdgeId> edges;
    std::vector<DartId> stack{d0};
    visited.insert(d0);
    while (!stack.empty()) {
      DartId d = stack.back();
      stack.pop_back();
      edges.insert(g.edge_of(d));
      for (DartId n : {g.twin(d), g.sigma(d)})
        if (!visited.count(n)) {
          visited.insert(n);
          stack.push_back(n);
        }
    }
    out.push_back(std::vector<EdgeId>(edges.begin(), edges.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

PlaneGraph edge_subgraph(const PlaneGraph& g, const std::vector<EdgeId>& keep) {
  std::set<EdgeId> keep_set(keep.begin(), keep.end());
  EmbeddingData data = g.raw();
  for (EdgeId e : g.edges()) {
    if (keep_set.count(e)) continue;
    auto [a, b] = g.edge_darts(e);
    kill_edge(data, e, a, b);
  }
  std::set<VertexId> touched;
  for (EdgeId e : keep) {
    auto [u, v] = g.edge_endpoints(e);
    touched.insert(u);
    touched.insert(v);
  }
  for (VertexId v : g.vertices())
    if (!touched.count(v)) data.vertex_alive[v] = false;
  return PlaneGraph(std::move(data));
}

// --- medial -----------------------------------------------------------------

PlaneGraph medial_graph(const PlaneGraph& g) {
  if (g.edge_count() == 0) throw GraphError("medial_graph: empty edge set");
  if (!g.is_connected()) throw GraphError("medial_graph: graph not connected");

  // Medial vertex ids = edge ids of g. Corner after dart d becomes medial
  // edge id d with darts 2d (at edge_of(d)) and 2d+1 (at edge_of(phi(d))).
  const int nd = (int)g.raw().twin.size();
  std::vector<DartId> phi_inv(nd, -1);
  for (DartId d : g.darts()) phi_inv[g.phi(d)] = d;

  std::vector<RotationSpec> rotations;
  std::vector<EdgeSpec> edges;
  for (EdgeId e : g.edges()) {
    auto [d, dt] = g.edge_darts(e);
    rotations.push_back(
        {e, {2 * d, 2 * phi_inv[dt] + 1, 2 * dt, 2 * phi_inv[d] + 1}});
  }
  for (DartId d : g.darts()) edges.push_back({d, 2 * d, 2 * d + 1});
  return build_from_rotation(rotations, edges);
}

}  // namespace lfec
