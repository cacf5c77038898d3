#include "lfec/facial.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lfec::facial {

bool Coloring::is_total_on(const PlaneGraph& g) const {
  for (EdgeId e : g.edges())
    if (!assignment.count(e)) return false;
  return true;
}

namespace {

// Minimal facial distance and the least face realizing it, for every edge
// pair within distance l. Keyed by ordered pair (min, max).
std::map<std::pair<EdgeId, EdgeId>, std::pair<int, FaceId>> close_pairs(
    const PlaneGraph& g, int l) {
  std::map<std::pair<EdgeId, EdgeId>, std::pair<int, FaceId>> best;
  for (const FaceWalk& w : g.faces()) {
    const int len = (int)w.darts.size();
    for (int i = 0; i < len; ++i) {
      EdgeId e = g.edge_of(w.darts[i]);
      for (int step = 1; step <= std::min(l, len - 1); ++step) {
        EdgeId f = g.edge_of(w.darts[(i + step) % len]);
        if (e == f) continue;
        int d = std::min(step, len - step);
        if (d > l) continue;
        auto key = std::minmax(e, f);
        auto it = best.find(key);
        if (it == best.end() || d < it->second.first ||
            (d == it->second.first && w.face < it->second.second))
          best[key] = {d, w.face};
      }
    }
  }
  return best;
}

std::vector<Violation> check(const PlaneGraph& g, int l, const Coloring& phi,
                             bool require_total) {
  for (auto& [e, c] : phi.assignment) {
    if (!g.has_edge(e)) throw GraphError("coloring mentions unknown edge " + std::to_string(e));
    if (c < 1 || c > phi.palette)
      throw GraphError("color " + std::to_string(c) + " outside palette on edge " +
                       std::to_string(e));
  }
  if (require_total && !phi.is_total_on(g))
    throw GraphError("verify requires a total coloring");

  std::vector<Violation> out;
  for (auto& [key, df] : close_pairs(g, l)) {
    auto ce = phi.color(key.first);
    auto cf = phi.color(key.second);
    if (ce && cf && *ce == *cf)
      out.push_back({key.first, key.second, df.second, df.first});
  }
  return out;
}

}  // namespace

std::vector<Violation> verify(const PlaneGraph& g, int l, const Coloring& phi) {
  return check(g, l, phi, true);
}

std::vector<Violation> verify_partial(const PlaneGraph& g, int l, const Coloring& phi) {
  return check(g, l, phi, false);
}

std::vector<int> available_colors(const PlaneGraph& g, int l, const Coloring& phi,
                                  EdgeId e, int k) {
  if (phi.color(e)) throw GraphError("edge " + std::to_string(e) + " is already colored");
  std::set<int> banned;
  for (EdgeId f : l_facial_neighborhood(g, e, l))
    if (auto c = phi.color(f)) banned.insert(*c);
  std::vector<int> out;
  for (int c = 1; c <= k; ++c)
    if (!banned.count(c)) out.push_back(c);
  return out;
}

int MedialSubgraph::index_of(EdgeId e) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), e);
  if (it == vertices.end() || *it != e) return -1;
  return (int)(it - vertices.begin());
}

MedialSubgraph build_2medial(const PlaneGraph& g, const std::vector<EdgeId>& H, int l) {
  MedialSubgraph m;
  m.vertices = H;
  std::sort(m.vertices.begin(), m.vertices.end());
  m.vertices.erase(std::unique(m.vertices.begin(), m.vertices.end()), m.vertices.end());
  for (EdgeId e : m.vertices)
    if (!g.has_edge(e)) throw GraphError("unknown edge " + std::to_string(e) + " in H");
  const int n = (int)m.vertices.size();
  m.adj.assign(n, {});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int d = facial_distance(g, m.vertices[i], m.vertices[j]);
      if (d <= l) {
        m.adj[i].push_back(j);
        m.adj[j].push_back(i);
      }
    }
  return m;
}

std::pair<MedialSubgraph, ListAssignment> lists_from_partial(
    const PlaneGraph& g, int l, const Coloring& phi, const std::vector<EdgeId>& H, int k) {
  MedialSubgraph m = build_2medial(g, H, l);
  ListAssignment la;
  la.lists.reserve(m.vertices.size());
  for (EdgeId e : m.vertices) la.lists.push_back(available_colors(g, l, phi, e, k));
  return {std::move(m), std::move(la)};
}

bool is_facial_vertex_coloring(const PlaneGraph& g, int l,
                               const std::map<VertexId, int>& colors) {
  for (const FaceWalk& w : g.faces()) {
    const int len = (int)w.darts.size();
    for (int i = 0; i < len; ++i) {
      VertexId u = g.vertex_of(w.darts[i]);
      for (int step = 1; step <= std::min(l, len - 1); ++step) {
        VertexId v = g.vertex_of(w.darts[(i + step) % len]);
        if (u == v) continue;
        if (std::min(step, len - step) > l) continue;
        auto cu = colors.find(u);
        auto cv = colors.find(v);
        if (cu != colors.end() && cv != colors.end() && cu->second == cv->second)
          return false;
      }
    }
  }
  return true;
}

}  // namespace lfec::facial
