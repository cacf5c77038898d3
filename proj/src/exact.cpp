#include "lfec/exact.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <stdexcept>

namespace lfec::exact {

namespace {

struct Searcher {
  const std::vector<std::vector<int>>& adj;
  int n;
  int k;
  bool symmetry;
  long long budget;
  long long nodes = 0;
  std::vector<int> color;          // 0 = uncolored
  std::vector<std::vector<int>> forbid_count;  // [v][c] colored neighbors using c
  int max_used = 0;

  Searcher(const std::vector<std::vector<int>>& a, int k_, bool sym, long long b)
      : adj(a), n((int)a.size()), k(k_), symmetry(sym), budget(b) {
    color.assign(n, 0);
    forbid_count.assign(n, std::vector<int>(k + 1, 0));
  }

  int remaining(int v) const {
    int limit = symmetry ? std::min(k, max_used + 1) : k;
    int r = 0;
    for (int c = 1; c <= limit; ++c)
      if (forbid_count[v][c] == 0) ++r;
    return r;
  }

  void assign(int v, int c) {
    color[v] = c;
    for (int u : adj[v]) ++forbid_count[u][c];
  }
  void unassign(int v, int c) {
    color[v] = 0;
    for (int u : adj[v]) --forbid_count[u][c];
  }

  // true = coloring completed, false = exhausted; throws on budget overrun.
  bool search() {
    if (++nodes > budget) throw std::length_error("node budget exhausted");
    int pick = -1, best = k + 1;
    for (int v = 0; v < n; ++v) {
      if (color[v] != 0) continue;
      int r = remaining(v);
      if (r < best) {
        best = r;
        pick = v;
      }
    }
    if (pick < 0) return true;
    if (best == 0) return false;

    int limit = symmetry ? std::min(k, max_used + 1) : k;
    int saved_max = max_used;
    for (int c = 1; c <= limit; ++c) {
      if (forbid_count[pick][c] != 0) continue;
      assign(pick, c);
      max_used = std::max(max_used, c);
      if (search()) return true;
      max_used = saved_max;
      unassign(pick, c);
    }
    return false;
  }
};

std::vector<int> greedy_clique(const std::vector<std::vector<int>>& adj) {
  const int n = (int)adj.size();
  if (n == 0) return {};
  std::vector<std::vector<char>> mat(n, std::vector<char>(n, 0));
  std::vector<int> deg(n, 0);
  for (int v = 0; v < n; ++v)
    for (int u : adj[v]) {
      mat[v][u] = 1;
      ++deg[v];
    }
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return deg[a] != deg[b] ? deg[a] > deg[b] : a < b;
  });
  std::vector<int> clique;
  for (int v : order) {
    bool ok = true;
    for (int u : clique) ok = ok && mat[v][u];
    if (ok) clique.push_back(v);
  }
  std::sort(clique.begin(), clique.end());
  return clique;
}

}  // namespace

KResult is_k_colorable(const PlaneGraph& g, int l, int k, const Options& opt) {
  KResult out;
  std::vector<EdgeId> edges = g.edges();
  if (edges.empty()) {
    out.status = Status::Colorable;
    out.witness.palette = std::max(k, 0);
    return out;
  }
  if (k < 1) {
    out.status = Status::NotColorable;
    return out;
  }
  facial::MedialSubgraph medial = facial::build_2medial(g, edges, l);

  Searcher s(medial.adj, k, opt.symmetry_breaking, opt.node_budget);
  if (opt.symmetry_breaking) {
    std::vector<int> clique = greedy_clique(medial.adj);
    if ((int)clique.size() > k) {
      out.status = Status::NotColorable;
      return out;
    }
    int c = 1;
    for (int v : clique) {
      s.assign(v, c);
      s.max_used = c;
      ++c;
    }
  }
  try {
    bool ok = s.search();
    out.nodes = s.nodes;
    if (!ok) {
      out.status = Status::NotColorable;
      return out;
    }
    out.status = Status::Colorable;
    out.witness.palette = k;
    for (int i = 0; i < (int)medial.vertices.size(); ++i)
      out.witness.set(medial.vertices[i], s.color[i]);
    if (!facial::verify(g, l, out.witness).empty())
      throw std::logic_error("exact solver produced an invalid witness");
    return out;
  } catch (const std::length_error&) {
    out.status = Status::Unknown;
    out.nodes = s.nodes;
    return out;
  }
}

SolveReport min_colors(const PlaneGraph& g, int l, int kmax, const Options& opt) {
  auto t0 = std::chrono::steady_clock::now();
  SolveReport rep;
  rep.kmax = kmax < 0 ? 3 * l + 3 : kmax;

  if (g.edge_count() == 0) {
    rep.status = Status::Colorable;
    rep.chi = 0;
    rep.seconds = 0.0;
    return rep;
  }

  int lb = 1;
  {
    facial::MedialSubgraph medial = facial::build_2medial(g, g.edges(), l);
    lb = std::max<int>(1, (int)greedy_clique(medial.adj).size());
  }

  std::vector<int> ks;
  for (int k = lb; k <= rep.kmax; ++k) ks.push_back(k);

  std::vector<KResult> results(ks.size());
  if (opt.jobs > 1 && ks.size() > 1) {
    std::vector<std::future<KResult>> futs;
    futs.reserve(ks.size());
    for (int k : ks)
      futs.push_back(std::async(std::launch::async,
                                [&g, l, k, &opt] { return is_k_colorable(g, l, k, opt); }));
    for (size_t i = 0; i < futs.size(); ++i) results[i] = futs[i].get();
  } else {
    for (size_t i = 0; i < ks.size(); ++i) {
      results[i] = is_k_colorable(g, l, ks[i], opt);
      rep.nodes += results[i].nodes;
      if (results[i].status == Status::Colorable) {
        results.resize(i + 1);
        ks.resize(i + 1);
        break;
      }
    }
  }

  rep.status = Status::NotColorable;
  for (size_t i = 0; i < results.size(); ++i) {
    if (opt.jobs > 1) rep.nodes += results[i].nodes;
    if (results[i].status == Status::Unknown) {
      rep.status = Status::Unknown;
      break;
    }
    if (results[i].status == Status::Colorable) {
      rep.status = Status::Colorable;
      rep.chi = ks[i];
      rep.witness = results[i].witness;
      break;
    }
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace lfec::exact
