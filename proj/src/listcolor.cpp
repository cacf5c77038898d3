#include "lfec/listcolor.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>

namespace lfec::listcolor {

ListGraph from_medial(const facial::MedialSubgraph& m, const facial::ListAssignment& la) {
  ListGraph g;
  g.adj = m.adj;
  g.lists = la.lists;
  return g;
}

CoreResult core(const ListGraph& g) {
  const int n = g.size();
  std::vector<bool> removed(n, false);
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = (int)g.adj[v].size();

  CoreResult out;
  for (;;) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (!removed[v] && (int)g.lists[v].size() > deg[v]) {
        pick = v;
        break;
      }
    }
    if (pick < 0) break;
    removed[pick] = true;
    out.removed_order.push_back(pick);
    for (int u : g.adj[pick])
      if (!removed[u]) --deg[u];
  }

  std::vector<int> index(n, -1);
  for (int v = 0; v < n; ++v)
    if (!removed[v]) {
      index[v] = (int)out.kept.size();
      out.kept.push_back(v);
    }
  out.core.adj.assign(out.kept.size(), {});
  out.core.lists.assign(out.kept.size(), {});
  for (size_t i = 0; i < out.kept.size(); ++i) {
    int v = out.kept[i];
    out.core.lists[i] = g.lists[v];
    for (int u : g.adj[v])
      if (index[u] >= 0) out.core.adj[i].push_back(index[u]);
  }
  return out;
}

bool is_gallai_tree(const std::vector<std::vector<int>>& adj) {
  const int n = (int)adj.size();
  if (n == 0) throw GraphError("is_gallai_tree: empty graph");

  // Connectivity check.
  {
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int cnt = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++cnt;
      for (int u : adj[v])
        if (!seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
    }
    if (cnt != n) throw GraphError("is_gallai_tree: disconnected input");
  }

  // Block decomposition (simple graph).
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::pair<int, int>> stk;
  std::vector<std::vector<std::pair<int, int>>> block_edges;
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[v] = low[v] = timer++;
    for (int u : adj[v]) {
      if (u == parent) {
        parent = -2;  // skip the tree edge once; simple graphs have no parallels
        continue;
      }
      if (disc[u] < 0) {
        stk.push_back({v, u});
        dfs(u, v);
        low[v] = std::min(low[v], low[u]);
        if (low[u] >= disc[v]) {
          std::vector<std::pair<int, int>> blk;
          for (;;) {
            auto e = stk.back();
            stk.pop_back();
            blk.push_back(e);
            if (e == std::make_pair(v, u)) break;
          }
          block_edges.push_back(std::move(blk));
        }
      } else if (disc[u] < disc[v]) {
        stk.push_back({v, u});
        low[v] = std::min(low[v], disc[u]);
      }
    }
  };
  dfs(0, -1);

  for (const auto& blk : block_edges) {
    std::set<int> vs;
    for (auto [a, b] : blk) {
      vs.insert(a);
      vs.insert(b);
    }
    const size_t k = vs.size();
    const size_t m = blk.size();
    if (m == k * (k - 1) / 2) continue;                 // complete (includes K2)
    if (m == k && k % 2 == 1 && k >= 3) {
      // cycle block: every vertex has block-degree 2
      std::map<int, int> d;
      for (auto [a, b] : blk) {
        ++d[a];
        ++d[b];
      }
      bool cyc = true;
      for (auto& [v, dv] : d) cyc = cyc && dv == 2;
      if (cyc) continue;                                 // odd cycle
    }
    return false;
  }
  return true;
}

bool theorem_applies(const ListGraph& g) {
  const int n = g.size();
  if (n == 0) return false;
  bool has_free = false;
  for (int v = 0; v < n; ++v) {
    if ((int)g.lists[v].size() < (int)g.adj[v].size()) return false;
    if ((int)g.lists[v].size() > (int)g.adj[v].size()) has_free = true;
  }
  return has_free || !is_gallai_tree(g.adj);
}

namespace {

bool solve_backtrack(const ListGraph& g, std::vector<int>& colors,
                     std::vector<std::vector<int>>& lists) {
  const int n = g.size();
  int pick = -1;
  size_t best = SIZE_MAX;
  for (int v = 0; v < n; ++v)
    if (colors[v] == 0 && lists[v].size() < best) {
      best = lists[v].size();
      pick = v;
    }
  if (pick < 0) return true;
  if (best == 0) return false;

  std::vector<int> candidates = lists[pick];
  for (int c : candidates) {
    colors[pick] = c;
    std::vector<std::pair<int, size_t>> pruned;  // (vertex, position) undo info
    bool dead = false;
    for (int u : g.adj[pick]) {
      if (colors[u] == c) {
        dead = true;
        break;
      }
      if (colors[u] != 0) continue;
      auto it = std::find(lists[u].begin(), lists[u].end(), c);
      if (it != lists[u].end()) {
        pruned.push_back({u, (size_t)(it - lists[u].begin())});
        lists[u].erase(it);
        if (lists[u].empty()) {
          dead = true;  // keep pruning list consistent; fail below
        }
      }
    }
    if (!dead && solve_backtrack(g, colors, lists)) return true;
    for (auto it = pruned.rbegin(); it != pruned.rend(); ++it)
      lists[it->first].insert(lists[it->first].begin() + it->second, c);
    colors[pick] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> l_color(const ListGraph& g) {
  const int n = g.size();
  CoreResult cr = core(g);

  std::vector<int> colors(n, 0);
  if (!cr.kept.empty()) {
    std::vector<int> core_colors(cr.kept.size(), 0);
    std::vector<std::vector<int>> lists = cr.core.lists;
    if (!solve_backtrack(cr.core, core_colors, lists)) return std::nullopt;
    for (size_t i = 0; i < cr.kept.size(); ++i) colors[cr.kept[i]] = core_colors[i];
  }

  // Free vertices re-enter in reverse removal order; each kept a spare color.
  for (auto it = cr.removed_order.rbegin(); it != cr.removed_order.rend(); ++it) {
    int v = *it;
    std::set<int> used;
    for (int u : g.adj[v])
      if (colors[u] != 0) used.insert(colors[u]);
    int chosen = 0;
    for (int c : g.lists[v])
      if (!used.count(c)) {
        chosen = c;
        break;
      }
    if (chosen == 0) return std::nullopt;  // cannot happen for true free removal
    colors[v] = chosen;
  }
  return colors;
}

}  // namespace lfec::listcolor
