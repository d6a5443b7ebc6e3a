#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "cliquelab/cliques.hpp"  // Ternary
#include "cliquelab/graph.hpp"

namespace cliquelab {

constexpr std::uint64_t kDefaultHamiltonianBudget = 10'000'000;
constexpr int kDefaultPlanarOrderCap = 16;

namespace detail {

struct HamiltonianSearch {
  const Graph& g;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool exhausted = false;
  std::vector<int> path;
  std::vector<bool> used;

  bool extend() {
    if (++nodes > budget) {
      exhausted = true;
      return false;
    }
    int cur = path.back();
    if (static_cast<int>(path.size()) == g.order()) return g.adjacent(cur, path[0]);
    for (int v = 0; v < g.order(); ++v) {
      if (used[v] || !g.adjacent(cur, v)) continue;
      used[v] = true;
      path.push_back(v);
      if (extend()) return true;
      path.pop_back();
      used[v] = false;
      if (exhausted) return false;
    }
    return false;
  }
};

}  // namespace detail

/// Backtracking search for a Hamiltonian cycle; yes/no when the search
/// completes within the node budget, unknown otherwise.
inline Ternary is_hamiltonian(const Graph& g,
                              std::uint64_t node_budget = kDefaultHamiltonianBudget) {
  if (node_budget == 0) throw std::invalid_argument("node_budget must be positive");
  const int n = g.order();
  if (n < 3) return Ternary::no;
  if (!is_connected(g)) return Ternary::no;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) < 2) return Ternary::no;
  detail::HamiltonianSearch s{g, node_budget};
  s.used.assign(n, false);
  s.used[0] = true;
  s.path.push_back(0);
  if (s.extend()) return Ternary::yes;
  return s.exhausted ? Ternary::unknown : Ternary::no;
}

namespace detail {

/// Adjacency-set scratch graph for the subdivision search. Vertices keep
/// their identities; removed ones just lose all edges.
struct ScratchGraph {
  std::vector<std::vector<int>> adj;

  explicit ScratchGraph(const Graph& g) : adj(g.order()) {
    for (int v = 0; v < g.order(); ++v) adj[v] = g.neighbors(v);
  }

  bool has_edge(int u, int v) const {
    return std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end();
  }

  void remove_edge(int u, int v) {
    std::erase(adj[u], v);
    std::erase(adj[v], u);
  }

  void add_edge(int u, int v) {
    if (!has_edge(u, v)) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
  }

  /// Delete degree <= 1 vertices and suppress degree-2 vertices; preserves
  /// the presence of K5/K3,3 subdivisions.
  void reduce() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
        if (adj[v].size() == 1) {
          remove_edge(v, adj[v][0]);
          changed = true;
        } else if (adj[v].size() == 2) {
          int a = adj[v][0], b = adj[v][1];
          remove_edge(v, a);
          remove_edge(v, b);
          add_edge(a, b);
          changed = true;
        }
      }
    }
  }

  std::vector<int> live_vertices() const {
    std::vector<int> live;
    for (int v = 0; v < static_cast<int>(adj.size()); ++v)
      if (!adj[v].empty()) live.push_back(v);
    return live;
  }
};

/// Finds internally-disjoint paths realizing all demanded branch-vertex
/// pairs, with internal vertices drawn from outside the branch set.
struct DisjointPathSearch {
  const ScratchGraph& g;
  const std::vector<int>& branches;
  std::vector<std::pair<int, int>> demands;
  std::vector<bool> blocked;  // branch vertices plus internals in use

  bool solve(std::size_t idx) {
    if (idx == demands.size()) return true;
    auto [a, b] = demands[idx];
    return route(a, b, idx);
  }

  bool route(int cur, int target, std::size_t idx) {
    if (g.has_edge(cur, target) && solve(idx + 1)) return true;
    for (int v : g.adj[cur]) {
      if (v == target || blocked[v]) continue;
      blocked[v] = true;
      if (route(v, target, idx)) return true;
      blocked[v] = false;
    }
    return false;
  }
};

inline bool has_subdivision(const ScratchGraph& g, const std::vector<int>& branches,
                            const std::vector<std::pair<int, int>>& demands) {
  DisjointPathSearch s{g, branches, demands};
  s.blocked.assign(g.adj.size(), false);
  for (int v : branches) s.blocked[v] = true;
  return s.solve(0);
}

inline bool has_k5_subdivision(const ScratchGraph& g, const std::vector<int>& live) {
  std::vector<int> pick;
  auto choose = [&](auto&& self, std::size_t start) -> bool {
    if (pick.size() == 5) {
      std::vector<std::pair<int, int>> demands;
      for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) demands.emplace_back(pick[i], pick[j]);
      return has_subdivision(g, pick, demands);
    }
    for (std::size_t s = start; s < live.size(); ++s) {
      if (g.adj[live[s]].size() < 4) continue;
      pick.push_back(live[s]);
      if (self(self, s + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return choose(choose, 0);
}

inline bool has_k33_subdivision(const ScratchGraph& g, const std::vector<int>& live) {
  std::vector<int> candidates;
  for (int v : live)
    if (g.adj[v].size() >= 3) candidates.push_back(v);
  const int k = static_cast<int>(candidates.size());
  if (k < 6) return false;
  std::vector<int> six;
  auto choose6 = [&](auto&& self, int start) -> bool {
    if (six.size() == 6) {
      // Split the six branch vertices into two sides; fixing six[0] on the
      // first side halves the symmetric choices.
      for (int m = 0; m < 32; ++m) {
        std::vector<int> a{six[0]}, b;
        for (int t = 1; t < 6; ++t) (m & (1 << (t - 1)) ? a : b).push_back(six[t]);
        if (a.size() != 3) continue;
        std::vector<std::pair<int, int>> demands;
        for (int u : a)
          for (int v : b) demands.emplace_back(u, v);
        if (has_subdivision(g, six, demands)) return true;
      }
      return false;
    }
    for (int s = start; s < k; ++s) {
      six.push_back(candidates[s]);
      if (self(self, s + 1)) return true;
      six.pop_back();
    }
    return false;
  };
  return choose6(choose6, 0);
}

}  // namespace detail

/// Bounded exact planarity: edge-count prefilter, then series reduction and
/// an exhaustive search for a K5 or K3,3 subdivision. Orders above the cap
/// come back unknown.
inline Ternary is_planar(const Graph& g, int order_cap = kDefaultPlanarOrderCap) {
  const int n = g.order();
  if (n > order_cap) return Ternary::unknown;
  std::size_t m = g.edge_count();
  if (n >= 3 && m > 3 * static_cast<std::size_t>(n) - 6) return Ternary::no;
  if (n < 5) return Ternary::yes;

  detail::ScratchGraph sg(g);
  sg.reduce();
  std::vector<int> live = sg.live_vertices();
  if (static_cast<int>(live.size()) < 5) return Ternary::yes;
  if (detail::has_k5_subdivision(sg, live)) return Ternary::no;
  if (detail::has_k33_subdivision(sg, live)) return Ternary::no;
  return Ternary::yes;
}

}  // namespace cliquelab
