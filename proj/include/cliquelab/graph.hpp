#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cliquelab {

/// Sorted, duplicate-free list of 0-based vertex ids.
using VertexSet = std::vector<int>;

namespace detail {

inline int bit_words(int n) { return (n + 63) / 64; }

}  // namespace detail

/// Finite simple undirected graph. Adjacency is stored as fixed-width bit
/// rows; instances are immutable after construction and safe to share.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int order) : n_(order), words_(detail::bit_words(order)) {
    if (order < 0) throw std::invalid_argument("graph order must be non-negative");
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
  }

  Graph(int order, const std::vector<std::pair<int, int>>& edges) : Graph(order) {
    for (auto [u, v] : edges) add_edge_checked(u, v);
  }

  int order() const { return n_; }

  bool adjacent(int u, int v) const {
    return (row(u)[v >> 6] >> (v & 63)) & 1u;
  }

  /// Pointer to the adjacency bit row of v (row_words() words).
  const std::uint64_t* row(int v) const {
    return bits_.data() + static_cast<std::size_t>(v) * words_;
  }

  int row_words() const { return words_; }

  int degree(int v) const {
    int d = 0;
    const std::uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
  }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (int v = 0; v < n_; ++v) twice += static_cast<std::size_t>(degree(v));
    return twice / 2;
  }

  /// Edges as (u,v) pairs with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edge_list() const {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (adjacent(u, v)) es.emplace_back(u, v);
    return es;
  }

  std::vector<int> neighbors(int v) const {
    std::vector<int> ns;
    for (int u = 0; u < n_; ++u)
      if (adjacent(v, u)) ns.push_back(u);
    return ns;
  }

  bool operator==(const Graph& other) const = default;

 protected:
  void add_edge_checked(int u, int v) {
    if (u == v)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                  "," + std::to_string(v) + ") in graph of order " +
                                  std::to_string(n_));
    set_bit(u, v);
    set_bit(v, u);
  }

  void set_bit(int u, int v) {
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t(1) << (v & 63);
  }

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;

  friend class GraphBuilder;
};

/// Mutable staging area for graph construction; build() freezes the result.
class GraphBuilder {
 public:
  explicit GraphBuilder(int order) : g_(order) {}
  void add_edge(int u, int v) { g_.add_edge_checked(u, v); }
  Graph build() { return std::move(g_); }

 private:
  Graph g_;
};

inline Graph new_graph(int order, const std::vector<std::pair<int, int>>& edges) {
  return Graph(order, edges);
}

enum class Family { complete, empty, path, cycle, star };

inline Graph standard_family(Family kind, int n) {
  if (n < 1) throw std::invalid_argument("family order must be at least 1");
  GraphBuilder b(n);
  switch (kind) {
    case Family::complete:
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
      break;
    case Family::empty:
      break;
    case Family::path:
      for (int v = 1; v < n; ++v) b.add_edge(v - 1, v);
      break;
    case Family::cycle:
      if (n < 3) throw std::invalid_argument("cycle requires order >= 3");
      for (int v = 1; v < n; ++v) b.add_edge(v - 1, v);
      b.add_edge(n - 1, 0);
      break;
    case Family::star:
      for (int v = 1; v < n; ++v) b.add_edge(0, v);
      break;
  }
  return b.build();
}

/// Disjoint union of g1 (ids 0..n1-1) and g2 (ids n1..n1+n2-1) plus every
/// cross edge.
inline Graph join(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order(), n2 = g2.order();
  GraphBuilder b(n1 + n2);
  for (auto [u, v] : g1.edge_list()) b.add_edge(u, v);
  for (auto [u, v] : g2.edge_list()) b.add_edge(n1 + u, n1 + v);
  for (int u = 0; u < n1; ++u)
    for (int v = 0; v < n2; ++v) b.add_edge(u, n1 + v);
  return b.build();
}

/// Cartesian product; vertex (i,j) is encoded row-major as i*n2+j.
inline Graph cartesian_product(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order(), n2 = g2.order();
  GraphBuilder b(n1 * n2);
  for (auto [u, v] : g1.edge_list())
    for (int j = 0; j < n2; ++j) b.add_edge(u * n2 + j, v * n2 + j);
  for (auto [u, v] : g2.edge_list())
    for (int i = 0; i < n1; ++i) b.add_edge(i * n2 + u, i * n2 + v);
  return b.build();
}

inline Graph complement(const Graph& g) {
  const int n = g.order();
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return b.build();
}

/// Subgraph induced by s, relabeled 0..|s|-1 preserving the order of s.
inline Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  for (int v : s)
    if (v < 0 || v >= g.order())
      throw std::invalid_argument("induced_subgraph: vertex " + std::to_string(v) +
                                  " out of range");
  const int k = static_cast<int>(s.size());
  GraphBuilder b(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.adjacent(s[i], s[j])) b.add_edge(i, j);
  return b.build();
}

inline bool is_complete(const Graph& g) {
  const int n = g.order();
  for (int v = 0; v < n; ++v)
    if (g.degree(v) != n - 1) return false;
  return true;
}

inline bool has_universal_vertex(const Graph& g) {
  const int n = g.order();
  if (n == 0) return false;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == n - 1) return true;
  return false;
}

namespace detail {

/// Component labels via BFS; returns the number of components.
inline int components(const Graph& g, std::vector<int>& label) {
  const int n = g.order();
  label.assign(n, -1);
  int comp = 0;
  std::vector<int> queue;
  for (int s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    label[s] = comp;
    queue.assign(1, s);
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      for (int u = 0; u < n; ++u)
        if (g.adjacent(v, u) && label[u] < 0) {
          label[u] = comp;
          queue.push_back(u);
        }
    }
    ++comp;
  }
  return comp;
}

}  // namespace detail

inline bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  std::vector<int> label;
  return detail::components(g, label) == 1;
}

/// Eulerian here means: at least one edge, every degree even, and all
/// vertices of nonzero degree in one component.
inline bool is_eulerian(const Graph& g) {
  if (g.edge_count() == 0) return false;
  std::vector<int> label;
  detail::components(g, label);
  int live_comp = -1;
  for (int v = 0; v < g.order(); ++v) {
    int d = g.degree(v);
    if (d % 2 != 0) return false;
    if (d > 0) {
      if (live_comp < 0) live_comp = label[v];
      else if (label[v] != live_comp) return false;
    }
  }
  return true;
}

}  // namespace cliquelab
