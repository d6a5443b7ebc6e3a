#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliquelab/graph.hpp"
#include "cliquelab/graph6.hpp"

namespace cliquelab {

struct CanonLimits {
  int max_order = 512;
  // Work budget for the backtracking search; each search node costs order^2
  // units (the refinement cost), so the cap bounds time, not just nodes.
  std::uint64_t max_work = 4'000'000;
};

class CanonCapExceeded : public std::runtime_error {
 public:
  explicit CanonCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Isomorphism-invariant byte string: the graph6 encoding of a canonical
/// relabeling. Equal codes <=> isomorphic graphs.
using CanonicalCode = std::string;

namespace detail {

/// Individualization-refinement search for the minimal relabeled adjacency
/// bit-string among refinement-compatible orderings.
class Canonicalizer {
 public:
  Canonicalizer(const Graph& g, const CanonLimits& lim) : g_(g), n_(g.order()), lim_(lim) {}

  CanonicalCode run() {
    if (n_ > lim_.max_order)
      throw CanonCapExceeded("canonical_form: order " + std::to_string(n_) +
                             " above cap " + std::to_string(lim_.max_order));
    std::vector<int> color(n_, 0);
    refine(color);
    search(color);
    return emit_graph6_bits(n_, [this](int i, int j) {
      return g_.adjacent(best_perm_[i], best_perm_[j]);
    });
  }

 private:
  // Stable 1-WL refinement. Signatures extend the current color with neighbor
  // color counts, so the induced ordering depends on invariants only.
  void refine(std::vector<int>& color) const {
    if (n_ == 0) return;
    int num_colors = 1 + *std::max_element(color.begin(), color.end());
    while (true) {
      std::vector<std::vector<int>> sig(n_);
      for (int v = 0; v < n_; ++v) {
        sig[v].assign(num_colors + 1, 0);
        sig[v][0] = color[v];
        for (int u = 0; u < n_; ++u)
          if (g_.adjacent(v, u)) ++sig[v][1 + color[u]];
      }
      std::vector<int> order(n_);
      for (int v = 0; v < n_; ++v) order[v] = v;
      std::sort(order.begin(), order.end(),
                [&sig](int a, int b) { return sig[a] < sig[b]; });
      int next = 0;
      std::vector<int> recolor(n_);
      for (int k = 0; k < n_; ++k) {
        if (k > 0 && sig[order[k]] != sig[order[k - 1]]) ++next;
        recolor[order[k]] = next;
      }
      int new_count = next + 1;
      color.swap(recolor);
      if (new_count == num_colors) return;
      num_colors = new_count;
    }
  }

  void search(const std::vector<int>& color) {
    work_ += static_cast<std::uint64_t>(n_) * n_ + 1;
    if (work_ > lim_.max_work)
      throw CanonCapExceeded("canonical_form: search work cap exceeded");

    // Target cell: first color class with more than one member.
    int target = -1;
    std::vector<int> count(n_ + 1, 0);
    for (int v = 0; v < n_; ++v) ++count[color[v]];
    for (int c = 0; c < n_; ++c)
      if (count[c] >= 2) {
        target = c;
        break;
      }

    if (target < 0) {
      record_leaf(color);
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if (color[v] != target) continue;
      std::vector<int> split(n_);
      for (int u = 0; u < n_; ++u)
        split[u] = 2 * color[u] + (color[u] == target && u != v ? 1 : 0);
      refine(split);
      search(split);
    }
  }

  void record_leaf(const std::vector<int>& color) {
    std::vector<int> vert_of(n_);
    for (int v = 0; v < n_; ++v) vert_of[color[v]] = v;
    // Upper-triangle bits in graph6 order, packed MSB-first per word so the
    // vector compares lexicographically.
    std::size_t nbits = static_cast<std::size_t>(n_) * (n_ - 1) / 2;
    std::vector<std::uint64_t> code((nbits + 63) / 64, 0);
    std::size_t idx = 0;
    for (int j = 1; j < n_; ++j)
      for (int i = 0; i < j; ++i) {
        if (g_.adjacent(vert_of[i], vert_of[j]))
          code[idx >> 6] |= std::uint64_t(1) << (63 - (idx & 63));
        ++idx;
      }
    if (best_perm_.empty() || code < best_code_) {
      best_code_ = std::move(code);
      best_perm_ = std::move(vert_of);
    }
  }

  const Graph& g_;
  int n_;
  CanonLimits lim_;
  std::uint64_t work_ = 0;
  std::vector<std::uint64_t> best_code_;
  std::vector<int> best_perm_;
};

}  // namespace detail

inline CanonicalCode canonical_form(const Graph& g, const CanonLimits& lim = {}) {
  return detail::Canonicalizer(g, lim).run();
}

inline bool is_isomorphic(const Graph& g1, const Graph& g2, const CanonLimits& lim = {}) {
  if (g1.order() != g2.order()) return false;
  std::vector<int> d1, d2;
  for (int v = 0; v < g1.order(); ++v) {
    d1.push_back(g1.degree(v));
    d2.push_back(g2.degree(v));
  }
  std::sort(d1.begin(), d1.end());
  std::sort(d2.begin(), d2.end());
  if (d1 != d2) return false;
  return canonical_form(g1, lim) == canonical_form(g2, lim);
}

/// Exactly one representative per isomorphism class of simple graphs on n
/// vertices, sorted by canonical code. Labeled enumeration restricted to
/// non-increasing degree sequences, deduplicated by canonical form.
inline std::vector<Graph> generate_nonisomorphic(int n, int order_cap = 7) {
  if (n < 1 || n > order_cap)
    throw std::invalid_argument("generate_nonisomorphic: order " + std::to_string(n) +
                                " outside 1.." + std::to_string(order_cap));
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  const int nbits = static_cast<int>(pairs.size());

  std::set<CanonicalCode> codes;
  std::vector<int> deg(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << nbits); ++mask) {
    std::fill(deg.begin(), deg.end(), 0);
    for (int b = 0; b < nbits; ++b)
      if (mask & (std::uint64_t(1) << b)) {
        ++deg[pairs[b].first];
        ++deg[pairs[b].second];
      }
    // Every class has a labeling with non-increasing degrees; skip the rest.
    bool sorted = true;
    for (int v = 1; v < n && sorted; ++v) sorted = deg[v - 1] >= deg[v];
    if (!sorted) continue;

    GraphBuilder b(n);
    for (int k = 0; k < nbits; ++k)
      if (mask & (std::uint64_t(1) << k)) b.add_edge(pairs[k].first, pairs[k].second);
    codes.insert(canonical_form(b.build()));
  }

  std::vector<Graph> out;
  out.reserve(codes.size());
  for (const auto& code : codes) out.push_back(parse_graph6(code));
  return out;
}

}  // namespace cliquelab
