#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cliquelab/graph.hpp"

namespace cliquelab {

class CliqueCapExceeded : public std::runtime_error {
 public:
  CliqueCapExceeded(std::size_t cap, std::size_t partial)
      : std::runtime_error("clique enumeration cap " + std::to_string(cap) +
                           " exceeded (" + std::to_string(partial) + " found)"),
        partial_count(partial) {}
  std::size_t partial_count;
};

constexpr std::size_t kDefaultCliqueCap = 1'000'000;

/// Maximal cliques of a graph, sorted by vertex list.
struct CliqueFamily {
  std::vector<VertexSet> cliques;

  std::size_t size() const { return cliques.size(); }
};

namespace detail {

using Bits = std::vector<std::uint64_t>;

inline bool bits_any(const Bits& a) {
  for (auto w : a)
    if (w) return true;
  return false;
}

inline bool bits_intersect(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & b[i]) return true;
  return false;
}

inline int bits_count(const Bits& a) {
  int c = 0;
  for (auto w : a) c += std::popcount(w);
  return c;
}

inline void bits_set(Bits& a, int v) { a[v >> 6] |= std::uint64_t(1) << (v & 63); }
inline void bits_reset(Bits& a, int v) { a[v >> 6] &= ~(std::uint64_t(1) << (v & 63)); }
inline bool bits_test(const Bits& a, int v) {
  return (a[v >> 6] >> (v & 63)) & 1u;
}

template <typename Fn>
inline void bits_for_each(const Bits& a, Fn fn) {
  for (std::size_t w = 0; w < a.size(); ++w) {
    std::uint64_t word = a[w];
    while (word) {
      int b = std::countr_zero(word);
      fn(static_cast<int>(w * 64 + b));
      word &= word - 1;
    }
  }
}

/// Bron-Kerbosch with pivoting; the pivot maximizes |P & N(u)| over P|X.
class CliqueEnumerator {
 public:
  CliqueEnumerator(const Graph& g, std::size_t cap) : g_(g), cap_(cap) {
    n_ = g.order();
    w_ = g.row_words();
    adj_.resize(n_);
    for (int v = 0; v < n_; ++v) adj_[v].assign(g.row(v), g.row(v) + w_);
  }

  std::vector<VertexSet> run() {
    Bits p(w_, 0), x(w_, 0);
    for (int v = 0; v < n_; ++v) bits_set(p, v);
    if (n_ > 0) expand(p, x);
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  void expand(const Bits& p, const Bits& x) {
    if (!bits_any(p) && !bits_any(x)) {
      if (out_.size() >= cap_) throw CliqueCapExceeded(cap_, out_.size());
      VertexSet clique = r_;
      std::sort(clique.begin(), clique.end());
      out_.push_back(std::move(clique));
      return;
    }
    int pivot = -1, best = -1;
    for (const Bits* side : {&p, &x})
      bits_for_each(*side, [&](int u) {
        int score = 0;
        for (int w = 0; w < w_; ++w) score += std::popcount(p[w] & adj_[u][w]);
        if (score > best) {
          best = score;
          pivot = u;
        }
      });

    Bits cand(w_);
    for (int w = 0; w < w_; ++w) cand[w] = p[w] & ~adj_[pivot][w];
    Bits pp(w_), xx(w_);
    Bits pl = p, xl = x;
    bits_for_each(cand, [&](int v) {
      r_.push_back(v);
      for (int w = 0; w < w_; ++w) {
        pp[w] = pl[w] & adj_[v][w];
        xx[w] = xl[w] & adj_[v][w];
      }
      expand(pp, xx);
      r_.pop_back();
      bits_reset(pl, v);
      bits_set(xl, v);
    });
  }

  const Graph& g_;
  std::size_t cap_;
  int n_, w_;
  std::vector<Bits> adj_;
  std::vector<int> r_;
  std::vector<VertexSet> out_;
};

inline Bits clique_bits(const VertexSet& clique, int words) {
  Bits b(words, 0);
  for (int v : clique) bits_set(b, v);
  return b;
}

}  // namespace detail

inline CliqueFamily enumerate_cliques(const Graph& g, std::size_t cap = kDefaultCliqueCap) {
  return CliqueFamily{detail::CliqueEnumerator(g, cap).run()};
}

struct CliqueGraphResult {
  Graph graph;          // one vertex per clique, in family order
  CliqueFamily family;  // cliques of the input graph
};

inline CliqueGraphResult clique_graph(const Graph& g, std::size_t cap = kDefaultCliqueCap) {
  CliqueFamily family = enumerate_cliques(g, cap);
  const int k = static_cast<int>(family.size());
  const int words = std::max(g.row_words(), 1);
  std::vector<detail::Bits> sets;
  sets.reserve(k);
  for (const auto& c : family.cliques) sets.push_back(detail::clique_bits(c, words));
  GraphBuilder b(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (detail::bits_intersect(sets[i], sets[j])) b.add_edge(i, j);
  return {b.build(), std::move(family)};
}

/// The n x m arrangement of join cliques X_i u Y_j. cell(i,j) indexes into
/// `family` (the clique family of join(g1,g2)). A join clique outside the
/// grid pattern is reported through `consistent`/`mismatch`, never thrown.
struct JoinCliqueGrid {
  int rows = 0;
  int cols = 0;
  std::vector<int> cell;  // row-major, rows*cols entries
  CliqueFamily family;
  bool consistent = true;
  std::string mismatch;

  int at(int i, int j) const { return cell[static_cast<std::size_t>(i) * cols + j]; }
};

inline JoinCliqueGrid join_clique_grid(const Graph& g1, const Graph& g2,
                                       std::size_t cap = kDefaultCliqueCap) {
  JoinCliqueGrid grid;
  CliqueFamily f1 = enumerate_cliques(g1, cap);
  CliqueFamily f2 = enumerate_cliques(g2, cap);
  grid.rows = static_cast<int>(f1.size());
  grid.cols = static_cast<int>(f2.size());
  grid.family = enumerate_cliques(join(g1, g2), cap);
  grid.cell.assign(static_cast<std::size_t>(grid.rows) * grid.cols, -1);

  const int n1 = g1.order();
  for (int i = 0; i < grid.rows; ++i)
    for (int j = 0; j < grid.cols; ++j) {
      VertexSet expected = f1.cliques[i];
      for (int v : f2.cliques[j]) expected.push_back(n1 + v);
      auto it = std::lower_bound(grid.family.cliques.begin(), grid.family.cliques.end(),
                                 expected);
      if (it == grid.family.cliques.end() || *it != expected) {
        grid.consistent = false;
        grid.mismatch = "X_" + std::to_string(i) + " u Y_" + std::to_string(j) +
                        " is not a clique of the join";
        return grid;
      }
      grid.cell[static_cast<std::size_t>(i) * grid.cols + j] =
          static_cast<int>(it - grid.family.cliques.begin());
    }
  if (grid.family.size() != static_cast<std::size_t>(grid.rows) * grid.cols) {
    grid.consistent = false;
    grid.mismatch = "join has " + std::to_string(grid.family.size()) +
                    " cliques, grid covers " + std::to_string(grid.rows * grid.cols);
  }
  return grid;
}

/// Intersection graph of an already-enumerated clique family over a graph of
/// the given order; vertex i is family.cliques[i].
inline Graph intersection_graph(const CliqueFamily& family, int ambient_order) {
  const int k = static_cast<int>(family.size());
  const int words = std::max(detail::bit_words(ambient_order), 1);
  std::vector<detail::Bits> sets;
  sets.reserve(k);
  for (const auto& c : family.cliques) sets.push_back(detail::clique_bits(c, words));
  GraphBuilder b(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (detail::bits_intersect(sets[i], sets[j])) b.add_edge(i, j);
  return b.build();
}

enum class Ternary { yes, no, unknown };

inline const char* to_string(Ternary t) {
  switch (t) {
    case Ternary::yes: return "yes";
    case Ternary::no: return "no";
    default: return "unknown";
  }
}

struct HellyResult {
  Ternary status = Ternary::unknown;
  std::vector<VertexSet> witness;  // minimal pairwise-intersecting family with
                                   // empty total intersection, when status == no
  std::string reason;
};

/// Clique-Helly test: every pairwise-intersecting subfamily of cliques must
/// have a common vertex. Searches witnesses in increasing subfamily size, so
/// a returned witness is of minimal size.
inline HellyResult is_clique_helly(const Graph& g, int family_cap = 32,
                                   std::size_t clique_cap = kDefaultCliqueCap) {
  if (family_cap <= 0) throw std::invalid_argument("family_cap must be positive");
  HellyResult res;
  CliqueFamily family;
  try {
    family = enumerate_cliques(g, clique_cap);
  } catch (const CliqueCapExceeded& e) {
    res.reason = e.what();
    return res;
  }
  const int k = static_cast<int>(family.size());
  if (k > family_cap || k > 63) {
    res.reason = "clique family size " + std::to_string(k) + " above cap " +
                 std::to_string(std::min<int>(family_cap, 63));
    return res;
  }
  const int words = std::max(g.row_words(), 1);
  std::vector<detail::Bits> sets;
  for (const auto& c : family.cliques) sets.push_back(detail::clique_bits(c, words));
  std::vector<std::uint64_t> meets(k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && detail::bits_intersect(sets[i], sets[j]))
        meets[i] |= std::uint64_t(1) << j;

  // Two pairwise-intersecting cliques always share a vertex, so witnesses
  // start at size 3.
  std::vector<int> chosen;
  auto dfs = [&](auto&& self, int size, int start, std::uint64_t mask,
                 const detail::Bits& inter) -> bool {
    if (static_cast<int>(chosen.size()) == size) return !detail::bits_any(inter);
    for (int c = start; c < k; ++c) {
      if ((meets[c] & mask) != mask) continue;  // must meet every chosen clique
      detail::Bits next(words);
      for (int w = 0; w < words; ++w) next[w] = inter[w] & sets[c][w];
      chosen.push_back(c);
      if (self(self, size, c + 1, mask | (std::uint64_t(1) << c), next)) return true;
      chosen.pop_back();
    }
    return false;
  };
  detail::Bits all(words, ~std::uint64_t(0));
  for (int size = 3; size <= k; ++size) {
    chosen.clear();
    if (dfs(dfs, size, 0, 0, all)) {
      res.status = Ternary::no;
      for (int c : chosen) res.witness.push_back(family.cliques[c]);
      return res;
    }
  }
  res.status = Ternary::yes;
  return res;
}

/// Ground-truth Helly check: every one of the 2^k subfamilies, no pruning.
inline bool helly_brute_oracle(const Graph& g, std::size_t clique_cap = kDefaultCliqueCap) {
  CliqueFamily family = enumerate_cliques(g, clique_cap);
  const int k = static_cast<int>(family.size());
  if (k > 16) throw std::invalid_argument("helly_brute_oracle: family of size " +
                                          std::to_string(k) + " above 16");
  const int words = std::max(g.row_words(), 1);
  std::vector<detail::Bits> sets;
  for (const auto& c : family.cliques) sets.push_back(detail::clique_bits(c, words));
  for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << k); ++mask) {
    bool pairwise = true;
    for (int i = 0; i < k && pairwise; ++i) {
      if (!(mask & (1u << i))) continue;
      for (int j = i + 1; j < k && pairwise; ++j)
        if ((mask & (1u << j)) && !detail::bits_intersect(sets[i], sets[j]))
          pairwise = false;
    }
    if (!pairwise) continue;
    detail::Bits inter(words, ~std::uint64_t(0));
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i))
        for (int w = 0; w < words; ++w) inter[w] &= sets[i][w];
    if (!detail::bits_any(inter)) return false;
  }
  return true;
}

}  // namespace cliquelab
