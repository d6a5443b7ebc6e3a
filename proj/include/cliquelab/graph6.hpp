#pragma once

#include <cstddef>
#include <functional>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cliquelab/graph.hpp"

namespace cliquelab {

class Graph6ParseError : public std::runtime_error {
 public:
  Graph6ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

namespace detail {

constexpr int kG6Base = 63;   // '?'
constexpr int kG6Max = 126;   // '~'
constexpr int kG6MaxOrder = 258047;

inline std::size_t g6_payload_bytes(int n) {
  std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  return (bits + 5) / 6;
}

/// Shared bit-packing core: adjacency is any predicate over vertex pairs, so
/// the canonicalizer can emit codes without materializing relabeled graphs.
inline std::string emit_graph6_bits(int n, const std::function<bool(int, int)>& adjacent) {
  if (n > kG6MaxOrder) throw std::invalid_argument("graph6: order above 258047");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(kG6Base + n));
  } else {
    out.push_back(static_cast<char>(kG6Max));
    out.push_back(static_cast<char>(kG6Base + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(kG6Base + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(kG6Base + (n & 63)));
  }
  int group = 0, filled = 0;
  // Upper triangle column by column: (0,1),(0,2),(1,2),(0,3),...
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kG6Base + group));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(kG6Base + (group << (6 - filled))));
  return out;
}

}  // namespace detail

inline std::string emit_graph6(const Graph& g) {
  return detail::emit_graph6_bits(g.order(),
                                  [&g](int i, int j) { return g.adjacent(i, j); });
}

inline Graph parse_graph6(std::string_view text) {
  using detail::kG6Base;
  using detail::kG6Max;
  std::size_t pos = 0;
  auto need = [&](std::size_t k) {
    if (pos + k > text.size())
      throw Graph6ParseError("graph6: truncated payload", text.size());
  };
  auto group_at = [&](std::size_t p) {
    unsigned char c = static_cast<unsigned char>(text[p]);
    if (c < kG6Base || c > kG6Max)
      throw Graph6ParseError("graph6: byte outside 63..126", p);
    return static_cast<int>(c) - kG6Base;
  };

  need(1);
  int n;
  if (static_cast<unsigned char>(text[0]) == kG6Max) {
    need(4);
    n = (group_at(1) << 12) | (group_at(2) << 6) | group_at(3);
    if (n > detail::kG6MaxOrder)
      throw Graph6ParseError("graph6: order above 258047", 1);
    pos = 4;
  } else {
    n = group_at(0);
    pos = 1;
  }

  std::size_t payload = detail::g6_payload_bytes(n);
  need(payload);
  if (pos + payload != text.size())
    throw Graph6ParseError("graph6: trailing garbage", pos + payload);

  GraphBuilder b(n);
  int group = 0, remaining = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (remaining == 0) {
        group = group_at(pos++);
        remaining = 6;
      }
      if (group & (1 << (remaining - 1))) b.add_edge(i, j);
      --remaining;
    }
  }
  return b.build();
}

/// One graph per line; blank lines are skipped. Optional ">>graph6<<" header.
inline std::vector<Graph> parse_graph6_lines(std::istream& in) {
  std::vector<Graph> graphs;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
    if (line.empty()) continue;
    graphs.push_back(parse_graph6(line));
  }
  return graphs;
}

inline std::string emit_dot(const Graph& g, const std::vector<std::string>& labels = {}) {
  std::ostringstream out;
  out << "graph {\n";
  for (int v = 0; v < g.order(); ++v) {
    out << "  " << v;
    if (v < static_cast<int>(labels.size())) out << " [label=\"" << labels[v] << "\"]";
    out << ";\n";
  }
  for (auto [u, v] : g.edge_list()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace cliquelab
