#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cliquelab/canonical.hpp"
#include "cliquelab/cliques.hpp"
#include "cliquelab/graph.hpp"

namespace cliquelab {

struct Bounds {
  int max_steps = 12;
  int max_vertices = 512;
  std::size_t max_cliques = 100'000;
};

enum class BoundReason { none, vertex_bound, clique_bound, step_bound };

inline const char* to_string(BoundReason r) {
  switch (r) {
    case BoundReason::vertex_bound: return "vertex_bound";
    case BoundReason::clique_bound: return "clique_bound";
    case BoundReason::step_bound: return "step_bound";
    default: return "none";
  }
}

struct IterationStep {
  int index = 0;
  int vertex_count = 0;
  std::optional<std::size_t> clique_count;  // absent if enumeration tripped a bound
  std::optional<CanonicalCode> code;        // absent if canonicalization is infeasible
};

/// The sequence G, K(G), K^2(G), ... with per-step statistics. Iteration
/// stops at the first canonical-code repeat or the first bound trip; bound
/// trips are recorded, never thrown.
struct IterationTrace {
  std::vector<IterationStep> steps;
  bool converged = false;
  int preperiod = 0;  // valid when converged
  int period = 0;     // valid when converged
  BoundReason bound = BoundReason::none;

  int last_index() const { return steps.back().index; }
};

inline IterationTrace iterate_k(const Graph& g, const Bounds& bounds = {},
                                const CanonLimits& canon = {}) {
  IterationTrace trace;
  std::map<CanonicalCode, int> seen;
  Graph cur = g;

  auto push_step = [&](int index, const Graph& graph) -> bool {
    IterationStep step;
    step.index = index;
    step.vertex_count = graph.order();
    try {
      step.code = canonical_form(graph, canon);
    } catch (const CanonCapExceeded&) {
      // Repeat detection simply skips steps without a code.
    }
    if (step.code) {
      auto [it, inserted] = seen.emplace(*step.code, index);
      if (!inserted) {
        trace.converged = true;
        trace.preperiod = it->second;
        trace.period = index - it->second;
        trace.steps.push_back(std::move(step));
        return true;
      }
    }
    trace.steps.push_back(std::move(step));
    return false;
  };

  if (push_step(0, cur)) return trace;
  for (int t = 0;; ++t) {
    CliqueGraphResult next;
    try {
      next = clique_graph(cur, bounds.max_cliques);
    } catch (const CliqueCapExceeded&) {
      trace.bound = BoundReason::clique_bound;
      return trace;
    }
    trace.steps.back().clique_count = next.family.size();
    // The bound trips on the clique count of the next iterate before the
    // next iterate is materialized any further.
    if (next.family.size() > static_cast<std::size_t>(bounds.max_vertices)) {
      trace.bound = BoundReason::vertex_bound;
      return trace;
    }
    if (t + 1 > bounds.max_steps) {
      trace.bound = BoundReason::step_bound;
      return trace;
    }
    cur = std::move(next.graph);
    if (push_step(t + 1, cur)) return trace;
  }
}

/// Bounded convergence verdict: Converged{preperiod, period} on a canonical
/// code repeat, BoundExceeded otherwise. Divergence is never claimed.
struct Classification {
  bool converged = false;
  int preperiod = 0;
  int period = 0;
  int last_index = 0;
  BoundReason reason = BoundReason::none;
};

inline Classification classify_trace(const IterationTrace& trace) {
  Classification c;
  c.converged = trace.converged;
  c.preperiod = trace.preperiod;
  c.period = trace.period;
  c.last_index = trace.steps.back().index;
  c.reason = trace.bound;
  return c;
}

inline Classification classify(const Graph& g, const Bounds& bounds = {},
                               const CanonLimits& canon = {}) {
  return classify_trace(iterate_k(g, bounds, canon));
}

/// Least p >= 1 with K^p(G) isomorphic to G, when G converges with preperiod
/// 0 within bounds; absent otherwise.
inline std::optional<int> k_periodicity(const Graph& g, const Bounds& bounds = {},
                                        const CanonLimits& canon = {}) {
  Classification c = classify(g, bounds, canon);
  if (c.converged && c.preperiod == 0) return c.period;
  return std::nullopt;
}

/// True iff K(h) is isomorphic to g.
inline bool is_k_root(const Graph& h, const Graph& g,
                      std::size_t clique_cap = kDefaultCliqueCap,
                      const CanonLimits& canon = {}) {
  return is_isomorphic(clique_graph(h, clique_cap).graph, g, canon);
}

}  // namespace cliquelab
