#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "cliquelab/canonical.hpp"
#include "cliquelab/cliques.hpp"
#include "cliquelab/dynamics.hpp"
#include "cliquelab/graph.hpp"
#include "cliquelab/graph6.hpp"
#include "cliquelab/search.hpp"

namespace cliquelab {

enum class Outcome { holds, refuted, inconclusive, skipped };

inline const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::holds: return "holds";
    case Outcome::refuted: return "refuted";
    case Outcome::inconclusive: return "inconclusive";
    default: return "skipped";
  }
}

/// Verdict of one conjecture check. A refutation always carries a finite,
/// re-checkable witness; inconclusive and skipped verdicts carry a reason.
struct Verdict {
  std::string conjecture;
  Outcome outcome = Outcome::holds;
  nlohmann::json witness;
  nlohmann::json measured = nlohmann::json::object();
  std::string reason;
};

struct CheckContext {
  Bounds bounds{};
  std::size_t clique_cap = kDefaultCliqueCap;
  int helly_cap = 32;
  std::uint64_t hamiltonian_budget = kDefaultHamiltonianBudget;
  int planar_order_cap = kDefaultPlanarOrderCap;
  CanonLimits canon{};
};

inline nlohmann::json to_json(const Verdict& v) {
  nlohmann::json j{{"conjecture", v.conjecture},
                   {"outcome", to_string(v.outcome)},
                   {"measured", v.measured}};
  if (v.outcome == Outcome::refuted) j["witness"] = v.witness;
  if (!v.reason.empty()) j["reason"] = v.reason;
  return j;
}

namespace detail {

inline Verdict make_holds(std::string tag, nlohmann::json measured) {
  return {std::move(tag), Outcome::holds, nullptr, std::move(measured), ""};
}
inline Verdict make_refuted(std::string tag, nlohmann::json witness, nlohmann::json measured) {
  return {std::move(tag), Outcome::refuted, std::move(witness), std::move(measured), ""};
}
inline Verdict make_inconclusive(std::string tag, std::string reason,
                                 nlohmann::json measured = nlohmann::json::object()) {
  return {std::move(tag), Outcome::inconclusive, nullptr, std::move(measured),
          std::move(reason)};
}
inline Verdict make_skipped(std::string tag, std::string reason) {
  return {std::move(tag), Outcome::skipped, nullptr, nlohmann::json::object(),
          std::move(reason)};
}

inline bool set_complete_in(const Graph& h, const VertexSet& s) {
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (!h.adjacent(s[a], s[b])) return false;
  return true;
}

inline bool set_maximal_in(const Graph& h, const VertexSet& s) {
  for (int v = 0; v < h.order(); ++v) {
    if (std::binary_search(s.begin(), s.end(), v)) continue;
    bool dominates = true;
    for (int u : s)
      if (!h.adjacent(v, u)) {
        dominates = false;
        break;
      }
    if (dominates) return false;
  }
  return true;
}

/// Row and column block cliques A_Q of K(join): for each clique Q of K(g1)
/// the cells {(i,j) : i in Q, all j}, and symmetrically for K(g2).
struct JoinInventory {
  JoinCliqueGrid grid;
  Graph k_join;  // intersection graph over grid.family
  CliqueFamily kg1_cliques, kg2_cliques;  // cliques of K(g1), K(g2)
  std::vector<VertexSet> row_sets, col_sets;  // A_Q vertex sets in k_join

  static JoinInventory build(const Graph& g1, const Graph& g2, const CheckContext& ctx) {
    JoinInventory inv;
    inv.grid = join_clique_grid(g1, g2, ctx.clique_cap);
    inv.k_join = intersection_graph(inv.grid.family, g1.order() + g2.order());
    inv.kg1_cliques = enumerate_cliques(clique_graph(g1, ctx.clique_cap).graph, ctx.clique_cap);
    inv.kg2_cliques = enumerate_cliques(clique_graph(g2, ctx.clique_cap).graph, ctx.clique_cap);
    if (!inv.grid.consistent) return inv;
    for (const auto& q : inv.kg1_cliques.cliques) {
      VertexSet s;
      for (int i : q)
        for (int j = 0; j < inv.grid.cols; ++j) s.push_back(inv.grid.at(i, j));
      std::sort(s.begin(), s.end());
      inv.row_sets.push_back(std::move(s));
    }
    for (const auto& q : inv.kg2_cliques.cliques) {
      VertexSet s;
      for (int j : q)
        for (int i = 0; i < inv.grid.rows; ++i) s.push_back(inv.grid.at(i, j));
      std::sort(s.begin(), s.end());
      inv.col_sets.push_back(std::move(s));
    }
    return inv;
  }
};

inline nlohmann::json cliques_json(const std::vector<VertexSet>& cs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : cs) arr.push_back(c);
  return arr;
}

/// A complete iterate shows up in a trace as a step of order <= 1 one step
/// later (K(H) = K_1 exactly when H is complete), or as the start graph.
inline bool trace_has_complete_iterate(const Graph& g, const IterationTrace& trace) {
  if (is_complete(g)) return true;
  for (const auto& step : trace.steps)
    if (step.vertex_count <= 1) return true;
  return false;
}

}  // namespace detail

/// JOIN-CLIQUES + JOIN-COUNT: the cliques of G1+G2 are exactly {X_i u Y_j}
/// and there are n*m of them.
inline Verdict check_join_cliques(const Graph& g1, const Graph& g2,
                                  const CheckContext& ctx = {}) {
  const std::string tag = "JOIN-CLIQUES";
  JoinCliqueGrid grid = join_clique_grid(g1, g2, ctx.clique_cap);
  nlohmann::json measured{{"n", grid.rows},
                          {"m", grid.cols},
                          {"observed", grid.family.size()},
                          {"predicted", grid.rows * grid.cols}};
  if (grid.consistent) return detail::make_holds(tag, measured);
  // Locate a join clique outside the grid pattern, if the mismatch is an
  // extra clique rather than a missing X_i u Y_j.
  std::set<int> covered(grid.cell.begin(), grid.cell.end());
  nlohmann::json witness{{"mismatch", grid.mismatch}};
  for (int idx = 0; idx < static_cast<int>(grid.family.size()); ++idx)
    if (!covered.count(idx)) {
      witness["offending_clique"] = grid.family.cliques[idx];
      break;
    }
  return detail::make_refuted(tag, witness, measured);
}

/// COMPLETE-IFF: K(G1+G2) is complete iff K(G1) or K(G2) is.
inline Verdict check_complete_iff(const Graph& g1, const Graph& g2,
                                  const CheckContext& ctx = {}) {
  const std::string tag = "COMPLETE-IFF";
  bool lhs = is_complete(clique_graph(join(g1, g2), ctx.clique_cap).graph);
  bool r1 = is_complete(clique_graph(g1, ctx.clique_cap).graph);
  bool r2 = is_complete(clique_graph(g2, ctx.clique_cap).graph);
  nlohmann::json measured{{"k_join_complete", lhs},
                          {"k_g1_complete", r1},
                          {"k_g2_complete", r2}};
  if (lhs == (r1 || r2)) return detail::make_holds(tag, measured);
  return detail::make_refuted(tag, measured, measured);
}

/// CLIQUE-TRANSFER: with neither K(G1) nor K(G2) complete, every clique Q of
/// K(G1) (resp. K(G2)) yields a maximal clique A_Q of K(G1+G2).
inline Verdict check_clique_transfer(const Graph& g1, const Graph& g2,
                                     const CheckContext& ctx = {}) {
  const std::string tag = "CLIQUE-TRANSFER";
  Graph k1 = clique_graph(g1, ctx.clique_cap).graph;
  Graph k2 = clique_graph(g2, ctx.clique_cap).graph;
  if (is_complete(k1) || is_complete(k2))
    return detail::make_skipped(tag, "K(g1) or K(g2) is complete");
  auto inv = detail::JoinInventory::build(g1, g2, ctx);
  if (!inv.grid.consistent)
    return detail::make_inconclusive(tag, "join clique grid mismatch: " + inv.grid.mismatch);
  nlohmann::json measured{{"row_cliques", inv.kg1_cliques.size()},
                          {"col_cliques", inv.kg2_cliques.size()}};
  for (int side = 0; side < 2; ++side) {
    const auto& sets = side == 0 ? inv.row_sets : inv.col_sets;
    const auto& src = side == 0 ? inv.kg1_cliques : inv.kg2_cliques;
    for (std::size_t q = 0; q < sets.size(); ++q) {
      bool complete = detail::set_complete_in(inv.k_join, sets[q]);
      if (complete && detail::set_maximal_in(inv.k_join, sets[q])) continue;
      nlohmann::json witness{{"factor", side == 0 ? "g1" : "g2"},
                             {"clique_of_k_factor", src.cliques[q]},
                             {"a_q", sets[q]},
                             {"failure", complete ? "not maximal" : "not complete"}};
      return detail::make_refuted(tag, witness, measured);
    }
  }
  return detail::make_holds(tag, measured);
}

/// CLIQUE-INVENTORY: with neither K(G1) nor K(G2) complete, the cliques of
/// K(G1+G2) are exactly the A_Q blocks and their count is the sum of the
/// clique counts of K(G1) and K(G2).
inline Verdict check_clique_inventory(const Graph& g1, const Graph& g2,
                                      const CheckContext& ctx = {}) {
  const std::string tag = "CLIQUE-INVENTORY";
  Graph k1 = clique_graph(g1, ctx.clique_cap).graph;
  Graph k2 = clique_graph(g2, ctx.clique_cap).graph;
  if (is_complete(k1) || is_complete(k2))
    return detail::make_skipped(tag, "K(g1) or K(g2) is complete");
  auto inv = detail::JoinInventory::build(g1, g2, ctx);
  if (!inv.grid.consistent)
    return detail::make_inconclusive(tag, "join clique grid mismatch: " + inv.grid.mismatch);

  CliqueFamily k_join_cliques = enumerate_cliques(inv.k_join, ctx.clique_cap);
  std::size_t predicted = inv.kg1_cliques.size() + inv.kg2_cliques.size();
  nlohmann::json measured{{"observed", k_join_cliques.size()},
                          {"predicted", predicted},
                          {"k_g1_cliques", inv.kg1_cliques.size()},
                          {"k_g2_cliques", inv.kg2_cliques.size()}};
  std::set<VertexSet> inventory(inv.row_sets.begin(), inv.row_sets.end());
  inventory.insert(inv.col_sets.begin(), inv.col_sets.end());
  for (const auto& q : k_join_cliques.cliques)
    if (!inventory.count(q)) {
      nlohmann::json witness{{"clique_of_k_join", q},
                             {"note", "maximal clique outside the A_Q inventory"}};
      return detail::make_refuted(tag, witness, measured);
    }
  if (k_join_cliques.size() != predicted)
    return detail::make_refuted(tag, measured, measured);
  return detail::make_holds(tag, measured);
}

/// K2-JOIN: with neither K(G1) nor K(G2) complete,
/// K^2(G1+G2) is isomorphic to K^2(G1) + K^2(G2).
inline Verdict check_k2_join(const Graph& g1, const Graph& g2,
                             const CheckContext& ctx = {}) {
  const std::string tag = "K2-JOIN";
  Graph k1 = clique_graph(g1, ctx.clique_cap).graph;
  Graph k2 = clique_graph(g2, ctx.clique_cap).graph;
  if (is_complete(k1) || is_complete(k2))
    return detail::make_skipped(tag, "K(g1) or K(g2) is complete");
  Graph lhs = clique_graph(clique_graph(join(g1, g2), ctx.clique_cap).graph, ctx.clique_cap).graph;
  Graph rhs = join(clique_graph(k1, ctx.clique_cap).graph, clique_graph(k2, ctx.clique_cap).graph);
  nlohmann::json measured{{"k2_join_order", lhs.order()}, {"join_k2_order", rhs.order()}};
  if (lhs.order() != rhs.order())
    return detail::make_refuted(tag, measured, measured);
  bool iso = is_isomorphic(lhs, rhs, ctx.canon);
  measured["isomorphic"] = iso;
  if (iso) return detail::make_holds(tag, measured);
  nlohmann::json witness{{"k2_join_code", canonical_form(lhs, ctx.canon)},
                         {"join_k2_code", canonical_form(rhs, ctx.canon)}};
  return detail::make_refuted(tag, witness, measured);
}

/// CONV-IFF / CONV-COMPLETE, routed by whether some iterate of a factor is
/// complete within bounds. Divergence is never claimed, so a refutation of
/// CONV-IFF can only ever surface as a suspected one.
inline Verdict check_convergence_join(const Graph& g1, const Graph& g2,
                                      const CheckContext& ctx = {}) {
  IterationTrace t1 = iterate_k(g1, ctx.bounds, ctx.canon);
  IterationTrace t2 = iterate_k(g2, ctx.bounds, ctx.canon);
  Classification c1 = classify_trace(t1), c2 = classify_trace(t2);
  Classification cj = classify(join(g1, g2), ctx.bounds, ctx.canon);
  nlohmann::json measured{
      {"g1_converged", c1.converged}, {"g2_converged", c2.converged},
      {"join_converged", cj.converged}, {"join_bound", to_string(cj.reason)}};

  bool complete_route = detail::trace_has_complete_iterate(g1, t1) ||
                        detail::trace_has_complete_iterate(g2, t2);
  if (complete_route) {
    const std::string tag = "CONV-COMPLETE";
    if (cj.converged) return detail::make_holds(tag, measured);
    return detail::make_inconclusive(
        tag, "a factor iterate is complete but the join exceeded bounds", measured);
  }
  const std::string tag = "CONV-IFF";
  if (!c1.converged || !c2.converged) {
    if (cj.converged)
      return detail::make_inconclusive(
          tag, "suspected-refutation: join converges but a factor exceeded bounds",
          measured);
    return detail::make_inconclusive(tag, "factor classification exceeded bounds",
                                     measured);
  }
  if (cj.converged) return detail::make_holds(tag, measured);
  return detail::make_inconclusive(
      tag, "suspected-refutation: factors converge but the join exceeded bounds",
      measured);
}

/// PERIODIC-JOIN: for K-periodic factors of periods n, m the join satisfies
/// K^{2nm}(G) isomorphic to G.
inline Verdict check_periodic_join(const Graph& g1, const Graph& g2,
                                   const CheckContext& ctx = {}) {
  const std::string tag = "PERIODIC-JOIN";
  std::optional<int> p1 = k_periodicity(g1, ctx.bounds, ctx.canon);
  std::optional<int> p2 = k_periodicity(g2, ctx.bounds, ctx.canon);
  if (!p1 || !p2)
    return detail::make_skipped(tag, "a factor is not K-periodic within bounds");
  const int target = 2 * *p1 * *p2;
  Graph composite = join(g1, g2);
  Graph cur = composite;
  nlohmann::json measured{{"period_g1", *p1}, {"period_g2", *p2}, {"iterate", target}};
  for (int step = 1; step <= target; ++step) {
    CliqueGraphResult next;
    try {
      next = clique_graph(cur, ctx.bounds.max_cliques);
    } catch (const CliqueCapExceeded& e) {
      return detail::make_inconclusive(tag, std::string("clique bound at step ") +
                                                std::to_string(step) + ": " + e.what(),
                                       measured);
    }
    if (next.family.size() > static_cast<std::size_t>(ctx.bounds.max_vertices) &&
        step < target)
      return detail::make_inconclusive(
          tag, "vertex bound before reaching iterate " + std::to_string(target), measured);
    cur = std::move(next.graph);
  }
  measured["join_order"] = composite.order();
  measured["iterate_order"] = cur.order();
  if (cur.order() != composite.order())
    return detail::make_refuted(tag, measured, measured);
  try {
    if (is_isomorphic(cur, composite, ctx.canon)) return detail::make_holds(tag, measured);
  } catch (const CanonCapExceeded& e) {
    return detail::make_inconclusive(tag, e.what(), measured);
  }
  nlohmann::json witness{{"join_code", canonical_form(composite, ctx.canon)},
                         {"iterate_code", canonical_form(cur, ctx.canon)}};
  return detail::make_refuted(tag, witness, measured);
}

/// The four observation checkers about K(G1+G2): Hamiltonicity, planarity
/// under the stated clique-count hypotheses, the degree formula, and the
/// Eulerian cases.
inline Verdict check_join_observation(const std::string& which, const Graph& g1,
                                      const Graph& g2, const CheckContext& ctx = {}) {
  const std::size_t n = enumerate_cliques(g1, ctx.clique_cap).size();
  const std::size_t m = enumerate_cliques(g2, ctx.clique_cap).size();
  if (n == 0 || m == 0)
    return detail::make_skipped(which, "a factor has no cliques");
  Graph kj = clique_graph(join(g1, g2), ctx.clique_cap).graph;
  nlohmann::json measured{{"n", n}, {"m", m}, {"k_join_order", kj.order()}};

  if (which == "OBS-HAMILTONIAN") {
    Ternary r = is_hamiltonian(kj, ctx.hamiltonian_budget);
    if (r == Ternary::yes) return detail::make_holds(which, measured);
    if (r == Ternary::no)
      return detail::make_refuted(which, {{"note", "K(join) has no Hamiltonian cycle"}},
                                  measured);
    return detail::make_inconclusive(which, "Hamiltonian search budget exhausted", measured);
  }

  if (which == "OBS-PLANAR") {
    std::string cond;
    if (n < 3 && m < 3) {
      cond = "i";
    } else if (n == 3 && is_complete(g2)) {
      cond = "ii";
    } else if (n == 3 && m == 2 &&
               is_isomorphic(clique_graph(g1, ctx.clique_cap).graph,
                             complement(standard_family(Family::complete, 3)), ctx.canon) &&
               is_isomorphic(clique_graph(g2, ctx.clique_cap).graph,
                             complement(standard_family(Family::complete, 2)), ctx.canon)) {
      cond = "ii";
    } else if (n == 4 && is_complete(g2)) {
      cond = "iii";
    } else {
      return detail::make_skipped(which, "no planarity hypothesis applies");
    }
    measured["condition"] = cond;
    Ternary r = is_planar(kj, ctx.planar_order_cap);
    if (r == Ternary::yes) return detail::make_holds(which, measured);
    if (r == Ternary::no)
      return detail::make_refuted(
          which, {{"note", "K(join) contains a K5 or K3,3 subdivision"}}, measured);
    return detail::make_inconclusive(which, "planarity order cap exceeded", measured);
  }

  if (which == "OBS-DEGREE") {
    std::set<std::size_t> admissible;
    for (std::size_t k = 0; k <= m; ++k) admissible.insert(n + m - 2 + k * (n - 1));
    for (std::size_t l = 0; l <= n; ++l) admissible.insert(n + m - 2 + l * (m - 1));
    for (int v = 0; v < kj.order(); ++v) {
      std::size_t d = static_cast<std::size_t>(kj.degree(v));
      if (!admissible.count(d)) {
        nlohmann::json witness{{"vertex", v},
                               {"degree", d},
                               {"admissible", std::vector<std::size_t>(admissible.begin(),
                                                                       admissible.end())}};
        return detail::make_refuted(which, witness, measured);
      }
    }
    return detail::make_holds(which, measured);
  }

  if (which == "OBS-EULERIAN") {
    std::string kase;
    if (n % 2 == 1 && m % 2 == 1) {
      kase = "i";
    } else if (n % 2 == 0 && m % 2 == 0) {
      Graph k1 = clique_graph(g1, ctx.clique_cap).graph;
      Graph k2 = clique_graph(g2, ctx.clique_cap).graph;
      if (!is_eulerian(k1) || !is_eulerian(k2))
        return detail::make_skipped(which, "K(g1) or K(g2) not Eulerian (case ii)");
      kase = "ii";
    } else if (n % 2 == 0 && m % 2 == 1) {
      Graph k1 = clique_graph(g1, ctx.clique_cap).graph;
      Graph k2 = clique_graph(g2, ctx.clique_cap).graph;
      bool odd_degrees = k1.order() > 0;
      for (int v = 0; v < k1.order(); ++v)
        if (k1.degree(v) % 2 == 0) odd_degrees = false;
      if (!odd_degrees || k2.edge_count() != 0)
        return detail::make_skipped(which, "case iii hypothesis fails");
      kase = "iii";
    } else {
      return detail::make_skipped(which, "no Eulerian hypothesis applies");
    }
    measured["case"] = kase;
    if (is_eulerian(kj)) return detail::make_holds(which, measured);
    nlohmann::json witness;
    for (int v = 0; v < kj.order(); ++v)
      if (kj.degree(v) % 2 == 1) {
        witness = {{"vertex", v}, {"degree", kj.degree(v)}, {"note", "odd degree"}};
        break;
      }
    if (witness.is_null()) witness = {{"note", "edge set not connected or empty"}};
    return detail::make_refuted(which, witness, measured);
  }

  throw std::invalid_argument("unknown observation tag: " + which);
}

/// PRODUCT-K2 + PRODUCT-COROLLARY: for Clique-Helly factors other than K1,
/// K^2(G1 [] G2) is the product again, and the product is Clique-Helly,
/// K-periodic and K-convergent.
inline Verdict check_product_k2(const Graph& g1, const Graph& g2,
                                const CheckContext& ctx = {}) {
  const std::string tag = "PRODUCT-K2";
  if (g1.order() < 2 || g2.order() < 2)
    return detail::make_skipped(tag, "factor equal to K1 (or smaller) excluded");
  HellyResult h1 = is_clique_helly(g1, ctx.helly_cap, ctx.clique_cap);
  HellyResult h2 = is_clique_helly(g2, ctx.helly_cap, ctx.clique_cap);
  if (h1.status == Ternary::unknown || h2.status == Ternary::unknown)
    return detail::make_inconclusive(tag, "factor Clique-Helly test inconclusive: " +
                                              (h1.status == Ternary::unknown ? h1.reason
                                                                             : h2.reason));
  if (h1.status == Ternary::no || h2.status == Ternary::no)
    return detail::make_skipped(tag, "a factor is not Clique-Helly");

  Graph product = cartesian_product(g1, g2);
  Graph k2 = clique_graph(clique_graph(product, ctx.clique_cap).graph, ctx.clique_cap).graph;
  nlohmann::json measured{{"product_order", product.order()}, {"k2_order", k2.order()}};
  if (k2.order() != product.order())
    return detail::make_refuted(tag, measured, measured);
  if (!is_isomorphic(k2, product, ctx.canon)) {
    nlohmann::json witness{{"product_code", canonical_form(product, ctx.canon)},
                           {"k2_code", canonical_form(k2, ctx.canon)}};
    return detail::make_refuted(tag, witness, measured);
  }

  HellyResult hp = is_clique_helly(product, ctx.helly_cap, ctx.clique_cap);
  if (hp.status == Ternary::unknown)
    return detail::make_inconclusive(tag, "product Clique-Helly test inconclusive: " + hp.reason,
                                     measured);
  measured["product_clique_helly"] = hp.status == Ternary::yes;
  if (hp.status == Ternary::no)
    return detail::make_refuted(tag, {{"non_helly_family", detail::cliques_json(hp.witness)}},
                                measured);

  Classification cls = classify(product, ctx.bounds, ctx.canon);
  measured["converged"] = cls.converged;
  if (!cls.converged)
    return detail::make_inconclusive(tag, "product classification exceeded bounds", measured);
  measured["preperiod"] = cls.preperiod;
  measured["period"] = cls.period;
  if (cls.preperiod != 0)
    return detail::make_refuted(
        tag, {{"note", "product not K-periodic"}, {"preperiod", cls.preperiod}}, measured);
  return detail::make_holds(tag, measured);
}

/// Dispatch by conjecture tag; caps and unexpected failures surface as
/// inconclusive verdicts, never exceptions.
inline Verdict run_checker(const std::string& tag, const Graph& g1, const Graph& g2,
                           const CheckContext& ctx = {}) {
  auto dispatch = [&]() -> Verdict {
    if (tag == "JOIN-CLIQUES" || tag == "JOIN-COUNT") return check_join_cliques(g1, g2, ctx);
    if (tag == "COMPLETE-IFF") return check_complete_iff(g1, g2, ctx);
    if (tag == "CLIQUE-TRANSFER") return check_clique_transfer(g1, g2, ctx);
    if (tag == "CLIQUE-INVENTORY") return check_clique_inventory(g1, g2, ctx);
    if (tag == "K2-JOIN") return check_k2_join(g1, g2, ctx);
    if (tag == "CONV-IFF" || tag == "CONV-COMPLETE") {
      Verdict v = check_convergence_join(g1, g2, ctx);
      if (v.conjecture != tag)
        return detail::make_skipped(tag, "hypothesis routes this pair to " + v.conjecture);
      return v;
    }
    if (tag == "PERIODIC-JOIN") return check_periodic_join(g1, g2, ctx);
    if (tag.rfind("OBS-", 0) == 0) return check_join_observation(tag, g1, g2, ctx);
    if (tag == "PRODUCT-K2" || tag == "PRODUCT-COROLLARY") {
      Verdict v = check_product_k2(g1, g2, ctx);
      v.conjecture = tag;
      return v;
    }
    throw std::invalid_argument("unknown conjecture tag: " + tag);
  };
  try {
    return dispatch();
  } catch (const CliqueCapExceeded& e) {
    return detail::make_inconclusive(tag, e.what());
  } catch (const CanonCapExceeded& e) {
    return detail::make_inconclusive(tag, e.what());
  }
}

inline const std::vector<std::string>& conjecture_tags() {
  static const std::vector<std::string> tags{
      "JOIN-CLIQUES", "JOIN-COUNT", "COMPLETE-IFF", "CLIQUE-TRANSFER",
      "CLIQUE-INVENTORY", "K2-JOIN", "CONV-IFF", "CONV-COMPLETE",
      "PERIODIC-JOIN", "OBS-HAMILTONIAN", "OBS-PLANAR", "OBS-DEGREE",
      "OBS-EULERIAN", "PRODUCT-K2", "PRODUCT-COROLLARY"};
  return tags;
}

struct SweepInstance {
  std::size_t index = 0;
  std::string g1;  // graph6
  std::string g2;  // graph6
  Verdict verdict;
};

struct SweepReport {
  std::string conjecture;
  std::string corpus;
  std::vector<SweepInstance> instances;
  std::size_t holds = 0, refuted = 0, inconclusive = 0, skipped = 0;
};

/// Runs a checker over all ordered pairs of the corpus. Per-instance errors
/// become inconclusive verdicts; the sweep itself never aborts.
inline SweepReport sweep(const std::string& tag, const std::vector<Graph>& corpus,
                         const CheckContext& ctx = {}, int jobs = 1,
                         std::string corpus_desc = "") {
  SweepReport report;
  report.conjecture = tag;
  report.corpus = std::move(corpus_desc);
  const std::size_t k = corpus.size();
  report.instances.resize(k * k);

  auto run_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      const Graph& a = corpus[idx / k];
      const Graph& b = corpus[idx % k];
      SweepInstance& inst = report.instances[idx];
      inst.index = idx;
      inst.g1 = emit_graph6(a);
      inst.g2 = emit_graph6(b);
      try {
        inst.verdict = run_checker(tag, a, b, ctx);
      } catch (const std::exception& e) {
        inst.verdict = detail::make_inconclusive(tag, e.what());
      }
    }
  };

  const std::size_t total = k * k;
  if (jobs <= 1 || total < 2) {
    run_range(0, total);
  } else {
    std::vector<std::thread> workers;
    std::size_t chunk = (total + jobs - 1) / jobs;
    for (int j = 0; j < jobs; ++j) {
      std::size_t begin = j * chunk;
      if (begin >= total) break;
      workers.emplace_back(run_range, begin, std::min(total, begin + chunk));
    }
    for (auto& w : workers) w.join();
  }

  for (const auto& inst : report.instances) {
    switch (inst.verdict.outcome) {
      case Outcome::holds: ++report.holds; break;
      case Outcome::refuted: ++report.refuted; break;
      case Outcome::inconclusive: ++report.inconclusive; break;
      case Outcome::skipped: ++report.skipped; break;
    }
  }
  return report;
}

}  // namespace cliquelab
