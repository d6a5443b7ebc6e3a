#include <catch2/catch_amalgamated.hpp>

#include "cliquelab/cliquelab.hpp"
#include "oracles.hpp"

using namespace cliquelab;

namespace {
const Graph p4 = standard_family(Family::path, 4);
const Graph c4 = standard_family(Family::cycle, 4);
const Graph e2 = standard_family(Family::empty, 2);
const Graph k2 = standard_family(Family::complete, 2);
const Graph k3 = standard_family(Family::complete, 3);
const CheckContext ctx;
}  // namespace

TEST_CASE("JOIN-CLIQUES") {
  Verdict v = run_checker("JOIN-CLIQUES", p4, c4, ctx);
  REQUIRE(v.outcome == Outcome::holds);
  REQUIRE(v.measured["n"] == 3);
  REQUIRE(v.measured["m"] == 4);
  REQUIRE(v.measured["observed"] == 12);
  REQUIRE(v.measured["predicted"] == 12);
  // JOIN-COUNT is the same adjudication
  REQUIRE(run_checker("JOIN-COUNT", p4, c4, ctx).outcome == Outcome::holds);
}

TEST_CASE("JOIN-CLIQUES and COMPLETE-IFF hold exhaustively through order 3") {
  std::vector<Graph> corpus;
  for (int n = 1; n <= 3; ++n)
    for (Graph& g : generate_nonisomorphic(n)) corpus.push_back(std::move(g));
  for (const char* tag : {"JOIN-CLIQUES", "COMPLETE-IFF"}) {
    SweepReport r = sweep(tag, corpus, ctx);
    REQUIRE(r.instances.size() == 49);
    REQUIRE(r.holds == 49);
    REQUIRE(r.refuted == 0);
  }
}

TEST_CASE("COMPLETE-IFF instances") {
  Verdict v = run_checker("COMPLETE-IFF", k2, k3, ctx);
  REQUIRE(v.outcome == Outcome::holds);
  REQUIRE(v.measured["k_join_complete"] == true);
  v = run_checker("COMPLETE-IFF", p4, k3, ctx);
  REQUIRE(v.outcome == Outcome::holds);
  REQUIRE(v.measured["k_g1_complete"] == false);
  REQUIRE(v.measured["k_join_complete"] == true);
  REQUIRE(run_checker("COMPLETE-IFF", e2, e2, ctx).outcome == Outcome::holds);
}

TEST_CASE("CLIQUE-TRANSFER") {
  // the octahedron decomposition satisfies the claim
  Verdict v = run_checker("CLIQUE-TRANSFER", e2, c4, ctx);
  REQUIRE(v.outcome == Outcome::holds);
  REQUIRE(v.measured["row_cliques"] == 2);
  REQUIRE(v.measured["col_cliques"] == 4);
  // gate: K(K2) = K1 is complete
  REQUIRE(run_checker("CLIQUE-TRANSFER", k2, k3, ctx).outcome == Outcome::skipped);
  // (P4,P4) is a genuine counterexample: A_Q for a row-pair clique of
  // K(P4)=P3 has 6 cells, but every maximal clique of K9-minus-two-disjoint-
  // edges has 7 vertices, so no A_Q of that shape is maximal.
  v = run_checker("CLIQUE-TRANSFER", p4, p4, ctx);
  REQUIRE(v.outcome == Outcome::refuted);
  REQUIRE(v.witness["failure"] == "not maximal");
  REQUIRE(v.witness["a_q"].size() == 6);
}

TEST_CASE("CLIQUE-TRANSFER refutation witness re-validates") {
  Verdict v = run_checker("CLIQUE-TRANSFER", p4, p4, ctx);
  REQUIRE(v.outcome == Outcome::refuted);
  // Re-check independently: A_Q must be complete in K(join) but extendable.
  Graph kj = clique_graph(join(p4, p4)).graph;
  std::vector<int> aq = v.witness["a_q"].get<std::vector<int>>();
  for (std::size_t i = 0; i < aq.size(); ++i)
    for (std::size_t j = i + 1; j < aq.size(); ++j)
      REQUIRE(kj.adjacent(aq[i], aq[j]));
  bool extendable = false;
  for (int u = 0; u < kj.order() && !extendable; ++u) {
    if (std::find(aq.begin(), aq.end(), u) != aq.end()) continue;
    bool all = true;
    for (int w : aq) all = all && kj.adjacent(u, w);
    extendable = all;
  }
  REQUIRE(extendable);
}

TEST_CASE("CLIQUE-INVENTORY") {
  Verdict v = run_checker("CLIQUE-INVENTORY", e2, c4, ctx);
  REQUIRE(v.outcome == Outcome::refuted);
  REQUIRE(v.measured["observed"] == 16);
  REQUIRE(v.measured["predicted"] == 6);
  REQUIRE(v.witness.contains("clique_of_k_join"));
  // counts can agree while the inventory itself fails
  v = run_checker("CLIQUE-INVENTORY", p4, p4, ctx);
  REQUIRE(v.outcome == Outcome::refuted);
  REQUIRE(v.measured["observed"] == 4);
  REQUIRE(v.measured["predicted"] == 4);
}

TEST_CASE("CLIQUE-INVENTORY witness re-validates") {
  Verdict v = run_checker("CLIQUE-INVENTORY", e2, c4, ctx);
  VertexSet w = v.witness["clique_of_k_join"].get<VertexSet>();
  Graph kj = clique_graph(join(e2, c4)).graph;
  CliqueFamily fam = enumerate_cliques(kj);
  REQUIRE(std::binary_search(fam.cliques.begin(), fam.cliques.end(), w));
}

TEST_CASE("K2-JOIN") {
  Verdict v = run_checker("K2-JOIN", e2, c4, ctx);
  REQUIRE(v.outcome == Outcome::refuted);
  REQUIRE(v.witness["k2_join_order"] == 16);
  REQUIRE(v.witness["join_k2_order"] == 6);
  v = run_checker("K2-JOIN", p4, p4, ctx);
  REQUIRE(v.outcome == Outcome::holds);
  REQUIRE(v.measured["isomorphic"] == true);
  REQUIRE(v.measured["k2_join_order"] == 4);
  REQUIRE(run_checker("K2-JOIN", e2, e2, ctx).outcome == Outcome::holds);
}

TEST_CASE("convergence routing") {
  // join(P4,P4) reaches a complete iterate, so the pair belongs to the
  // complete-iterate implication, not the biconditional
  REQUIRE(run_checker("CONV-COMPLETE", p4, p4, ctx).outcome == Outcome::holds);
  Verdict skipped = run_checker("CONV-IFF", p4, p4, ctx);
  REQUIRE(skipped.outcome == Outcome::skipped);
  REQUIRE(skipped.reason.find("CONV-COMPLETE") != std::string::npos);

  Verdict v = run_checker("CONV-IFF", c4, c4, ctx);
  REQUIRE(v.outcome == Outcome::inconclusive);
  REQUIRE(v.reason.find("suspected-refutation") == 0);
  REQUIRE(v.measured["g1_converged"] == true);
  REQUIRE(v.measured["join_converged"] == false);
  REQUIRE(run_checker("CONV-COMPLETE", c4, c4, ctx).outcome == Outcome::skipped);
}

TEST_CASE("PERIODIC-JOIN") {
  Verdict v = run_checker("PERIODIC-JOIN", c4, c4, ctx);
  REQUIRE(v.outcome == Outcome::refuted);
  REQUIRE(v.witness["iterate_order"] == 256);
  REQUIRE(v.witness["join_order"] == 8);
  REQUIRE(v.witness["period_g1"] == 1);
  // K2 is not K-periodic (preperiod 1), so the hypothesis gate skips
  REQUIRE(run_checker("PERIODIC-JOIN", k2, k2, ctx).outcome == Outcome::skipped);
  // (E2,E2): periods 1,1 and K^2(C4) = C4
  REQUIRE(run_checker("PERIODIC-JOIN", e2, e2, ctx).outcome == Outcome::holds);
}

TEST_CASE("observation checkers on (P4,P4)") {
  REQUIRE(run_checker("OBS-HAMILTONIAN", p4, p4, ctx).outcome == Outcome::holds);

  Verdict deg = run_checker("OBS-DEGREE", p4, p4, ctx);
  REQUIRE(deg.outcome == Outcome::refuted);
  REQUIRE(deg.witness["degree"] == 7);
  REQUIRE(deg.witness["admissible"] == nlohmann::json({4, 6, 8, 10}));
  // re-validate: the named vertex really has that degree in K(join)
  Graph kj = clique_graph(join(p4, p4)).graph;
  REQUIRE(kj.degree(deg.witness["vertex"].get<int>()) == 7);

  Verdict eul = run_checker("OBS-EULERIAN", p4, p4, ctx);
  REQUIRE(eul.outcome == Outcome::refuted);
  REQUIRE(eul.measured["case"] == "i");
  REQUIRE(eul.witness["degree"] == 7);

  REQUIRE(run_checker("OBS-PLANAR", p4, p4, ctx).outcome == Outcome::skipped);
}

TEST_CASE("OBS-PLANAR holds whenever a hypothesis applies, orders 1..3") {
  std::vector<Graph> corpus;
  for (int n = 1; n <= 3; ++n)
    for (Graph& g : generate_nonisomorphic(n)) corpus.push_back(std::move(g));
  SweepReport r = sweep("OBS-PLANAR", corpus, ctx);
  REQUIRE(r.refuted == 0);
  REQUIRE(r.holds == 41);
  REQUIRE(r.skipped == 8);
}

TEST_CASE("PRODUCT-K2") {
  Verdict v = run_checker("PRODUCT-K2", k2, e2, ctx);
  REQUIRE(v.outcome == Outcome::refuted);
  REQUIRE(v.witness["product_order"] == 4);
  REQUIRE(v.witness["k2_order"] == 2);

  v = run_checker("PRODUCT-K2", k2, k2, ctx);
  REQUIRE(v.outcome == Outcome::holds);
  REQUIRE(v.measured["product_clique_helly"] == true);
  REQUIRE(v.measured["preperiod"] == 0);
  REQUIRE(v.measured["period"] == 1);

  // grid example: P3 x K2
  Graph p3 = standard_family(Family::path, 3);
  REQUIRE(run_checker("PRODUCT-K2", p3, k2, ctx).outcome == Outcome::holds);
  REQUIRE(run_checker("PRODUCT-COROLLARY", k2, k2, ctx).outcome == Outcome::holds);
  // K1 factors fail the hypothesis
  REQUIRE(run_checker("PRODUCT-K2", new_graph(1, {}), k2, ctx).outcome ==
          Outcome::skipped);
}

TEST_CASE("unknown tag throws, caps become inconclusive") {
  REQUIRE_THROWS_AS(run_checker("NO-SUCH-TAG", k2, k2, ctx), std::invalid_argument);
  CheckContext starved = ctx;
  starved.clique_cap = 2;
  Verdict v = run_checker("JOIN-CLIQUES", p4, c4, starved);
  REQUIRE(v.outcome == Outcome::inconclusive);
  REQUIRE_FALSE(v.reason.empty());
}

TEST_CASE("inventory-holds implies K2-JOIN-holds over the order <= 3 sweep") {
  std::vector<Graph> corpus;
  for (int n = 1; n <= 3; ++n)
    for (Graph& g : generate_nonisomorphic(n)) corpus.push_back(std::move(g));
  SweepReport inv = sweep("CLIQUE-INVENTORY", corpus, ctx);
  SweepReport k2j = sweep("K2-JOIN", corpus, ctx);
  REQUIRE(inv.instances.size() == k2j.instances.size());
  for (std::size_t i = 0; i < inv.instances.size(); ++i)
    if (inv.instances[i].verdict.outcome == Outcome::holds)
      REQUIRE(k2j.instances[i].verdict.outcome == Outcome::holds);
}

TEST_CASE("sweep is deterministic and parallel-stable") {
  std::vector<Graph> corpus = generate_nonisomorphic(2);
  for (Graph& g : generate_nonisomorphic(3)) corpus.push_back(std::move(g));
  SweepReport one = sweep("JOIN-CLIQUES", corpus, ctx, 1);
  SweepReport two = sweep("JOIN-CLIQUES", corpus, ctx, 3);
  REQUIRE(one.instances.size() == 36);
  REQUIRE(one.holds == two.holds);
  for (std::size_t i = 0; i < one.instances.size(); ++i) {
    REQUIRE(one.instances[i].g1 == two.instances[i].g1);
    REQUIRE(one.instances[i].g2 == two.instances[i].g2);
    REQUIRE(one.instances[i].verdict.outcome == two.instances[i].verdict.outcome);
  }
}

TEST_CASE("JOIN-CLIQUES holds on 200 seeded random pairs of orders 5-6") {
  std::mt19937_64 rng(5150);
  for (int t = 0; t < 200; ++t) {
    Graph a = oracles::random_graph(5 + static_cast<int>(rng() % 2), rng);
    Graph b = oracles::random_graph(5 + static_cast<int>(rng() % 2), rng);
    Verdict v = run_checker("JOIN-CLIQUES", a, b, ctx);
    REQUIRE(v.outcome == Outcome::holds);
    REQUIRE(run_checker("JOIN-COUNT", a, b, ctx).outcome == Outcome::holds);
  }
}

TEST_CASE("verdict JSON shape") {
  nlohmann::json j = to_json(run_checker("K2-JOIN", e2, c4, ctx));
  REQUIRE(j["conjecture"] == "K2-JOIN");
  REQUIRE(j["outcome"] == "refuted");
  REQUIRE(j.contains("witness"));
  j = to_json(run_checker("JOIN-CLIQUES", p4, c4, ctx));
  REQUIRE(j["outcome"] == "holds");
  REQUIRE_FALSE(j.contains("witness"));
}
