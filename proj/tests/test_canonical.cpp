#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cliquelab/cliquelab.hpp"
#include "oracles.hpp"

using namespace cliquelab;

TEST_CASE("canonical code is invariant under every permutation, n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    for (const Graph& g : generate_nonisomorphic(n)) {
      CanonicalCode code = canonical_form(g);
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        REQUIRE(canonical_form(oracles::permute(g, perm)) == code);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
}

TEST_CASE("canonical code is invariant under random permutations, order 8") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 10; ++t) {
    Graph g = oracles::random_graph(8, rng);
    CanonicalCode code = canonical_form(g);
    for (int p = 0; p < 10; ++p)
      REQUIRE(canonical_form(oracles::permute(g, oracles::random_permutation(8, rng))) ==
              code);
  }
}

TEST_CASE("canonical code parses back to an isomorphic graph") {
  Graph pete = new_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                              {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                              {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
  Graph canon = parse_graph6(canonical_form(pete));
  REQUIRE(oracles::isomorphic_brute(induced_subgraph(pete, {0, 1, 2, 3, 4}),
                                    standard_family(Family::cycle, 5)));
  REQUIRE(canon.order() == 10);
  REQUIRE(canon.edge_count() == 15);
  REQUIRE(canonical_form(canon) == canonical_form(pete));
}

TEST_CASE("is_isomorphic agrees with brute force on order <= 5 pairs") {
  std::vector<Graph> corpus;
  for (int n = 4; n <= 5; ++n)
    for (Graph& g : generate_nonisomorphic(n)) corpus.push_back(std::move(g));
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (std::size_t j = i; j < corpus.size(); ++j) {
      bool fast = is_isomorphic(corpus[i], corpus[j]);
      bool brute = oracles::isomorphic_brute(corpus[i], corpus[j]);
      REQUIRE(fast == brute);
      REQUIRE(fast == (i == j));  // corpus holds one graph per class
    }
}

TEST_CASE("is_isomorphic separates same-degree-sequence non-isomorphic pairs") {
  // C6 vs two triangles: both 2-regular on 6 vertices.
  Graph c6 = standard_family(Family::cycle, 6);
  Graph tt = new_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  REQUIRE_FALSE(is_isomorphic(c6, tt));
  REQUIRE(is_isomorphic(c6, oracles::permute(c6, {3, 1, 4, 0, 5, 2})));
}

TEST_CASE("limits") {
  CanonLimits tiny{4, 4'000'000};
  REQUIRE_THROWS_AS(canonical_form(standard_family(Family::cycle, 5), tiny),
                    CanonCapExceeded);
  CanonLimits starved{512, 1};
  REQUIRE_THROWS_AS(canonical_form(standard_family(Family::cycle, 5), starved),
                    CanonCapExceeded);
}

TEST_CASE("corpus generation counts and distinctness") {
  const std::size_t expect[] = {1, 2, 4, 11, 34};
  for (int n = 1; n <= 5; ++n) {
    std::vector<Graph> corpus = generate_nonisomorphic(n);
    REQUIRE(corpus.size() == expect[n - 1]);
    std::set<CanonicalCode> codes;
    for (const Graph& g : corpus) {
      REQUIRE(g.order() == n);
      REQUIRE(codes.insert(canonical_form(g)).second);
    }
  }
  REQUIRE_THROWS_AS(generate_nonisomorphic(0), std::invalid_argument);
  REQUIRE_THROWS_AS(generate_nonisomorphic(8), std::invalid_argument);
}
