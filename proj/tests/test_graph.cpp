#include <doctest.h>

#include <random>

#include "rfs/graph.hpp"
#include "rfs/pattern.hpp"
#include "rfs/poset.hpp"

#include "helpers.hpp"

using rfs::Graph;
using rfs::make_pattern;

TEST_CASE("graph validation") {
  CHECK_THROWS_AS(Graph({1, 2}, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph({1, 2}, {{1, 2}, {2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph({1, 2}, {{1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph({1, 1, 2}, {}), std::invalid_argument);
  CHECK_THROWS_AS(Graph({0, 1}, {}), std::invalid_argument);
  Graph g({2, 1, 3}, {{3, 1}});
  CHECK(g.vertices() == std::vector<int>{1, 2, 3});
  CHECK(g.has_edge(1, 3));
  CHECK(g.has_edge(3, 1));
  CHECK_FALSE(g.has_edge(1, 2));
}

TEST_CASE("invariants of catalog graphs") {
  auto c7 = rfs::invariants(make_pattern("C7"));
  CHECK(c7.dimension == 1);
  CHECK(c7.max_degree == 2);
  CHECK_FALSE(c7.is_tree);

  auto b = rfs::invariants(make_pattern("B"));
  CHECK(b.dimension == 0);
  CHECK(b.is_tree);
  CHECK(b.branch_vertices.size() == 2);

  auto z1 = rfs::invariants(make_pattern("Z1"));
  CHECK(z1.order == 4);
  CHECK(z1.size == 4);
  CHECK(z1.dimension == 1);

  // disconnected 2xK2: per-graph dimension formula stays verbatim, flag set
  Graph two_k2({1, 2, 3, 4}, {{1, 2}, {3, 4}});
  auto inv = rfs::invariants(two_k2);
  CHECK_FALSE(inv.connected);
  CHECK(inv.component_count == 2);
  CHECK_FALSE(inv.is_tree);
}

TEST_CASE("dimension identities across the catalog parameters") {
  for (int k = 3; k <= 10; ++k)
    CHECK(rfs::invariants(make_pattern("C" + std::to_string(k))).dimension == 1);
  std::vector<std::string> trees = {"B", "S2,2,1", "S3,1,1", "S4,3,2", "K1,3+"};
  for (int k = 1; k <= 10; ++k) trees.push_back("P" + std::to_string(k));
  for (int k = 1; k <= 9; ++k) trees.push_back("K1," + std::to_string(k));
  for (const auto& spec : trees) {
    auto inv = rfs::invariants(make_pattern(spec));
    CHECK(inv.dimension == 0);
    CHECK(inv.is_tree);
  }
}

TEST_CASE("subgraph relation basics") {
  CHECK(rfs::is_subgraph(make_pattern("P5"), make_pattern("C5")));
  CHECK_FALSE(rfs::is_subgraph(make_pattern("K1,4"), make_pattern("S2,2,1")));
  // frozen from the injective-map oracle
  CHECK(testutil::subgraph_oracle(make_pattern("K1,3"), make_pattern("B")));
  CHECK(rfs::is_subgraph(make_pattern("K1,3"), make_pattern("B")));
}

TEST_CASE("subgraph agrees with the injective-map oracle") {
  std::vector<Graph> pats;
  for (const auto& s : testutil::named_specs_up_to(6)) pats.push_back(make_pattern(s));
  for (const auto& h : pats)
    for (const auto& g : pats)
      CHECK(rfs::is_subgraph(h, g) == testutil::subgraph_oracle(h, g));
}

TEST_CASE("subgraph is reflexive and transitive on the catalog up to order 8") {
  std::vector<Graph> pats = rfs::build_catalog(6);
  for (const auto& s : testutil::named_specs_up_to(8)) {
    Graph g = make_pattern(s);
    if (g.order() >= 7) pats.push_back(g);
  }
  size_t n = pats.size();
  std::vector<std::vector<char>> sub(n, std::vector<char>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) sub[i][j] = rfs::is_subgraph(pats[i], pats[j]);
  for (size_t i = 0; i < n; ++i) CHECK(sub[i][i]);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      if (!sub[a][b]) continue;
      for (size_t c = 0; c < n; ++c)
        if (sub[b][c]) CHECK(sub[a][c]);
    }
}

TEST_CASE("domain membership") {
  CHECK_FALSE(rfs::in_domain_H(make_pattern("P4")));
  CHECK_FALSE(rfs::in_domain_H(make_pattern("P1")));
  CHECK_FALSE(rfs::in_domain_H(make_pattern("P3")));
  CHECK(rfs::in_domain_H(make_pattern("K1,3")));
  CHECK(rfs::in_domain_H(make_pattern("C3")));
  CHECK(rfs::in_domain_H(make_pattern("P5")));
  CHECK_FALSE(rfs::in_domain_H(Graph({1, 2, 3, 4}, {{1, 2}, {3, 4}})));  // disconnected
  // agreement with explicit isomorphism tests against P1..P4
  for (const auto& g : rfs::build_catalog(5)) {
    bool excluded = false;
    for (int k = 1; k <= 4; ++k)
      if (rfs::are_isomorphic(g, make_pattern("P" + std::to_string(k)))) excluded = true;
    CHECK(rfs::in_domain_H(g) == (rfs::is_connected(g) && !excluded));
  }
}

TEST_CASE("isomorphism decisions") {
  CHECK(rfs::are_isomorphic(make_pattern("S2,1,1"), make_pattern("K1,3+")));
  CHECK_FALSE(rfs::are_isomorphic(make_pattern("S2,2,1"), make_pattern("S3,1,1")));
  CHECK_FALSE(rfs::are_isomorphic(make_pattern("C4"), make_pattern("P4")));
  CHECK(rfs::are_isomorphic(make_pattern("K1,2+e"), make_pattern("C3")));
  CHECK(rfs::are_isomorphic(make_pattern("K1,3+e"), make_pattern("Z1")));
  CHECK(rfs::are_isomorphic(make_pattern("S1,2,2"), make_pattern("S2,2,1")));
}

TEST_CASE("isomorphism agrees with the all-permutations oracle") {
  // all pairs over the order<=6 catalog plus named order-7 patterns
  std::vector<Graph> pats = rfs::build_catalog(6);
  for (const auto& s : testutil::named_specs_up_to(7)) {
    Graph g = make_pattern(s);
    if (g.order() == 7) pats.push_back(g);
  }
  for (size_t i = 0; i < pats.size(); ++i)
    for (size_t j = i; j < pats.size(); ++j) {
      bool expect = testutil::iso_oracle(pats[i], pats[j]);
      CHECK(rfs::are_isomorphic(pats[i], pats[j]) == expect);
      if (i == j) CHECK(expect);
    }
}

TEST_CASE("canonical form is a complete isomorphism invariant on the catalog") {
  std::vector<Graph> pats = rfs::build_catalog(5);
  for (size_t i = 0; i < pats.size(); ++i) {
    Graph copy = rfs::canonical_copy(pats[i]);
    CHECK(testutil::iso_oracle(copy, pats[i]));
    CHECK(rfs::canonical_form(copy) == rfs::canonical_form(pats[i]));
    for (size_t j = i + 1; j < pats.size(); ++j)
      CHECK((rfs::canonical_form(pats[i]) == rfs::canonical_form(pats[j])) ==
            testutil::iso_oracle(pats[i], pats[j]));
  }
}

TEST_CASE("canonical form is stable under random relabeling") {
  std::mt19937_64 rng(7);
  for (const auto& spec : {"B", "S2,2,1", "C6", "K1,4+", "Z1"}) {
    Graph g = make_pattern(spec);
    auto base = rfs::canonical_form(g);
    std::vector<int> labels(static_cast<size_t>(g.order()));
    std::iota(labels.begin(), labels.end(), 1);
    for (int trial = 0; trial < 20; ++trial) {
      std::shuffle(labels.begin(), labels.end(), rng);
      std::vector<rfs::VertexPair> es;
      for (const auto& e : g.edges())
        es.emplace_back(labels[static_cast<size_t>(g.index_of(e.first))],
                        labels[static_cast<size_t>(g.index_of(e.second))]);
      Graph shuffled = Graph::from_edges(es);
      CHECK(rfs::canonical_form(shuffled) == base);
    }
  }
}

TEST_CASE("canonical form under random-graph stress") {
  // relabel stability and pairwise oracle agreement on random 7-vertex
  // graphs, where degree-equal non-isomorphic pairs are common
  std::mt19937_64 rng(0xbeef);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<Graph> pool;
  for (int trial = 0; trial < 60; ++trial) {
    double p = 0.2 + 0.1 * (trial % 7);
    std::vector<rfs::VertexPair> es;
    for (int u = 1; u <= 7; ++u)
      for (int v = u + 1; v <= 7; ++v)
        if (coin(rng) < p) es.emplace_back(u, v);
    std::vector<int> vs{1, 2, 3, 4, 5, 6, 7};
    pool.emplace_back(vs, es);
  }
  std::vector<int> labels{1, 2, 3, 4, 5, 6, 7};
  for (const auto& g : pool) {
    auto base = rfs::canonical_form(g);
    for (int shuffle = 0; shuffle < 6; ++shuffle) {
      std::shuffle(labels.begin(), labels.end(), rng);
      std::vector<rfs::VertexPair> es;
      for (const auto& e : g.edges())
        es.emplace_back(labels[static_cast<size_t>(g.index_of(e.first))],
                        labels[static_cast<size_t>(g.index_of(e.second))]);
      Graph relabeled(std::vector<int>{1, 2, 3, 4, 5, 6, 7}, es);
      CHECK(rfs::canonical_form(relabeled) == base);
    }
  }
  int oracle_pairs = 0;
  for (size_t i = 0; i < pool.size(); ++i)
    for (size_t j = i + 1; j < pool.size(); ++j) {
      if (pool[i].size() != pool[j].size()) continue;
      ++oracle_pairs;
      CHECK(rfs::are_isomorphic(pool[i], pool[j]) == testutil::iso_oracle(pool[i], pool[j]));
    }
  CHECK(oracle_pairs > 50);
}

TEST_CASE("canonical form handles highly symmetric graphs at the 12-vertex cap") {
  // complete graph and long cycle exercise the twin/pruning paths
  std::vector<int> vs(12);
  std::iota(vs.begin(), vs.end(), 1);
  std::vector<rfs::VertexPair> es;
  for (int u = 1; u <= 12; ++u)
    for (int v = u + 1; v <= 12; ++v) es.emplace_back(u, v);
  Graph k12(vs, es);
  CHECK(rfs::canonical_form(k12).size() == 1 + 12 + 66);
  Graph c12 = make_pattern("C12");
  Graph c12b = make_pattern("edges:[(1,5),(5,9),(9,2),(2,6),(6,10),(10,3),(3,7),(7,11),(11,4),(4,8),(8,12),(12,1)]");
  CHECK(rfs::are_isomorphic(c12, c12b));
  CHECK_THROWS_AS(rfs::canonical_form(Graph({1,2,3,4,5,6,7,8,9,10,11,12,13}, {})), std::invalid_argument);
}
