#include <doctest.h>

#include <set>
#include <stdexcept>

#include "rfs/graph.hpp"
#include "rfs/pattern.hpp"

using rfs::make_pattern;

TEST_CASE("pinned labelings of the named families") {
  rfs::Graph b = make_pattern("B");
  CHECK(b.edges() == std::vector<rfs::VertexPair>{{1, 2}, {1, 4}, {1, 5}, {2, 3}, {2, 6}});
  std::multiset<int> degs;
  for (int v : b.vertices()) degs.insert(b.degree(v));
  CHECK(degs == std::multiset<int>{1, 1, 1, 1, 3, 3});

  rfs::Graph s = make_pattern("S2,2,1");
  CHECK(s.order() == 6);
  CHECK(s.size() == 5);
  CHECK(s.edges() == std::vector<rfs::VertexPair>{{1, 2}, {1, 4}, {1, 6}, {2, 3}, {4, 5}});
  CHECK(rfs::invariants(s).branch_vertices == std::vector<int>{1});

  CHECK(make_pattern("Z1").edges() ==
        std::vector<rfs::VertexPair>{{1, 2}, {1, 3}, {1, 4}, {2, 3}});
  CHECK(make_pattern("P1").order() == 1);
  CHECK(make_pattern("P1").size() == 0);
  CHECK(make_pattern("K1,4+e").edges() ==
        std::vector<rfs::VertexPair>{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}});
  CHECK(make_pattern("K1,3+").edges() ==
        std::vector<rfs::VertexPair>{{1, 2}, {1, 4}, {1, 5}, {2, 3}});
}

TEST_CASE("spider legs normalize to non-increasing order") {
  CHECK(make_pattern("S1,2,2") == make_pattern("S2,2,1"));
  CHECK(make_pattern("S1,1,3") == make_pattern("S3,1,1"));
}

TEST_CASE("parameter bounds and malformed specs") {
  CHECK_THROWS_AS(make_pattern("P0"), std::invalid_argument);
  CHECK_THROWS_AS(make_pattern("C2"), std::invalid_argument);
  CHECK_THROWS_AS(make_pattern("K1,0"), std::invalid_argument);
  CHECK_THROWS_AS(make_pattern("K1,1+e"), std::invalid_argument);
  CHECK_THROWS_AS(make_pattern("S2,2,0"), std::invalid_argument);
  CHECK_THROWS_AS(make_pattern("S2,2"), std::invalid_argument);
  CHECK_THROWS_AS(make_pattern("Q7"), std::invalid_argument);
  CHECK_THROWS_AS(make_pattern(""), std::invalid_argument);
  CHECK_THROWS_AS(make_pattern("P5x"), std::invalid_argument);
  CHECK_THROWS_AS(make_pattern("edges:[]"), std::invalid_argument);
  CHECK_THROWS_AS(make_pattern("edges:[(1,1)]"), std::invalid_argument);
  CHECK(rfs::is_valid_pattern_spec("edges:[(1,2),(2,3)]"));
  CHECK_FALSE(rfs::is_valid_pattern_spec("edges:[(1,2"));
}

TEST_CASE("edge-list specs and whitespace") {
  rfs::Graph g = make_pattern(" edges:[ (1,2), (2,3), (1,3) ] ");
  CHECK(rfs::are_isomorphic(g, make_pattern("C3")));
  CHECK(make_pattern("K1, 4") == make_pattern("K1,4"));
}

TEST_CASE("family names round-trip through make_pattern") {
  for (const char* spec : {"P5", "P7", "C3", "C6", "K1,3", "K1,5", "K1,3+", "K1,4+",
                           "K1,4+e", "S2,2,1", "S3,1,1", "S3,2,1", "B", "Z1"}) {
    rfs::Graph g = make_pattern(spec);
    auto name = rfs::family_name(g);
    REQUIRE(name.has_value());
    CHECK(*name == spec);
    CHECK(rfs::are_isomorphic(make_pattern(*name), g));
  }
  // special forms prefer their canonical names
  CHECK(rfs::family_name(make_pattern("K1,2+e")) == std::string("C3"));
  CHECK(rfs::family_name(make_pattern("K1,3+e")) == std::string("Z1"));
  CHECK(rfs::family_name(make_pattern("S2,1,1")) == std::string("K1,3+"));
  CHECK(rfs::family_name(make_pattern("S1,1,1")) == std::string("K1,3"));
  // no family name: fall back to a parseable canonical key
  rfs::Graph diamond = make_pattern("edges:[(1,2),(1,3),(2,3),(2,4),(3,4)]");
  CHECK_FALSE(rfs::family_name(diamond).has_value());
  CHECK(rfs::are_isomorphic(make_pattern(rfs::pattern_display_name(diamond)), diamond));
}
