#include <doctest.h>

#include "rfs/ledger.hpp"
#include "rfs/pattern.hpp"
#include "rfs/rainbow.hpp"
#include "rfs/relation.hpp"

#ifndef RFS_DATA_DIR
#define RFS_DATA_DIR "data"
#endif

using rfs::Budget;
using rfs::make_pattern;
using rfs::Verdict;
using rfs::VerdictKind;

TEST_CASE("subgraph pairs short-circuit") {
  Verdict v = rfs::check_relation(make_pattern("C3"), make_pattern("Z1"), 5, 1);
  CHECK(v.kind == VerdictKind::implied_by_subgraph);
  CHECK(v.visited == 0);
}

TEST_CASE("clean exhaustive scans") {
  Budget b;
  b.mode = Budget::Mode::exhaustive;
  Verdict v = rfs::check_relation(make_pattern("Z1"), make_pattern("C4"), 5, 1, b, nullptr, 5);
  CHECK(v.kind == VerdictKind::no_counterexample_up_to);
  CHECK(v.visited == 115975);
  CHECK(v.bound.exhaustive);

  Verdict w = rfs::check_relation(make_pattern("K1,3"), make_pattern("P5"), 5, 1, b);
  CHECK(w.kind == VerdictKind::no_counterexample_up_to);
  CHECK(w.visited == 115975);  // hosts start at |V(P5)| = 5
}

TEST_CASE("counterexample scans re-validate and respect min_colors") {
  Budget b;
  b.mode = Budget::Mode::exhaustive;
  Verdict v = rfs::check_relation(make_pattern("C4"), make_pattern("C5"), 5, 5, b);
  REQUIRE(v.kind == VerdictKind::counterexample);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->num_colors() >= 5);  // valid for every smaller min_colors too
  CHECK(rfs::is_rainbow_free(*v.witness, make_pattern("C4")));
  CHECK(rfs::find_rainbow_embedding(*v.witness, make_pattern("C5")).found());
  CHECK(rfs::brute_force_find(*v.witness, make_pattern("C5")).found());
  CHECK_FALSE(rfs::brute_force_find(*v.witness, make_pattern("C4")).found());
}

TEST_CASE("scan range covers smaller hosts by default") {
  Budget b;
  b.mode = Budget::Mode::exhaustive;
  // |V(C4)| = 4, so m = 4 and m = 5 are both scanned
  Verdict v = rfs::check_relation(make_pattern("Z1"), make_pattern("C4"), 5, 1, b);
  CHECK(v.kind == VerdictKind::no_counterexample_up_to);
  CHECK(v.visited == 115975 + 203);
}

TEST_CASE("parallel deterministic scans match single-threaded results") {
  Budget b1;
  b1.mode = Budget::Mode::exhaustive;
  Budget b4 = b1;
  b4.jobs = 4;
  Verdict v1 = rfs::check_relation(make_pattern("C4"), make_pattern("C5"), 5, 5, b1);
  Verdict v4 = rfs::check_relation(make_pattern("C4"), make_pattern("C5"), 5, 5, b4);
  REQUIRE(v1.kind == VerdictKind::counterexample);
  REQUIRE(v4.kind == VerdictKind::counterexample);
  CHECK(rfs::verdict_to_json(v1).dump() == rfs::verdict_to_json(v4).dump());

  Verdict c1 = rfs::check_relation(make_pattern("K1,3"), make_pattern("C3"), 5, 4, b1, nullptr, 5);
  Verdict c4 = rfs::check_relation(make_pattern("K1,3"), make_pattern("C3"), 5, 4, b4, nullptr, 5);
  CHECK(rfs::verdict_to_json(c1).dump() == rfs::verdict_to_json(c4).dump());
  CHECK(c1.visited == 106133);
}

TEST_CASE("non-deterministic scans still find counterexamples") {
  Budget b;
  b.mode = Budget::Mode::exhaustive;
  b.deterministic = false;
  b.jobs = 4;
  Verdict v = rfs::check_relation(make_pattern("C4"), make_pattern("C5"), 5, 5, b);
  REQUIRE(v.kind == VerdictKind::counterexample);
  REQUIRE(v.witness.has_value());
  CHECK(rfs::is_rainbow_free(*v.witness, make_pattern("C4")));
  CHECK(rfs::find_rainbow_embedding(*v.witness, make_pattern("C5")).found());
}

TEST_CASE("sampled scans are seeded and replayable") {
  Budget b;
  b.mode = Budget::Mode::sampled;
  b.samples = 3000;
  b.seed = 17;
  Verdict v1 = rfs::check_relation(make_pattern("P5"), make_pattern("B"), 6, 1, b);
  Verdict v2 = rfs::check_relation(make_pattern("P5"), make_pattern("B"), 6, 1, b);
  CHECK(rfs::verdict_to_json(v1).dump() == rfs::verdict_to_json(v2).dump());
  CHECK(v1.kind == VerdictKind::no_counterexample_up_to);
  CHECK(v1.visited == 3000);
  CHECK_FALSE(v1.bound.exhaustive);
}

TEST_CASE("threshold sensitivity around a proven relation") {
  // P6 <= C5 carries a double-digit threshold: with few colors K6 hosts
  // genuine counterexamples, while at 14 or more colors the exhaustive scan
  // over K6 comes back clean
  Budget low;
  low.mode = Budget::Mode::sampled;
  low.samples = 200000;
  low.seed = 1;
  Verdict hit = rfs::check_relation(make_pattern("P6"), make_pattern("C5"), 6, 1, low, nullptr, 6);
  REQUIRE(hit.kind == VerdictKind::counterexample);
  CHECK(rfs::is_rainbow_free(*hit.witness, make_pattern("P6")));
  CHECK(rfs::find_rainbow_embedding(*hit.witness, make_pattern("C5")).found());

  Budget e;
  e.mode = Budget::Mode::exhaustive;
  Verdict clean = rfs::check_relation(make_pattern("P6"), make_pattern("C5"), 6, 14, e, nullptr, 6);
  CHECK(clean.kind == VerdictKind::no_counterexample_up_to);
  CHECK(clean.visited == 106);  // S(15,14) + S(15,15)
}

TEST_CASE("sampled probes at the proven thresholds stay clean") {
  Budget b;
  b.mode = Budget::Mode::sampled;
  b.samples = 20000;
  b.seed = 3;
  Verdict s221 =
      rfs::check_relation(make_pattern("S2,2,1"), make_pattern("C4"), 7, 18, b, nullptr, 7);
  CHECK(s221.kind == VerdictKind::no_counterexample_up_to);
  b.seed = 4;
  Verdict barbell = rfs::check_relation(make_pattern("B"), make_pattern("C6"), 8, 25, b, nullptr, 8);
  CHECK(barbell.kind == VerdictKind::no_counterexample_up_to);
}

TEST_CASE("known facts short-circuit only when the ledger is supplied") {
  rfs::FactLedger ledger = rfs::load_ledger(std::string(RFS_DATA_DIR) + "/ledger.json");
  Verdict v = rfs::check_relation(make_pattern("Z1"), make_pattern("C4"), 5, 1, {}, &ledger);
  CHECK(v.kind == VerdictKind::known_fact);
  CHECK(v.fact_ref == "thm6-z1-cycles");
  CHECK(v.visited == 0);
  // NLE facts never short-circuit; the scan runs and promptly produces a
  // supporting counterexample (S3,1,1 cannot even embed in K4, so any
  // rainbow C4 suffices at that host size)
  Budget b;
  b.mode = Budget::Mode::exhaustive;
  Verdict w = rfs::check_relation(make_pattern("S3,1,1"), make_pattern("C4"), 5, 1, b, &ledger);
  CHECK(w.kind == VerdictKind::counterexample);
  CHECK(rfs::ledger_nle_fact(ledger, make_pattern("S3,1,1"), make_pattern("C4")) ==
        std::string("thm12-s311-c4"));
}

TEST_CASE("vacuous scan when no coloring meets the color bound") {
  Budget b;
  b.mode = Budget::Mode::exhaustive;
  // K5 has 10 edges, so no coloring reaches 12 colors
  Verdict v = rfs::check_relation(make_pattern("C4"), make_pattern("C5"), 5, 12, b);
  CHECK(v.kind == VerdictKind::no_counterexample_up_to);
  CHECK(v.visited == 0);
}

TEST_CASE("precondition violations") {
  CHECK_THROWS_AS(rfs::check_relation(make_pattern("P4"), make_pattern("C4"), 5, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(rfs::check_relation(make_pattern("C4"), make_pattern("C5"), 4, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(rfs::check_relation(make_pattern("C4"), make_pattern("C5"), 9, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(rfs::check_relation(make_pattern("C4"), make_pattern("C5"), 5, 0),
                  std::invalid_argument);
}

TEST_CASE("necessary condition reports") {
  auto r = rfs::necessary_conditions(make_pattern("S2,2,1"), make_pattern("C4"));
  CHECK(r.all_pass());
  CHECK(r.e1 == r.e2 + 1);
  CHECK(r.v1 == r.v2 + 2);
  CHECK(r.d1 == r.d2 + 1);

  auto refined = rfs::necessary_conditions(make_pattern("S2,2,1"), make_pattern("C4"), true);
  CHECK(refined.refined_checked);
  CHECK(refined.maxdeg_count_ok);
  CHECK(refined.maxdeg_adjacent_ok);

  auto p7 = rfs::necessary_conditions(make_pattern("P7"), make_pattern("C4"));
  CHECK_FALSE(p7.edges_ok);
  CHECK_FALSE(p7.all_pass());

  auto c4p9 = rfs::necessary_conditions(make_pattern("C4"), make_pattern("P9"));
  CHECK_FALSE(c4p9.dim_ok);
  CHECK(c4p9.dim1 == 1);
  CHECK(c4p9.dim2 == 0);

  // barbell has two adjacent maximum-degree vertices: refined bound passes
  // against a max-degree-2 partner
  auto bb = rfs::necessary_conditions(make_pattern("B"), make_pattern("C6"), true);
  CHECK(bb.all_pass());
  CHECK(bb.maxdeg_count_ok);
  CHECK(bb.maxdeg_adjacent_ok);
}

TEST_CASE("witness family refutations") {
  rfs::FamilyRefutation thm9 =
      rfs::refute_via_witness_family({"thm9-shortpath", 0, 5, {}}, {5, 6, 7, 8, 9, 10, 11, 12});
  CHECK(thm9.all_pass);
  CHECK(thm9.runs.size() == 8);

  rfs::FamilyRefutation thm14 =
      rfs::refute_via_witness_family({"thm14-1-star-yz", 0, {}, {}}, {5, 6, 7, 8, 9, 10});
  CHECK(thm14.all_pass);

  rfs::FamilyRefutation thm18 =
      rfs::refute_via_witness_family({"thm18-star", 0, 3, {}}, {7, 8, 9, 10, 11, 12});
  CHECK(thm18.all_pass);
}
