#pragma once
// Bounded confirmation / refutation of candidate relations h1 <= h2: scan
// colorings of K_m (min_n <= m <= max_n, at least min_colors colors) for a
// rainbow-h1-free coloring containing a rainbow h2. A hit is a
// COUNTEREXAMPLE for the color counts examined; a clean scan is only ever
// NO_COUNTEREXAMPLE_UP_TO the stated bound, never a theorem.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rfs/coloring.hpp"
#include "rfs/graph.hpp"
#include "rfs/partitions.hpp"
#include "rfs/witness.hpp"

#include <json.hpp>

namespace rfs {

class FactLedger;  // ledger.hpp

enum class VerdictKind {
  implied_by_subgraph,
  known_fact,
  counterexample,
  no_counterexample_up_to,
};

std::string to_string(VerdictKind k);

struct ScanBound {
  int min_n = 0;
  int max_n = 0;
  int min_colors = 1;
  bool exhaustive = true;
  std::uint64_t samples = 0;  // sampled mode only
  std::uint64_t seed = 0;
};

struct Verdict {
  VerdictKind kind;
  std::string h1, h2;  // display names
  ScanBound bound;
  std::uint64_t visited = 0;
  std::optional<EdgeColoring> witness;  // counterexample coloring
  std::string fact_ref;                 // KNOWN_FACT only
};

nlohmann::json verdict_to_json(const Verdict& v);

struct Budget {
  enum class Mode { automatic, exhaustive, sampled };
  Mode mode = Mode::automatic;
  std::uint64_t exhaustive_ceiling = 2'000'000;  // automatic cutover
  std::uint64_t samples = 100'000;
  std::uint64_t seed = 0;
  int jobs = 1;
  bool deterministic = true;
};

// h1, h2 must lie in the domain; |V(h2)| <= max_n <= 8. min_n defaults to
// |V(h2)| when <= 0. A counterexample is re-validated with the brute-force
// oracle before it is returned. When a ledger is supplied, a proven
// h1 <= h2 instance short-circuits to KNOWN_FACT.
Verdict check_relation(const Graph& h1, const Graph& h2, int max_n, int min_colors,
                       const Budget& budget = {}, const FactLedger* ledger = nullptr,
                       int min_n = 0);

// Invariant filters: necessary inequalities for h1 <= h2.
struct NecessaryConditionReport {
  bool edges_ok = false;     // |E(h1)| <= |E(h2)| + 1
  bool vertices_ok = false;  // |V(h1)| <= |V(h2)| + 2
  bool maxdeg_ok = false;    // max deg(h1) <= max deg(h2) + 1
  bool dim_ok = false;       // dim(h1) <= dim(h2)
  int e1 = 0, e2 = 0, v1 = 0, v2 = 0, d1 = 0, d2 = 0, dim1 = 0, dim2 = 0;
  // refinement of the degree bound, computed only on request: at equality
  // h1 has at most two maximum-degree vertices, adjacent when there are two
  bool refined_checked = false;
  bool maxdeg_count_ok = true;
  bool maxdeg_adjacent_ok = true;

  bool all_pass() const { return edges_ok && vertices_ok && maxdeg_ok && dim_ok; }
};

NecessaryConditionReport necessary_conditions(const Graph& h1, const Graph& h2,
                                              bool refined = false);

// Builds and validates one witness family across a list of t values; all
// passing demonstrates that no threshold among them certifies the pair.
struct FamilyRefutation {
  WitnessId base;
  std::vector<std::pair<int, WitnessReport>> runs;  // (t, report)
  bool all_pass = false;
};

FamilyRefutation refute_via_witness_family(const WitnessId& base, const std::vector<int>& t_values);

}  // namespace rfs
