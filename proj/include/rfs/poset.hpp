#pragma once
// Assembling the order on a catalog of small patterns from three sources:
// the subgraph rule, ledger facts, and empirical verdicts. Proven LE edges
// (SUBGRAPH / FACT) are transitively closed; equivalence classes are the
// strongly connected components of that digraph; the class order's
// transitive reduction is the Hasse diagram. Bounded evidence never becomes
// an LE edge: NO_COUNTEREXAMPLE_UP_TO only upgrades UNKNOWN to
// EMPIRICAL-UNREFUTED, and a COUNTEREXAMPLE marks the pair REFUTED.

#include <string>
#include <utility>
#include <vector>

#include "rfs/graph.hpp"
#include "rfs/ledger.hpp"

#include <json.hpp>

namespace rfs {

// One representative per isomorphism class of domain members with at most
// max_order vertices (max_order <= 7), ordered by (order, size, canonical
// encoding). Generated by vertex augmentation with canonical-form dedup.
std::vector<Graph> build_catalog(int max_order);

enum class LeState { unknown, subgraph, fact, empirical_unrefuted, refuted };

std::string to_string(LeState s);

// Empirical verdict rows fed into assemble (typically from the verdict
// cache): canonical keys plus the outcome of the bounded check.
struct EmpiricalRecord {
  std::string h1_key;
  std::string h2_key;
  bool counterexample = false;
  std::string detail;  // bound description for provenance
};

struct PosetSnapshot {
  int max_order = 0;
  std::vector<Graph> nodes;
  std::vector<std::string> node_names;
  std::vector<std::vector<LeState>> le;
  std::vector<std::vector<std::string>> provenance;
  std::vector<std::vector<int>> classes;             // node indices, each sorted
  std::vector<int> class_of;                         // node -> class
  std::vector<std::pair<int, int>> hasse;            // (lower, upper) class covers
  std::vector<std::pair<int, int>> equiv_candidates; // mutual EMPIRICAL-UNREFUTED node pairs
};

// Throws on ledger contradictions and on LE/REFUTED conflicts (message
// carries both provenances).
PosetSnapshot assemble(const std::vector<Graph>& catalog, const FactLedger& ledger,
                       const std::vector<EmpiricalRecord>& verdicts = {});

// Graphviz DOT of the Hasse diagram, deterministic ordering; class nodes
// are labeled with their members' PatternSpecs.
std::string export_dot(const PosetSnapshot& snapshot);

nlohmann::json snapshot_to_json(const PosetSnapshot& snapshot);

}  // namespace rfs
