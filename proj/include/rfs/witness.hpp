#pragma once
// Parameterized generators for the explicit colorings used to separate
// pattern pairs, plus the validator that executes each construction's
// contract (rainbow-free of these patterns, contains rainbow copies of
// those, exact color count) through the rainbow search.
//
// Vertex numbering is frozen per construction: construction vertices first,
// in the order they are introduced, then pendant-pair vertices y_j, z_j
// interleaved (y_j, z_j, y_{j+1}, z_{j+1}, ...).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rfs/coloring.hpp"
#include "rfs/graph.hpp"
#include "rfs/rainbow.hpp"

namespace rfs {

struct WitnessId {
  std::string name;
  int t = 0;
  std::optional<int> k;
  std::optional<Graph> pattern;  // thm3-planted / thm4-bfsmax argument
};

struct WitnessContract {
  std::vector<std::string> must_be_free_of;      // PatternSpec texts
  std::vector<std::string> must_contain_rainbow;
  int color_count = 0;
};

struct WitnessClause {
  std::string kind;     // "free" | "contains" | "colors"
  std::string pattern;  // empty for "colors"
  bool pass = false;
  std::optional<Embedding> embedding;
  std::string detail;
};

struct WitnessReport {
  std::string name;
  bool pass = false;
  std::vector<WitnessClause> clauses;
};

struct WitnessInfo {
  std::string name;
  bool takes_k = false;
  bool takes_pattern = false;
  int min_t = 0;            // for fixed-shape constructions (no k/pattern)
  std::string param_doc;    // human bounds summary
};

const std::vector<WitnessInfo>& witness_registry();
bool is_witness_name(const std::string& name);

// Builds the coloring for the id; throws std::invalid_argument on unknown
// names, missing arguments or parameter-bound violations (thm4-bfsmax also
// rejects non-tree arguments).
EdgeColoring build_witness(const WitnessId& id);

WitnessContract contract_of(const WitnessId& id);

// Runs the contract clauses against a freshly built coloring.
WitnessReport validate_witness(const WitnessId& id);

// Same clauses against a supplied coloring (fault-injection / file checks).
WitnessReport validate_against(const WitnessId& id, const EdgeColoring& kc);

// Minimum legal t for the id with its other parameters fixed.
int witness_min_t(const WitnessId& id);

}  // namespace rfs
