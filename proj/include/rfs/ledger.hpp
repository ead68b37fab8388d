#pragma once
// Machine-readable ledger of proven relations and non-relations, stored as a
// versioned JSON data file so new results append without a rebuild. Entries
// carry a citation anchor with a verbatim source quote.
//
// Entry kinds:
//   pair         h1, h2 concrete PatternSpecs
//   family       h1/h2 templates over integer parameters, e.g. "C{k}",
//                "C{t*(k-2)+2}", with per-parameter bounds and parity
//   universal    one side is "*" (every domain member), minus `except`
//   star_ceiling NLE below the star K1,{k}: everything except the stars and
//                subdivided stars K1,j / K1,j+ with 3 <= j <= k
//   clms_nle     structural rule: h1 above a proper subgraph h2 of order
//                >= 4 is never below it, except the (K1,k+, K1,k) pairs
//   disjunction  consistency assertion only (one of `options` lies below
//                every member outside `except`); never an edge source

#include <optional>
#include <string>
#include <vector>

#include "rfs/graph.hpp"

#include <json.hpp>

namespace rfs {

struct LedgerParam {
  std::string name;
  int min = 1;
  std::optional<int> max;
  std::string parity;  // "", "odd", "even"
};

struct LedgerEntry {
  std::string id;
  std::string kind;      // pair | family | universal | star_ceiling | clms_nle | disjunction
  std::string relation;  // "LE" | "NLE" ("" for disjunction)
  std::string h1, h2;    // specs or templates; "*" for universal
  std::vector<LedgerParam> params;
  std::vector<std::string> except;
  std::vector<std::string> options;  // disjunction
  std::string threshold;
  std::string source;  // citation anchor with verbatim quote
};

struct FactLedger {
  int version = 0;
  std::vector<LedgerEntry> entries;
};

FactLedger ledger_from_json(const nlohmann::json& j);
FactLedger load_ledger(const std::string& path);
nlohmann::json ledger_to_json(const FactLedger& ledger);

// One proven edge between catalog members.
struct FactInstance {
  int h1_idx;
  int h2_idx;
  bool le;  // false = NLE
  std::string fact_id;
};

// Expand every entry against the catalog (matching up to isomorphism).
// Throws if some pair ends up asserted both LE and NLE.
std::vector<FactInstance> instantiate_ledger(const FactLedger& ledger,
                                             const std::vector<Graph>& catalog);

// Does some entry prove h1 <= h2 (resp. refute it)? Returns the fact id.
std::optional<std::string> ledger_le_fact(const FactLedger& ledger, const Graph& h1,
                                          const Graph& h2);
std::optional<std::string> ledger_nle_fact(const FactLedger& ledger, const Graph& h1,
                                           const Graph& h2);

// Entries whose instantiations can mention a graph isomorphic to g.
std::vector<LedgerEntry> ledger_entries_about(const FactLedger& ledger, const Graph& g);

nlohmann::json ledger_entry_to_json(const LedgerEntry& e);

}  // namespace rfs
