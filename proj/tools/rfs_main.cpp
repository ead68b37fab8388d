// rfs: command-line surface over the library. JSON goes to stdout, human
// summaries to stderr. Exit codes: 0 pass/success, 1 contract failure or
// counterexample found, 2 usage or input errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rfs/coloring.hpp"
#include "rfs/graph.hpp"
#include "rfs/ledger.hpp"
#include "rfs/partitions.hpp"
#include "rfs/pattern.hpp"
#include "rfs/poset.hpp"
#include "rfs/rainbow.hpp"
#include "rfs/relation.hpp"
#include "rfs/verdict_cache.hpp"
#include "rfs/witness.hpp"

#ifndef RFS_DEFAULT_LEDGER
#define RFS_DEFAULT_LEDGER "data/ledger.json"
#endif

namespace {

using nlohmann::json;

std::string ledger_path_or_default(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("RFS_LEDGER")) return env;
  std::ifstream probe("data/ledger.json");
  if (probe) return "data/ledger.json";
  return RFS_DEFAULT_LEDGER;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  json j;
  in >> j;
  return j;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

rfs::EdgeColoring load_coloring_file(const std::string& path) {
  return rfs::coloring_from_json(load_json_file(path));
}

json witness_report_json(const rfs::WitnessId& id, const rfs::WitnessReport& rep) {
  json j;
  j["witness"] = id.name;
  json params = json::object();
  params["t"] = id.t;
  if (id.k) params["k"] = *id.k;
  if (id.pattern) params["pattern"] = rfs::pattern_display_name(*id.pattern);
  j["params"] = params;
  j["pass"] = rep.pass;
  j["clauses"] = json::array();
  for (const auto& cl : rep.clauses) {
    json jc;
    jc["kind"] = cl.kind;
    if (!cl.pattern.empty()) jc["pattern"] = cl.pattern;
    jc["pass"] = cl.pass;
    if (!cl.detail.empty()) jc["detail"] = cl.detail;
    if (cl.embedding) {
      json m = json::object();
      for (size_t i = 0; i < cl.embedding->pattern_vertices.size(); ++i)
        m[std::to_string(cl.embedding->pattern_vertices[i])] = cl.embedding->host_vertices[i];
      jc["embedding"] = m;
    }
    j["clauses"].push_back(jc);
  }
  return j;
}

void print_report_summary(const rfs::WitnessId& id, const rfs::WitnessReport& rep) {
  std::ostringstream os;
  os << id.name << " t=" << id.t;
  if (id.k) os << " k=" << *id.k;
  if (id.pattern) os << " pattern=" << rfs::pattern_display_name(*id.pattern);
  os << ": ";
  bool first = true;
  for (const auto& cl : rep.clauses) {
    if (!first) os << "; ";
    first = false;
    if (cl.kind == "free") os << (cl.pass ? "FREE of " : "NOT FREE of ") << cl.pattern;
    else if (cl.kind == "contains") os << (cl.pass ? "CONTAINS " : "MISSING ") << cl.pattern;
    else os << "colors " << (cl.pass ? "ok" : cl.detail);
  }
  os << " -- " << (rep.pass ? "PASS" : "FAIL");
  std::cerr << os.str() << "\n";
}

json witness_file_json(const rfs::WitnessId& id, const rfs::EdgeColoring& kc) {
  json j = rfs::coloring_to_json(kc);
  j["witness"] = id.name;
  json params = json::object();
  params["t"] = id.t;
  if (id.k) params["k"] = *id.k;
  if (id.pattern) params["pattern"] = rfs::pattern_display_name(*id.pattern);
  j["params"] = params;
  return j;
}

struct RelationArgs {
  std::string spec1, spec2;
  int max_n = 0;
  int min_n = 0;
  int min_colors = 1;
  bool exhaustive = false;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  int jobs = 1;
  bool deterministic = true;
  bool use_facts = false;
  std::string cache_path;
  std::string ledger_path;
};

int run_relation_check(const RelationArgs& a) {
  if (a.exhaustive && a.samples > 0)
    throw std::runtime_error("--exhaustive and --samples are mutually exclusive");
  rfs::Graph h1 = rfs::make_pattern(a.spec1);
  rfs::Graph h2 = rfs::make_pattern(a.spec2);
  rfs::Budget budget;
  if (a.exhaustive) budget.mode = rfs::Budget::Mode::exhaustive;
  else if (a.samples > 0) {
    budget.mode = rfs::Budget::Mode::sampled;
    budget.samples = a.samples;
  }
  budget.seed = a.seed;
  budget.jobs = a.jobs;
  budget.deterministic = a.deterministic;

  std::string mode = a.exhaustive ? "exhaustive" : (a.samples > 0 ? "sampled" : "auto");
  int min_n = a.min_n > 0 ? a.min_n : h2.order();
  std::string cache_path = a.cache_path;
  if (cache_path.empty())
    if (const char* env = std::getenv("RFS_CACHE")) cache_path = env;

  std::string key = rfs::VerdictCache::make_key(h1, h2, min_n, a.max_n, a.min_colors, mode,
                                                a.samples, a.seed);
  std::optional<rfs::VerdictCache> cache;
  if (!cache_path.empty()) {
    cache.emplace(cache_path);
    if (auto hit = cache->lookup(key)) {
      std::cout << *hit << "\n";
      std::cerr << "cache hit: " << key << "\n";
      json j = json::parse(*hit);
      return j.at("kind") == "COUNTEREXAMPLE" ? 1 : 0;
    }
  }

  rfs::FactLedger ledger;
  if (a.use_facts) ledger = rfs::load_ledger(ledger_path_or_default(a.ledger_path));
  rfs::Verdict v = rfs::check_relation(h1, h2, a.max_n, a.min_colors, budget,
                                       a.use_facts ? &ledger : nullptr, a.min_n);
  std::string out = rfs::verdict_to_json(v).dump();
  std::cout << out << "\n";
  std::cerr << rfs::to_string(v.kind) << " (" << v.visited << " colorings examined)\n";
  if (cache) {
    cache->store(key, out);
    cache->save();
  }
  return v.kind == rfs::VerdictKind::counterexample ? 1 : 0;
}

std::vector<int> parse_t_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) throw std::runtime_error("--t-range expects A..B");
  int a = std::stoi(text.substr(0, dots));
  int b = std::stoi(text.substr(dots + 2));
  if (a > b) throw std::runtime_error("--t-range expects A <= B");
  std::vector<int> out;
  for (int t = a; t <= b; ++t) out.push_back(t);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rainbow forbidden subgraph order toolkit"};
  app.require_subcommand(1);

  // patterns
  auto* patterns = app.add_subcommand("patterns", "pattern catalog");
  patterns->require_subcommand(1);
  auto* pat_list = patterns->add_subcommand("list", "grammar and named families");
  std::string pat_spec;
  auto* pat_show = patterns->add_subcommand("show", "parse a spec and print the graph");
  pat_show->add_option("spec", pat_spec, "PatternSpec")->required();

  // witness
  auto* witness = app.add_subcommand("witness", "build or verify witness colorings");
  witness->require_subcommand(1);
  std::string w_name, w_pattern, w_out, w_trange, w_coloring;
  int w_t = 0, w_k = 0;
  auto* w_build = witness->add_subcommand("build", "construct a witness coloring");
  w_build->add_option("id", w_name, "witness id")->required();
  w_build->add_option("--t", w_t, "color count parameter");
  w_build->add_option("--k", w_k, "family parameter");
  w_build->add_option("--pattern", w_pattern, "pattern argument (thm3-planted, thm4-bfsmax)");
  w_build->add_option("--out", w_out, "output JSON file")->required();
  auto* w_verify = witness->add_subcommand("verify", "validate a witness contract");
  w_verify->add_option("id", w_name, "witness id")->required();
  w_verify->add_option("--t", w_t, "color count parameter");
  w_verify->add_option("--k", w_k, "family parameter");
  w_verify->add_option("--pattern", w_pattern, "pattern argument");
  w_verify->add_option("--t-range", w_trange, "validate across t = A..B");
  w_verify->add_option("--coloring", w_coloring, "validate this coloring file instead of rebuilding");

  // search
  auto* search = app.add_subcommand("search", "rainbow pattern search in a coloring");
  std::string s_coloring, s_pattern;
  search->add_option("--coloring", s_coloring, "coloring JSON file")->required();
  search->add_option("--pattern", s_pattern, "PatternSpec")->required();

  // relation
  auto* relation = app.add_subcommand("relation", "bounded relation checks");
  relation->require_subcommand(1);
  auto* rel_check = relation->add_subcommand("check", "scan for counterexamples to h1 <= h2");
  RelationArgs ra;
  rel_check->add_option("spec1", ra.spec1, "pattern H1")->required();
  rel_check->add_option("spec2", ra.spec2, "pattern H2")->required();
  rel_check->add_option("--max-n", ra.max_n, "largest host size")->required();
  rel_check->add_option("--min-n", ra.min_n, "smallest host size (default |V(H2)|)");
  rel_check->add_option("--min-colors", ra.min_colors, "minimum color count");
  rel_check->add_flag("--exhaustive", ra.exhaustive, "force exhaustive scan");
  rel_check->add_option("--samples", ra.samples, "force sampled scan with this many samples");
  rel_check->add_option("--seed", ra.seed, "sampling seed");
  rel_check->add_option("--jobs", ra.jobs, "worker threads for exhaustive scans");
  rel_check->add_flag("--deterministic,!--no-deterministic", ra.deterministic,
                      "prefix-ordered result selection (default on)");
  rel_check->add_flag("--use-facts", ra.use_facts, "short-circuit on ledger facts");
  rel_check->add_option("--cache", ra.cache_path, "verdict cache file (env RFS_CACHE)");
  rel_check->add_option("--ledger", ra.ledger_path, "ledger file (env RFS_LEDGER)");

  // facts
  auto* facts = app.add_subcommand("facts", "the proven-results ledger");
  facts->require_subcommand(1);
  auto* facts_list = facts->add_subcommand("list", "list ledger entries");
  std::string f_about, f_ledger;
  facts_list->add_option("--about", f_about, "only entries that can mention this pattern");
  facts_list->add_option("--ledger", f_ledger, "ledger file (env RFS_LEDGER)");

  // poset
  auto* poset = app.add_subcommand("poset", "order assembly");
  poset->require_subcommand(1);
  auto* poset_build = poset->add_subcommand("build", "assemble the catalog order");
  int p_max_order = 5;
  std::string p_dot, p_json, p_ledger, p_verdicts;
  poset_build->add_option("--max-order", p_max_order, "catalog order bound (<= 7)")->required();
  poset_build->add_option("--out-dot", p_dot, "write the Hasse diagram DOT here");
  poset_build->add_option("--out-json", p_json, "write the snapshot JSON here");
  poset_build->add_option("--ledger", p_ledger, "ledger file (env RFS_LEDGER)");
  poset_build->add_option("--verdicts", p_verdicts, "verdict cache file to overlay");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*pat_list) {
      for (const auto& line : rfs::pattern_family_help()) std::cout << line << "\n";
      return 0;
    }
    if (*pat_show) {
      rfs::Graph g = rfs::make_pattern(pat_spec);
      rfs::GraphInvariants inv = rfs::invariants(g);
      json j;
      j["spec"] = pat_spec;
      j["name"] = rfs::pattern_display_name(g);
      j["vertices"] = g.vertices();
      j["edges"] = json::array();
      for (const auto& e : g.edges()) j["edges"].push_back({e.first, e.second});
      j["invariants"] = {{"order", inv.order},         {"size", inv.size},
                         {"max_degree", inv.max_degree}, {"dimension", inv.dimension},
                         {"is_tree", inv.is_tree},      {"connected", inv.connected},
                         {"branch_vertices", inv.branch_vertices}};
      j["in_domain"] = rfs::in_domain_H(g);
      j["canonical_key"] = rfs::canonical_key(g);
      std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (*w_build || *w_verify) {
      rfs::WitnessId id;
      id.name = w_name;
      id.t = w_t;
      if (w_k > 0) id.k = w_k;
      if (!w_pattern.empty()) id.pattern = rfs::make_pattern(w_pattern);
      if (!rfs::is_witness_name(id.name)) {
        std::cerr << "unknown witness id '" << id.name << "'; known ids:\n";
        for (const auto& info : rfs::witness_registry())
          std::cerr << "  " << info.name << "  (" << info.param_doc << ")\n";
        return 2;
      }
      if (*w_build) {
        rfs::EdgeColoring kc = rfs::build_witness(id);
        json j = witness_file_json(id, kc);
        write_text_file(w_out, j.dump(2) + "\n");
        std::cerr << "wrote " << w_out << " (n=" << kc.n() << ", colors=" << kc.num_colors()
                  << ")\n";
        return 0;
      }
      // verify
      if (!w_trange.empty() && !w_coloring.empty()) {
        std::cerr << "error: --t-range and --coloring are mutually exclusive\n";
        return 2;
      }
      if (!w_trange.empty()) {
        std::vector<int> ts = parse_t_range(w_trange);
        rfs::FamilyRefutation fam = rfs::refute_via_witness_family(id, ts);
        json j;
        j["witness"] = id.name;
        j["all_pass"] = fam.all_pass;
        j["runs"] = json::array();
        for (const auto& [t, rep] : fam.runs) {
          rfs::WitnessId rid = id;
          rid.t = t;
          print_report_summary(rid, rep);
          j["runs"].push_back(witness_report_json(rid, rep));
        }
        std::cout << j.dump() << "\n";
        return fam.all_pass ? 0 : 1;
      }
      rfs::WitnessReport rep = w_coloring.empty()
                                   ? rfs::validate_witness(id)
                                   : rfs::validate_against(id, load_coloring_file(w_coloring));
      print_report_summary(id, rep);
      std::cout << witness_report_json(id, rep).dump() << "\n";
      return rep.pass ? 0 : 1;
    }

    if (*search) {
      rfs::EdgeColoring kc = load_coloring_file(s_coloring);
      rfs::Graph pat = rfs::make_pattern(s_pattern);
      rfs::SearchResult r = rfs::find_rainbow_embedding(kc, pat);
      if (r.status == rfs::SearchStatus::found) {
        json m = json::object();
        for (size_t i = 0; i < r.embedding->pattern_vertices.size(); ++i)
          m[std::to_string(r.embedding->pattern_vertices[i])] = r.embedding->host_vertices[i];
        std::cout << m.dump() << "\n";
        std::cerr << "rainbow " << s_pattern << " found\n";
      } else {
        std::cout << "FREE\n";
        std::cerr << (r.status == rfs::SearchStatus::pattern_too_large
                          ? "pattern larger than host\n"
                          : "no rainbow copy\n");
      }
      return 0;
    }

    if (*rel_check) return run_relation_check(ra);

    if (*facts_list) {
      rfs::FactLedger ledger = rfs::load_ledger(ledger_path_or_default(f_ledger));
      json out = json::array();
      if (f_about.empty()) {
        for (const auto& e : ledger.entries) out.push_back(rfs::ledger_entry_to_json(e));
      } else {
        rfs::Graph g = rfs::make_pattern(f_about);
        for (const auto& e : rfs::ledger_entries_about(ledger, g))
          out.push_back(rfs::ledger_entry_to_json(e));
      }
      std::cout << out.dump(2) << "\n";
      std::cerr << out.size() << " entries\n";
      return 0;
    }

    if (*poset_build) {
      rfs::FactLedger ledger = rfs::load_ledger(ledger_path_or_default(p_ledger));
      std::vector<rfs::Graph> catalog = rfs::build_catalog(p_max_order);
      std::vector<rfs::EmpiricalRecord> records;
      if (!p_verdicts.empty()) {
        rfs::VerdictCache cache(p_verdicts);
        for (const auto& [key, text] : cache.records()) {
          json j = json::parse(text);
          std::string kind = j.at("kind").get<std::string>();
          if (kind != "COUNTEREXAMPLE" && kind != "NO_COUNTEREXAMPLE_UP_TO") continue;
          rfs::EmpiricalRecord rec;
          rec.h1_key = rfs::canonical_key(rfs::make_pattern(j.at("h1").get<std::string>()));
          rec.h2_key = rfs::canonical_key(rfs::make_pattern(j.at("h2").get<std::string>()));
          rec.counterexample = kind == "COUNTEREXAMPLE";
          rec.detail = key;
          records.push_back(std::move(rec));
        }
      }
      rfs::PosetSnapshot snap = rfs::assemble(catalog, ledger, records);
      std::string dot = rfs::export_dot(snap);
      if (!p_dot.empty()) write_text_file(p_dot, dot);
      if (!p_json.empty()) write_text_file(p_json, rfs::snapshot_to_json(snap).dump(2) + "\n");
      std::cerr << "catalog " << catalog.size() << " patterns, " << snap.classes.size()
                << " classes, " << snap.hasse.size() << " covers\n";
      if (p_dot.empty() && p_json.empty()) std::cout << dot;
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
