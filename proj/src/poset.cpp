#include "rfs/poset.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rfs/pattern.hpp"

namespace rfs {

std::string to_string(LeState s) {
  switch (s) {
    case LeState::unknown: return "UNKNOWN";
    case LeState::subgraph: return "SUBGRAPH";
    case LeState::fact: return "FACT";
    case LeState::empirical_unrefuted: return "EMPIRICAL-UNREFUTED";
    case LeState::refuted: return "REFUTED";
  }
  return "?";
}

std::vector<Graph> build_catalog(int max_order) {
  if (max_order < 1 || max_order > 7)
    throw std::invalid_argument("build_catalog: max_order must be in [1,7]");
  // Connected graphs per order, grown by attaching a new vertex to every
  // nonempty neighbor subset of every smaller graph (any connected graph has
  // a non-cut vertex, so augmentation reaches everything), deduplicated by
  // canonical form.
  std::vector<std::vector<Graph>> levels(static_cast<size_t>(max_order) + 1);
  if (max_order >= 1) levels[1].push_back(Graph({1}, {}));
  for (int n = 2; n <= max_order; ++n) {
    std::set<std::vector<std::uint32_t>> seen;
    for (const Graph& g : levels[static_cast<size_t>(n - 1)]) {
      for (int mask = 1; mask < (1 << (n - 1)); ++mask) {
        std::vector<int> vs(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) vs[static_cast<size_t>(i)] = i + 1;
        std::vector<VertexPair> es = g.edges();
        for (int i = 0; i < n - 1; ++i)
          if (mask & (1 << i)) es.emplace_back(g.label_at(i), n);
        Graph cand(vs, es);
        if (seen.insert(canonical_form(cand)).second)
          levels[static_cast<size_t>(n)].push_back(canonical_copy(cand));
      }
    }
  }
  std::vector<Graph> out;
  for (int n = 1; n <= max_order; ++n)
    for (const Graph& g : levels[static_cast<size_t>(n)])
      if (in_domain_H(g)) out.push_back(g);
  std::sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    if (a.size() != b.size()) return a.size() < b.size();
    return canonical_form(a) < canonical_form(b);
  });
  return out;
}

PosetSnapshot assemble(const std::vector<Graph>& catalog, const FactLedger& ledger,
                       const std::vector<EmpiricalRecord>& verdicts) {
  size_t n = catalog.size();
  PosetSnapshot snap;
  snap.nodes = catalog;
  for (const auto& g : catalog) {
    snap.node_names.push_back(pattern_display_name(g));
    if (!in_domain_H(g)) throw std::invalid_argument("assemble: catalog member outside the domain");
  }
  int max_order = 0;
  for (const auto& g : catalog) max_order = std::max(max_order, g.order());
  snap.max_order = max_order;
  snap.le.assign(n, std::vector<LeState>(n, LeState::unknown));
  snap.provenance.assign(n, std::vector<std::string>(n));

  auto set_le = [&](size_t i, size_t j, LeState s, const std::string& why) {
    if (snap.le[i][j] == LeState::refuted && (s == LeState::subgraph || s == LeState::fact))
      throw std::runtime_error("assemble: LE/REFUTED conflict on (" + snap.node_names[i] + ", " +
                               snap.node_names[j] + "): proven " + why + " vs refuted " +
                               snap.provenance[i][j]);
    if ((snap.le[i][j] == LeState::subgraph || snap.le[i][j] == LeState::fact) &&
        s == LeState::refuted)
      throw std::runtime_error("assemble: LE/REFUTED conflict on (" + snap.node_names[i] + ", " +
                               snap.node_names[j] + "): refuted " + why + " vs proven " +
                               snap.provenance[i][j]);
    // precedence: subgraph/fact > refuted > empirical > unknown
    auto rank = [](LeState s2) {
      switch (s2) {
        case LeState::subgraph: return 3;
        case LeState::fact: return 3;
        case LeState::refuted: return 2;
        case LeState::empirical_unrefuted: return 1;
        default: return 0;
      }
    };
    if (rank(s) > rank(snap.le[i][j])) {
      snap.le[i][j] = s;
      snap.provenance[i][j] = why;
    }
  };

  // subgraph rule (reflexive included)
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (i == j || is_subgraph(catalog[i], catalog[j]))
        set_le(i, j, LeState::subgraph, "SUBGRAPH");

  // ledger instantiations
  std::vector<FactInstance> facts = instantiate_ledger(ledger, catalog);
  for (const auto& f : facts) {
    size_t i = static_cast<size_t>(f.h1_idx), j = static_cast<size_t>(f.h2_idx);
    if (f.le)
      set_le(i, j, LeState::fact, f.fact_id);
    else
      set_le(i, j, LeState::refuted, f.fact_id);
  }

  // empirical overlay
  std::map<std::string, size_t> by_key;
  for (size_t i = 0; i < n; ++i) by_key[canonical_key(catalog[i])] = i;
  for (const auto& r : verdicts) {
    auto i = by_key.find(r.h1_key);
    auto j = by_key.find(r.h2_key);
    if (i == by_key.end() || j == by_key.end()) continue;
    if (r.counterexample)
      set_le(i->second, j->second, LeState::refuted,
             r.detail.empty() ? "counterexample" : r.detail);
    else
      set_le(i->second, j->second, LeState::empirical_unrefuted,
             r.detail.empty() ? "no counterexample up to bound" : r.detail);
  }

  // transitive closure of proven LE
  auto proven = [&](size_t i, size_t j) {
    return snap.le[i][j] == LeState::subgraph || snap.le[i][j] == LeState::fact;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t k = 0; k < n; ++k)
      for (size_t i = 0; i < n; ++i) {
        if (!proven(i, k)) continue;
        for (size_t j = 0; j < n; ++j) {
          if (!proven(k, j) || proven(i, j)) continue;
          set_le(i, j, LeState::fact,
                 "closure(" + snap.node_names[i] + "<=" + snap.node_names[k] + "<=" +
                     snap.node_names[j] + ")");
          changed = true;
        }
      }
  }

  // disjunction entries become consistency assertions over the closure
  for (const auto& e : ledger.entries) {
    if (e.kind != "disjunction") continue;
    std::vector<Graph> options, except;
    for (const auto& s : e.options) options.push_back(make_pattern(s));
    for (const auto& s : e.except) except.push_back(make_pattern(s));
    std::vector<int> opt_idx;
    for (const auto& o : options)
      for (size_t i = 0; i < n; ++i)
        if (are_isomorphic(catalog[i], o)) opt_idx.push_back(static_cast<int>(i));
    for (size_t j = 0; j < n; ++j) {
      bool excepted = false;
      for (const auto& x : except)
        if (are_isomorphic(catalog[j], x)) excepted = true;
      if (excepted) continue;
      bool covered = false;
      for (int oi : opt_idx)
        if (proven(static_cast<size_t>(oi), j)) covered = true;
      if (!covered)
        throw std::runtime_error("assemble: disjunction '" + e.id + "' uncovered at " +
                                 snap.node_names[j]);
    }
  }

  // equivalence classes = SCCs of the proven digraph (mutual reachability
  // after closure means mutual direct edges)
  snap.class_of.assign(n, -1);
  for (size_t i = 0; i < n; ++i) {
    if (snap.class_of[i] != -1) continue;
    int c = static_cast<int>(snap.classes.size());
    snap.classes.push_back({static_cast<int>(i)});
    snap.class_of[i] = c;
    for (size_t j = i + 1; j < n; ++j)
      if (snap.class_of[j] == -1 && proven(i, j) && proven(j, i)) {
        snap.classes[static_cast<size_t>(c)].push_back(static_cast<int>(j));
        snap.class_of[j] = c;
      }
  }

  size_t nc = snap.classes.size();
  std::vector<std::vector<char>> cle(nc, std::vector<char>(nc, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (proven(i, j))
        cle[static_cast<size_t>(snap.class_of[i])][static_cast<size_t>(snap.class_of[j])] = 1;
  // antisymmetry of the quotient
  for (size_t a = 0; a < nc; ++a)
    for (size_t b = 0; b < nc; ++b)
      if (a != b && cle[a][b] && cle[b][a])
        throw std::logic_error("assemble: quotient order contains a 2-cycle");

  // Hasse: covers of the class order
  for (size_t a = 0; a < nc; ++a)
    for (size_t b = 0; b < nc; ++b) {
      if (a == b || !cle[a][b]) continue;
      bool has_mid = false;
      for (size_t c = 0; c < nc && !has_mid; ++c)
        if (c != a && c != b && cle[a][c] && cle[c][b]) has_mid = true;
      if (!has_mid) snap.hasse.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  std::sort(snap.hasse.begin(), snap.hasse.end());

  // candidate equivalences: mutual empirical-unrefuted, unproven pairs
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (snap.le[i][j] == LeState::empirical_unrefuted &&
          snap.le[j][i] == LeState::empirical_unrefuted)
        snap.equiv_candidates.emplace_back(static_cast<int>(i), static_cast<int>(j));

  return snap;
}

std::string export_dot(const PosetSnapshot& snap) {
  std::ostringstream os;
  os << "digraph hasse {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box, fontname=\"monospace\"];\n";
  for (size_t c = 0; c < snap.classes.size(); ++c) {
    os << "  c" << c << " [label=\"";
    for (size_t i = 0; i < snap.classes[c].size(); ++i) {
      if (i) os << " | ";
      os << snap.node_names[static_cast<size_t>(snap.classes[c][i])];
    }
    os << "\"];\n";
  }
  for (const auto& [lo, hi] : snap.hasse) {
    // provenance of a direct member pair, if any
    std::string why = "closure";
    for (int i : snap.classes[static_cast<size_t>(lo)]) {
      for (int j : snap.classes[static_cast<size_t>(hi)]) {
        LeState s = snap.le[static_cast<size_t>(i)][static_cast<size_t>(j)];
        if (s == LeState::subgraph) {
          why = "SUBGRAPH";
          break;
        }
        if (s == LeState::fact) {
          const std::string& p = snap.provenance[static_cast<size_t>(i)][static_cast<size_t>(j)];
          if (p.rfind("closure(", 0) != 0) {
            why = p;
            break;
          }
        }
      }
      if (why != "closure") break;
    }
    os << "  c" << lo << " -> c" << hi << " [label=\"" << why << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

nlohmann::json snapshot_to_json(const PosetSnapshot& snap) {
  nlohmann::json j;
  j["max_order"] = snap.max_order;
  j["nodes"] = nlohmann::json::array();
  for (size_t i = 0; i < snap.nodes.size(); ++i) {
    j["nodes"].push_back({{"name", snap.node_names[i]},
                          {"order", snap.nodes[i].order()},
                          {"size", snap.nodes[i].size()},
                          {"key", canonical_key(snap.nodes[i])}});
  }
  j["le"] = nlohmann::json::array();
  j["provenance"] = nlohmann::json::array();
  for (size_t i = 0; i < snap.le.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    nlohmann::json prov = nlohmann::json::array();
    for (size_t k = 0; k < snap.le[i].size(); ++k) {
      row.push_back(to_string(snap.le[i][k]));
      prov.push_back(snap.provenance[i][k]);
    }
    j["le"].push_back(row);
    j["provenance"].push_back(prov);
  }
  j["classes"] = snap.classes;
  j["hasse"] = nlohmann::json::array();
  for (const auto& [a, b] : snap.hasse) j["hasse"].push_back({a, b});
  j["equiv_candidates"] = nlohmann::json::array();
  for (const auto& [a, b] : snap.equiv_candidates) j["equiv_candidates"].push_back({a, b});
  return j;
}

}  // namespace rfs
