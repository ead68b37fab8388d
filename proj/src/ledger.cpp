#include "rfs/ledger.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>

#include "rfs/pattern.hpp"

namespace rfs {

namespace {

// Tiny arithmetic evaluator for template braces: ints, parameter names,
// + - *, left to right with * binding tighter.
struct ExprParser {
  const std::string& s;
  size_t pos = 0;
  const std::map<std::string, int>& env;

  int parse() {
    int v = term();
    while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      char op = s[pos++];
      int r = term();
      v = op == '+' ? v + r : v - r;
    }
    if (pos != s.size()) throw std::invalid_argument("ledger expr: trailing text in '" + s + "'");
    return v;
  }

  int term() {
    int v = factor();
    while (pos < s.size() && s[pos] == '*') {
      ++pos;
      v *= factor();
    }
    return v;
  }

  int factor() {
    if (pos < s.size() && s[pos] == '(') {
      ++pos;
      int v = term();
      while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        char op = s[pos++];
        int r = term();
        v = op == '+' ? v + r : v - r;
      }
      if (pos >= s.size() || s[pos] != ')') throw std::invalid_argument("ledger expr: missing ')'");
      ++pos;
      return v;
    }
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      return std::stoi(s.substr(start, pos - start));
    }
    size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
    if (pos == start) throw std::invalid_argument("ledger expr: parse error in '" + s + "'");
    std::string name = s.substr(start, pos - start);
    auto it = env.find(name);
    if (it == env.end()) throw std::invalid_argument("ledger expr: unknown parameter '" + name + "'");
    return it->second;
  }
};

std::string expand_template(const std::string& tmpl, const std::map<std::string, int>& env) {
  std::string out;
  size_t pos = 0;
  while (pos < tmpl.size()) {
    if (tmpl[pos] == '{') {
      size_t close = tmpl.find('}', pos);
      if (close == std::string::npos) throw std::invalid_argument("ledger template: missing '}'");
      std::string expr = tmpl.substr(pos + 1, close - pos - 1);
      ExprParser p{expr, 0, env};
      out += std::to_string(p.parse());
      pos = close + 1;
    } else {
      out.push_back(tmpl[pos++]);
    }
  }
  return out;
}

// Instantiation ceiling: patterns of order beyond the largest catalog member
// can never match, so parameter loops stop there.
int catalog_max_order(const std::vector<Graph>& catalog) {
  int mx = 0;
  for (const auto& g : catalog) mx = std::max(mx, g.order());
  return mx;
}

struct CatalogIndex {
  std::vector<std::string> keys;
  std::map<std::string, int> by_key;

  explicit CatalogIndex(const std::vector<Graph>& catalog) {
    for (size_t i = 0; i < catalog.size(); ++i) {
      keys.push_back(canonical_key(catalog[i]));
      by_key[keys.back()] = static_cast<int>(i);
    }
  }

  std::optional<int> find(const Graph& g) const {
    auto it = by_key.find(canonical_key(g));
    if (it == by_key.end()) return std::nullopt;
    return it->second;
  }
};

bool param_value_ok(const LedgerParam& p, int v) {
  if (v < p.min) return false;
  if (p.max && v > *p.max) return false;
  if (p.parity == "odd" && v % 2 == 0) return false;
  if (p.parity == "even" && v % 2 != 0) return false;
  return true;
}

// Enumerate parameter environments whose instantiated patterns stay at or
// below the order cap. Parameter values are stepped from their minimum; the
// pattern families used in templates grow monotonically in each parameter,
// so the walk stops once the smallest instantiation overshoots.
void for_each_env(const LedgerEntry& e, int order_cap,
                  const std::function<void(const std::map<std::string, int>&)>& fn) {
  std::map<std::string, int> env;
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == e.params.size()) {
      try {
        for (const std::string& tmpl : {e.h1, e.h2}) {
          if (tmpl.empty() || tmpl == "*") continue;
          Graph g = make_pattern(expand_template(tmpl, env));
          if (g.order() > order_cap) return;
        }
      } catch (const std::invalid_argument&) {
        return;  // out-of-grammar instantiation (e.g. C with k < 3)
      }
      fn(env);
      return;
    }
    const LedgerParam& p = e.params[i];
    int hard_max = p.max.value_or(p.min + 2 * order_cap + 8);
    for (int v = p.min; v <= hard_max; ++v) {
      if (!param_value_ok(p, v)) continue;
      env[p.name] = v;
      rec(i + 1);
    }
    env.erase(p.name);
  };
  rec(0);
}

std::vector<Graph> parse_spec_list(const std::vector<std::string>& specs) {
  std::vector<Graph> out;
  for (const auto& s : specs) out.push_back(make_pattern(s));
  return out;
}

bool iso_to_any(const Graph& g, const std::vector<Graph>& list) {
  for (const auto& h : list)
    if (are_isomorphic(g, h)) return true;
  return false;
}

// Core expansion of one entry into catalog index pairs.
void expand_entry(const LedgerEntry& e, const std::vector<Graph>& catalog,
                  const CatalogIndex& index,
                  const std::function<void(int, int, bool)>& emit) {
  int cap = catalog_max_order(catalog);
  bool le = e.relation == "LE";

  if (e.kind == "pair" || e.kind == "family") {
    for_each_env(e, cap, [&](const std::map<std::string, int>& env) {
      Graph g1 = make_pattern(expand_template(e.h1, env));
      Graph g2 = make_pattern(expand_template(e.h2, env));
      auto i = index.find(g1);
      auto j = index.find(g2);
      if (i && j) emit(*i, *j, le);
    });
    return;
  }

  if (e.kind == "universal") {
    std::vector<Graph> except = parse_spec_list(e.except);
    bool star_h1 = e.h1 == "*";
    const std::string& fixed_tmpl = star_h1 ? e.h2 : e.h1;
    for_each_env(e, cap, [&](const std::map<std::string, int>& env) {
      Graph fixed = make_pattern(expand_template(fixed_tmpl, env));
      auto fi = index.find(fixed);
      if (!fi) return;
      for (size_t c = 0; c < catalog.size(); ++c) {
        if (iso_to_any(catalog[c], except)) continue;
        if (star_h1)
          emit(static_cast<int>(c), *fi, le);
        else
          emit(*fi, static_cast<int>(c), le);
      }
    });
    return;
  }

  if (e.kind == "star_ceiling") {
    for_each_env(e, cap, [&](const std::map<std::string, int>& env) {
      int k = env.at("k");
      Graph ceiling = make_pattern("K1," + std::to_string(k));
      auto fi = index.find(ceiling);
      if (!fi) return;
      std::vector<Graph> allowed;
      for (int j = 3; j <= k; ++j) {
        allowed.push_back(make_pattern("K1," + std::to_string(j)));
        allowed.push_back(make_pattern("K1," + std::to_string(j) + "+"));
      }
      for (size_t c = 0; c < catalog.size(); ++c) {
        if (iso_to_any(catalog[c], allowed)) continue;
        emit(static_cast<int>(c), *fi, false);
      }
    });
    return;
  }

  if (e.kind == "clms_nle") {
    for (size_t a = 0; a < catalog.size(); ++a)
      for (size_t b = 0; b < catalog.size(); ++b) {
        if (a == b) continue;
        const Graph& big = catalog[a];
        const Graph& small = catalog[b];
        if (small.order() < 4) continue;
        if (!is_subgraph(small, big)) continue;
        if (are_isomorphic(small, big)) continue;
        // the one exceptional shape: big = K1,k+ over small = K1,k
        if (auto name = family_name(small); name && name->rfind("K1,", 0) == 0 &&
                                            name->back() != '+' && name->find("+e") == std::string::npos) {
          int k = small.order() - 1;
          if (k >= 3 && are_isomorphic(big, make_pattern("K1," + std::to_string(k) + "+")))
            continue;
        }
        emit(static_cast<int>(a), static_cast<int>(b), false);
      }
    return;
  }

  if (e.kind == "disjunction") return;  // assertion-only, no edges

  throw std::invalid_argument("ledger: unknown entry kind '" + e.kind + "'");
}

}  // namespace

FactLedger ledger_from_json(const nlohmann::json& j) {
  FactLedger ledger;
  ledger.version = j.value("version", 0);
  for (const auto& je : j.at("entries")) {
    LedgerEntry e;
    e.id = je.at("id").get<std::string>();
    e.kind = je.at("kind").get<std::string>();
    e.relation = je.value("relation", "");
    e.h1 = je.value("h1", "");
    e.h2 = je.value("h2", "");
    e.threshold = je.value("threshold", "");
    e.source = je.at("source").get<std::string>();
    if (e.source.empty()) throw std::invalid_argument("ledger: entry '" + e.id + "' has no source quote");
    if (e.kind != "disjunction" && e.relation != "LE" && e.relation != "NLE")
      throw std::invalid_argument("ledger: entry '" + e.id + "' needs relation LE or NLE");
    if (je.contains("params"))
      for (const auto& jp : je.at("params")) {
        LedgerParam p;
        p.name = jp.at("name").get<std::string>();
        p.min = jp.value("min", 1);
        if (jp.contains("max")) p.max = jp.at("max").get<int>();
        p.parity = jp.value("parity", "");
        e.params.push_back(std::move(p));
      }
    if (je.contains("except"))
      for (const auto& s : je.at("except")) e.except.push_back(s.get<std::string>());
    if (je.contains("options"))
      for (const auto& s : je.at("options")) e.options.push_back(s.get<std::string>());
    ledger.entries.push_back(std::move(e));
  }
  return ledger;
}

FactLedger load_ledger(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open ledger file '" + path + "'");
  nlohmann::json j;
  in >> j;
  return ledger_from_json(j);
}

nlohmann::json ledger_entry_to_json(const LedgerEntry& e) {
  nlohmann::json je;
  je["id"] = e.id;
  je["kind"] = e.kind;
  if (!e.relation.empty()) je["relation"] = e.relation;
  if (!e.h1.empty()) je["h1"] = e.h1;
  if (!e.h2.empty()) je["h2"] = e.h2;
  if (!e.params.empty()) {
    nlohmann::json ps = nlohmann::json::array();
    for (const auto& p : e.params) {
      nlohmann::json jp{{"name", p.name}, {"min", p.min}};
      if (p.max) jp["max"] = *p.max;
      if (!p.parity.empty()) jp["parity"] = p.parity;
      ps.push_back(jp);
    }
    je["params"] = ps;
  }
  if (!e.except.empty()) je["except"] = e.except;
  if (!e.options.empty()) je["options"] = e.options;
  if (!e.threshold.empty()) je["threshold"] = e.threshold;
  je["source"] = e.source;
  return je;
}

nlohmann::json ledger_to_json(const FactLedger& ledger) {
  nlohmann::json j;
  j["version"] = ledger.version;
  j["entries"] = nlohmann::json::array();
  for (const auto& e : ledger.entries) j["entries"].push_back(ledger_entry_to_json(e));
  return j;
}

std::vector<FactInstance> instantiate_ledger(const FactLedger& ledger,
                                             const std::vector<Graph>& catalog) {
  CatalogIndex index(catalog);
  std::map<std::pair<int, int>, std::pair<bool, std::string>> seen;
  std::vector<FactInstance> out;
  for (const auto& e : ledger.entries) {
    expand_entry(e, catalog, index, [&](int i, int j, bool le) {
      auto key = std::make_pair(i, j);
      auto it = seen.find(key);
      if (it != seen.end()) {
        if (it->second.first != le)
          throw std::runtime_error("ledger contradiction on (" + index.keys[static_cast<size_t>(i)] +
                                   ", " + index.keys[static_cast<size_t>(j)] + "): " +
                                   it->second.second + " vs " + e.id);
        return;  // duplicate assertion
      }
      seen.emplace(key, std::make_pair(le, e.id));
      out.push_back({i, j, le, e.id});
    });
  }
  return out;
}

namespace {

std::optional<std::string> ledger_fact(const FactLedger& ledger, const Graph& h1, const Graph& h2,
                                       bool want_le) {
  std::vector<Graph> catalog{h1, h2};
  if (are_isomorphic(h1, h2)) catalog.pop_back();
  CatalogIndex index(catalog);
  int i1 = *index.find(h1);
  int i2 = *index.find(h2);
  std::optional<std::string> hit;
  for (const auto& e : ledger.entries) {
    if (hit) break;
    expand_entry(e, catalog, index, [&](int i, int j, bool le) {
      if (!hit && i == i1 && j == i2 && le == want_le) hit = e.id;
    });
  }
  return hit;
}

}  // namespace

std::optional<std::string> ledger_le_fact(const FactLedger& ledger, const Graph& h1,
                                          const Graph& h2) {
  return ledger_fact(ledger, h1, h2, true);
}

std::optional<std::string> ledger_nle_fact(const FactLedger& ledger, const Graph& h1,
                                           const Graph& h2) {
  return ledger_fact(ledger, h1, h2, false);
}

std::vector<LedgerEntry> ledger_entries_about(const FactLedger& ledger, const Graph& g) {
  std::vector<LedgerEntry> out;
  for (const auto& e : ledger.entries) {
    bool mentioned = false;
    if (e.kind == "universal" || e.kind == "star_ceiling" || e.kind == "clms_nle" ||
        e.kind == "disjunction") {
      mentioned = true;  // quantified entries can reach any pattern
    } else {
      // either side instantiating to g counts as a mention; the slack on the
      // order cap lets the partner template overshoot g's order
      for_each_env(e, g.order() + 8, [&](const std::map<std::string, int>& env) {
        for (const std::string& tmpl : {e.h1, e.h2})
          if (are_isomorphic(make_pattern(expand_template(tmpl, env)), g)) mentioned = true;
      });
    }
    if (mentioned) out.push_back(e);
  }
  return out;
}

}  // namespace rfs
