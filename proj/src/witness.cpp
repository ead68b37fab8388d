#include "rfs/witness.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "rfs/pattern.hpp"

namespace rfs {

namespace {

[[noreturn]] void bound_error(const std::string& name, const std::string& what) {
  throw std::invalid_argument("witness " + name + ": " + what);
}

int require_k(const WitnessId& id) {
  if (!id.k) bound_error(id.name, "needs --k");
  return *id.k;
}

const Graph& require_pattern(const WitnessId& id) {
  if (!id.pattern) bound_error(id.name, "needs --pattern");
  return *id.pattern;
}

// Host with a block of construction vertices 1..base followed by pendant
// pairs (y_j, z_j) for j in [j0, t]: y_j = base + 2(j-j0) + 1, z_j = y_j + 1.
struct PendantPairs {
  int base, j0;
  int y(int j) const { return base + 2 * (j - j0) + 1; }
  int z(int j) const { return base + 2 * (j - j0) + 2; }
  int host_n(int t) const { return base + 2 * (t - j0 + 1); }
};

// First edge lying on a cycle (DFS bridge pass); nullopt for forests.
std::optional<VertexPair> first_cycle_edge(const Graph& g) {
  int n = g.order();
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(n));  // (nbr idx, edge idx)
  for (size_t ei = 0; ei < g.edges().size(); ++ei) {
    int a = g.index_of(g.edges()[ei].first), b = g.index_of(g.edges()[ei].second);
    adj[static_cast<size_t>(a)].emplace_back(b, static_cast<int>(ei));
    adj[static_cast<size_t>(b)].emplace_back(a, static_cast<int>(ei));
  }
  std::vector<int> tin(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0);
  std::vector<char> is_bridge(g.edges().size(), 0);
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int v, int pe) {
    tin[static_cast<size_t>(v)] = low[static_cast<size_t>(v)] = timer++;
    for (auto [to, ei] : adj[static_cast<size_t>(v)]) {
      if (ei == pe) continue;
      if (tin[static_cast<size_t>(to)] == -1) {
        dfs(to, ei);
        low[static_cast<size_t>(v)] = std::min(low[static_cast<size_t>(v)], low[static_cast<size_t>(to)]);
        if (low[static_cast<size_t>(to)] > tin[static_cast<size_t>(v)]) is_bridge[static_cast<size_t>(ei)] = 1;
      } else {
        low[static_cast<size_t>(v)] = std::min(low[static_cast<size_t>(v)], tin[static_cast<size_t>(to)]);
      }
    }
  };
  for (int v = 0; v < n; ++v)
    if (tin[static_cast<size_t>(v)] == -1) dfs(v, -1);
  for (size_t ei = 0; ei < g.edges().size(); ++ei)
    if (!is_bridge[ei]) return g.edges()[ei];
  return std::nullopt;
}

std::vector<std::string> cycle_specs(int from, int to) {
  std::vector<std::string> out;
  for (int k = from; k <= to; ++k) out.push_back("C" + std::to_string(k));
  return out;
}

// ---- builders -------------------------------------------------------------

// Matching edges x_i y_i colored i, everything else colored t. Every
// connected rainbow subgraph is inside a P4.
EdgeColoring build_lemma1_matching(int t) {
  int half = t - 1;  // x_1..x_{t-1} = 1..half, y_i = half + i
  return EdgeColoring::from_rule(2 * half, [&](int u, int v) {
    if (v == u + half && u <= half) return u;
    return t;
  });
}

// A rainbow copy of h2 planted on 1..n0 with its edges colored 1..m (the
// removable edge first when h2 has a cycle), pendant pairs colored m+1..t,
// color 1 everywhere else.
EdgeColoring build_thm3_planted(const Graph& h2, int t) {
  int n0 = h2.order(), m = h2.size();
  std::vector<VertexPair> ordered = h2.edges();
  if (auto f1 = first_cycle_edge(h2)) {
    auto it = std::find(ordered.begin(), ordered.end(), *f1);
    std::rotate(ordered.begin(), it, it + 1);
  }
  // plant: sorted labels of h2 -> 1..n0
  auto plant = [&](int label) { return h2.index_of(label) + 1; };
  PendantPairs pp{n0, m + 1};
  EdgeColoring kc(pp.host_n(t), 1);
  for (int i = 0; i < m; ++i)
    kc.set_color(plant(ordered[static_cast<size_t>(i)].first),
                 plant(ordered[static_cast<size_t>(i)].second), i + 1);
  for (int j = m + 1; j <= t; ++j) kc.set_color(pp.y(j), pp.z(j), j);
  return kc;
}

// K on x_0..x_t (host labels 1..t+1) with c(x_i x_j) = max{i, j}; the tree
// argument sits rainbow on x_1..x_n in BFS order, and no cycle is rainbow.
EdgeColoring build_thm4_bfsmax(int t) {
  return EdgeColoring::from_rule(t + 1, [&](int, int v) { return v - 1; });
}

// Same-parity pairs inside the cycle block get color 1, opposite-parity
// pairs max{i,j}; pendant pairs j; fill 1. The k-cycle x_1..x_k is rainbow
// (k odd), yet no rainbow C4 exists.
EdgeColoring build_thm8_parity(int k, int t) {
  PendantPairs pp{k, k + 1};
  EdgeColoring kc(pp.host_n(t), 1);
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j)
      kc.set_color(i, j, (i % 2) == (j % 2) ? 1 : j);
  for (int j = k + 1; j <= t; ++j) kc.set_color(pp.y(j), pp.z(j), j);
  return kc;
}

// Short path x_0..x_{k-4} colored 1..k-4, spokes x_0 x_j colored j, fill t.
// Hosts a rainbow (k-2)-cycle while every rainbow path stops at k-2 edges.
EdgeColoring build_thm9_shortpath(int k, int t) {
  // host label of x_i is i+1
  return EdgeColoring::from_rule(t, [&](int u, int v) {
    if (v == u + 1 && v <= k - 3) return v - 1;      // x_{i-1} x_i -> i
    if (u == 1 && v >= k - 2) return v - 1;          // x_0 x_j -> j
    return t;
  });
}

// Rainbow C4 on x_1..x_4, pendant pairs, fill 1; the only color-degree-3
// vertices are x_3, x_4, which blocks any rainbow S3,1,1.
EdgeColoring build_thm12_s311c4(int t) {
  PendantPairs pp{4, 5};
  EdgeColoring kc(pp.host_n(t), 1);
  kc.set_color(1, 2, 1);
  kc.set_color(2, 3, 2);
  kc.set_color(3, 4, 3);
  kc.set_color(4, 1, 4);
  for (int j = 5; j <= t; ++j) kc.set_color(pp.y(j), pp.z(j), j);
  return kc;
}

// Rainbow C_k on x_1..x_k, pendant pairs, fill 1. For k <= 5 the two
// adjacent color-degree-3 vertices needed by a barbell cannot be found.
EdgeColoring build_thm13_cyclependants(int k, int t) {
  PendantPairs pp{k, k + 1};
  EdgeColoring kc(pp.host_n(t), 1);
  for (int i = 1; i < k; ++i) kc.set_color(i, i + 1, i);
  kc.set_color(k, 1, k);
  for (int j = k + 1; j <= t; ++j) kc.set_color(pp.y(j), pp.z(j), j);
  return kc;
}

// Star at x_0 with spokes 1..t-2 plus a detached edge yz colored t-1, fill t.
// Contains a rainbow S3,1,1 but no spider with two legs of length 2.
EdgeColoring build_thm14_1_star_yz(int t) {
  // x_0..x_{t-2} = 1..t-1, y = t, z = t+1
  return EdgeColoring::from_rule(t + 1, [&](int u, int v) {
    if (u == 1 && v <= t - 1) return v - 1;
    if (u == t && v == t + 1) return t - 1;
    return t;
  });
}

// Star at x_0 with spokes 1..t-2 and a broom edge x_{t-2} y colored t-1,
// fill t. Contains a rainbow S3,1,1; rainbow paths stop at 4 edges.
EdgeColoring build_thm14_2_star_broom(int t) {
  // x_0..x_{t-2} = 1..t-1, y = t
  return EdgeColoring::from_rule(t, [&](int u, int v) {
    if (u == 1 && v <= t - 1) return v - 1;
    if (u == t - 1 && v == t) return t - 1;
    return t;
  });
}

// Rainbow P6 on x_1..x_6, pendant pairs, fill 2.
EdgeColoring build_thm14_3_path_fill2(int t) {
  PendantPairs pp{6, 6};
  EdgeColoring kc(pp.host_n(t), 2);
  for (int i = 1; i <= 5; ++i) kc.set_color(i, i + 1, i);
  for (int j = 6; j <= t; ++j) kc.set_color(pp.y(j), pp.z(j), j);
  return kc;
}

// Rainbow P6 on x_1..x_6 plus a star of pendants at x_2, fill 3. Deleting
// color 3 leaves two stars, so no spider with two legs of length 2 fits.
EdgeColoring build_thm14_4_path_starfill3(int t) {
  // x_1..x_6 = 1..6, y_j = j + 1 for 6 <= j <= t
  return EdgeColoring::from_rule(t + 1, [&](int u, int v) {
    if (v == u + 1 && v <= 6) return u;
    if (u == 2 && v >= 7) return v - 1;
    return 3;
  });
}

// Full star at x_0: spoke i colored i, fill t. Rainbow paths stop at 3
// edges; stars, subdivided stars and one triangle shape are all realized.
EdgeColoring build_full_star_fill_t(int t) {
  // x_0..x_{t-1} = 1..t
  return EdgeColoring::from_rule(t, [&](int u, int v) {
    if (u == 1) return v - 1;
    return t;
  });
}

// Rainbow P5 on x_1..x_5, pendant pairs, fill 2.
EdgeColoring build_thm17_2_path_pendants(int t) {
  PendantPairs pp{5, 5};
  EdgeColoring kc(pp.host_n(t), 2);
  for (int i = 1; i <= 4; ++i) kc.set_color(i, i + 1, i);
  for (int j = 5; j <= t; ++j) kc.set_color(pp.y(j), pp.z(j), j);
  return kc;
}

// Star at x_0 on t+1 vertices with spokes 1..t, fill 1.
EdgeColoring build_thm17_4_star_fill1(int t) {
  return EdgeColoring::from_rule(t + 1, [&](int u, int v) {
    if (u == 1) return v - 1;
    return 1;
  });
}

// ---- registry -------------------------------------------------------------

struct Entry {
  WitnessInfo info;
  std::function<void(const WitnessId&)> check;          // bound validation
  std::function<EdgeColoring(const WitnessId&)> build;  // construction
  std::function<WitnessContract(const WitnessId&)> contract;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = [] {
    std::vector<Entry> es;

    es.push_back({{"lemma1-matching", false, false, 3, "t >= 3"},
                  [](const WitnessId& id) {
                    if (id.t < 3) bound_error(id.name, "t >= 3 required");
                  },
                  [](const WitnessId& id) { return build_lemma1_matching(id.t); },
                  [](const WitnessId& id) {
                    return WitnessContract{{"K1,3", "P5", "C3", "C4"}, {}, id.t};
                  }});

    es.push_back({{"thm3-planted", false, true, 0, "pattern H2 in the domain; t >= |E(H2)|+1"},
                  [](const WitnessId& id) {
                    const Graph& h2 = require_pattern(id);
                    if (!in_domain_H(h2)) bound_error(id.name, "pattern must be in the domain");
                    if (id.t < h2.size() + 1) bound_error(id.name, "t >= |E(H2)|+1 required");
                  },
                  [](const WitnessId& id) { return build_thm3_planted(*id.pattern, id.t); },
                  [](const WitnessId& id) {
                    return WitnessContract{{}, {pattern_display_name(*id.pattern)}, id.t};
                  }});

    es.push_back({{"thm4-bfsmax", false, true, 0, "pattern T a tree in the domain; t >= |V(T)|"},
                  [](const WitnessId& id) {
                    const Graph& tr = require_pattern(id);
                    GraphInvariants inv = invariants(tr);
                    if (!inv.is_tree) bound_error(id.name, "pattern must be a tree");
                    if (!in_domain_H(tr)) bound_error(id.name, "pattern must be in the domain");
                    if (id.t < tr.order()) bound_error(id.name, "t >= |V(T)| required");
                  },
                  [](const WitnessId& id) { return build_thm4_bfsmax(id.t); },
                  [](const WitnessId& id) {
                    WitnessContract c{cycle_specs(3, id.t + 1),
                                      {pattern_display_name(*id.pattern)},
                                      id.t};
                    return c;
                  }});

    es.push_back({{"thm8-parity", true, false, 0, "k odd >= 3; t >= k"},
                  [](const WitnessId& id) {
                    int k = require_k(id);
                    if (k < 3 || k % 2 == 0) bound_error(id.name, "k must be odd and >= 3");
                    if (id.t < k) bound_error(id.name, "t >= k required");
                  },
                  [](const WitnessId& id) { return build_thm8_parity(*id.k, id.t); },
                  [](const WitnessId& id) {
                    return WitnessContract{{"C4"}, {"C" + std::to_string(*id.k)}, id.t};
                  }});

    es.push_back({{"thm9-shortpath", true, false, 0, "k >= 5; t >= k-2"},
                  [](const WitnessId& id) {
                    int k = require_k(id);
                    if (k < 5) bound_error(id.name, "k >= 5 required");
                    if (id.t < k - 2) bound_error(id.name, "t >= k-2 required");
                  },
                  [](const WitnessId& id) { return build_thm9_shortpath(*id.k, id.t); },
                  [](const WitnessId& id) {
                    return WitnessContract{{"P" + std::to_string(*id.k)},
                                           {"C" + std::to_string(*id.k - 2)},
                                           id.t};
                  }});

    es.push_back({{"thm12-s311c4", false, false, 4, "t >= 4"},
                  [](const WitnessId& id) {
                    if (id.t < 4) bound_error(id.name, "t >= 4 required");
                  },
                  [](const WitnessId& id) { return build_thm12_s311c4(id.t); },
                  [](const WitnessId& id) {
                    return WitnessContract{{"S3,1,1"}, {"C4"}, id.t};
                  }});

    es.push_back({{"thm13-cyclependants", true, false, 0, "k in {3,4,5}; t >= k"},
                  [](const WitnessId& id) {
                    int k = require_k(id);
                    if (k < 3 || k > 5) bound_error(id.name, "k must be 3, 4 or 5");
                    if (id.t < k) bound_error(id.name, "t >= k required");
                  },
                  [](const WitnessId& id) { return build_thm13_cyclependants(*id.k, id.t); },
                  [](const WitnessId& id) {
                    return WitnessContract{{"B"}, {"C" + std::to_string(*id.k)}, id.t};
                  }});

    es.push_back({{"thm14-1-star-yz", false, false, 5, "t >= 5 (host needs 6 vertices)"},
                  [](const WitnessId& id) {
                    if (id.t < 5) bound_error(id.name, "t >= 5 required");
                  },
                  [](const WitnessId& id) { return build_thm14_1_star_yz(id.t); },
                  [](const WitnessId& id) {
                    return WitnessContract{{"S2,2,1"}, {"S3,1,1"}, id.t};
                  }});

    es.push_back({{"thm14-2-star-broom", false, false, 6, "t >= 6 (host needs 6 vertices)"},
                  [](const WitnessId& id) {
                    if (id.t < 6) bound_error(id.name, "t >= 6 required");
                  },
                  [](const WitnessId& id) { return build_thm14_2_star_broom(id.t); },
                  [](const WitnessId& id) {
                    return WitnessContract{{"P6"}, {"S3,1,1"}, id.t};
                  }});

    es.push_back({{"thm14-3-path-fill2", false, false, 5, "t >= 5"},
                  [](const WitnessId& id) {
                    if (id.t < 5) bound_error(id.name, "t >= 5 required");
                  },
                  [](const WitnessId& id) { return build_thm14_3_path_fill2(id.t); },
                  [](const WitnessId& id) {
                    return WitnessContract{{"S3,1,1"}, {"P6"}, id.t};
                  }});

    es.push_back({{"thm14-4-path-starfill3", false, false, 5, "t >= 5"},
                  [](const WitnessId& id) {
                    if (id.t < 5) bound_error(id.name, "t >= 5 required");
                  },
                  [](const WitnessId& id) { return build_thm14_4_path_starfill3(id.t); },
                  [](const WitnessId& id) {
                    return WitnessContract{{"S2,2,1"}, {"P6"}, id.t};
                  }});

    es.push_back({{"lemma16-star", true, false, 0, "k >= 2; t >= k+1"},
                  [](const WitnessId& id) {
                    int k = require_k(id);
                    if (k < 2) bound_error(id.name, "k >= 2 required");
                    if (id.t < k + 1) bound_error(id.name, "t >= k+1 required");
                  },
                  [](const WitnessId& id) { return build_full_star_fill_t(id.t); },
                  [](const WitnessId& id) {
                    return WitnessContract{{"P5"},
                                           {"K1," + std::to_string(*id.k) + "+e"},
                                           id.t};
                  }});

    es.push_back({{"thm17-2-path-pendants", false, false, 4, "t >= 4"},
                  [](const WitnessId& id) {
                    if (id.t < 4) bound_error(id.name, "t >= 4 required");
                  },
                  [](const WitnessId& id) { return build_thm17_2_path_pendants(id.t); },
                  [](const WitnessId& id) {
                    // finite basis for "tree not inside P5 or K1,3+"
                    return WitnessContract{{"P6", "K1,4", "S2,2,1", "S3,1,1", "B"}, {"P5"}, id.t};
                  }});

    es.push_back({{"thm17-3-star", false, false, 3, "t >= 3"},
                  [](const WitnessId& id) {
                    if (id.t < 3) bound_error(id.name, "t >= 3 required");
                  },
                  [](const WitnessId& id) { return build_full_star_fill_t(id.t); },
                  [](const WitnessId& id) {
                    // finite basis for "not inside a star, a subdivided star or C3"
                    return WitnessContract{{"P5", "B", "C4"}, {"C3"}, id.t};
                  }});

    es.push_back({{"thm17-4-star-fill1", false, false, 4, "t >= 4"},
                  [](const WitnessId& id) {
                    if (id.t < 4) bound_error(id.name, "t >= 4 required");
                  },
                  [](const WitnessId& id) { return build_thm17_4_star_fill1(id.t); },
                  [](const WitnessId& id) {
                    return WitnessContract{{"P5", "B", "C4"}, {"K1,4"}, id.t};
                  }});

    es.push_back({{"thm18-star", true, false, 0, "k >= 3; t >= k+1"},
                  [](const WitnessId& id) {
                    int k = require_k(id);
                    if (k < 3) bound_error(id.name, "k >= 3 required");
                    if (id.t < k + 1) bound_error(id.name, "t >= k+1 required");
                  },
                  [](const WitnessId& id) { return build_full_star_fill_t(id.t); },
                  [](const WitnessId& id) {
                    return WitnessContract{{"P5", "B", "C4"},
                                           {"K1," + std::to_string(*id.k)},
                                           id.t};
                  }});

    return es;
  }();
  return table;
}

const Entry& entry_for(const std::string& name) {
  for (const auto& e : entries())
    if (e.info.name == name) return e;
  throw std::invalid_argument("unknown witness id '" + name + "'");
}

}  // namespace

const std::vector<WitnessInfo>& witness_registry() {
  static const std::vector<WitnessInfo> infos = [] {
    std::vector<WitnessInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

bool is_witness_name(const std::string& name) {
  for (const auto& e : entries())
    if (e.info.name == name) return true;
  return false;
}

EdgeColoring build_witness(const WitnessId& id) {
  const Entry& e = entry_for(id.name);
  e.check(id);
  return e.build(id);
}

WitnessContract contract_of(const WitnessId& id) {
  const Entry& e = entry_for(id.name);
  e.check(id);
  return e.contract(id);
}

int witness_min_t(const WitnessId& id) {
  const Entry& e = entry_for(id.name);
  if (e.info.name == "thm3-planted") return require_pattern(id).size() + 1;
  if (e.info.name == "thm4-bfsmax") return require_pattern(id).order();
  if (e.info.takes_k) {
    int k = require_k(id);
    if (e.info.name == "thm8-parity" || e.info.name == "thm13-cyclependants") return k;
    if (e.info.name == "thm9-shortpath") return k - 2;
    return k + 1;  // lemma16-star, thm18-star
  }
  return e.info.min_t;
}

WitnessReport validate_against(const WitnessId& id, const EdgeColoring& kc) {
  WitnessContract c = contract_of(id);
  WitnessReport rep;
  rep.name = id.name;
  rep.pass = true;
  for (const auto& spec : c.must_be_free_of) {
    WitnessClause cl;
    cl.kind = "free";
    cl.pattern = spec;
    cl.pass = is_rainbow_free(kc, make_pattern(spec));
    if (!cl.pass) cl.detail = "rainbow copy found";
    rep.pass = rep.pass && cl.pass;
    rep.clauses.push_back(std::move(cl));
  }
  for (const auto& spec : c.must_contain_rainbow) {
    WitnessClause cl;
    cl.kind = "contains";
    cl.pattern = spec;
    SearchResult r = find_rainbow_embedding(kc, make_pattern(spec));
    cl.pass = r.found();
    if (cl.pass) cl.embedding = r.embedding;
    else cl.detail = "no rainbow copy";
    rep.pass = rep.pass && cl.pass;
    rep.clauses.push_back(std::move(cl));
  }
  {
    WitnessClause cl;
    cl.kind = "colors";
    int found = kc.num_colors();
    cl.pass = found == c.color_count;
    std::ostringstream os;
    os << "expected " << c.color_count << ", found " << found;
    cl.detail = os.str();
    rep.pass = rep.pass && cl.pass;
    rep.clauses.push_back(std::move(cl));
  }
  return rep;
}

WitnessReport validate_witness(const WitnessId& id) {
  return validate_against(id, build_witness(id));
}

}  // namespace rfs
