#include "rfs/relation.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "rfs/ledger.hpp"
#include "rfs/pattern.hpp"
#include "rfs/rainbow.hpp"

namespace rfs {

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::implied_by_subgraph: return "IMPLIED_BY_SUBGRAPH";
    case VerdictKind::known_fact: return "KNOWN_FACT";
    case VerdictKind::counterexample: return "COUNTEREXAMPLE";
    case VerdictKind::no_counterexample_up_to: return "NO_COUNTEREXAMPLE_UP_TO";
  }
  return "?";
}

nlohmann::json verdict_to_json(const Verdict& v) {
  nlohmann::json j;
  j["kind"] = to_string(v.kind);
  j["h1"] = v.h1;
  j["h2"] = v.h2;
  j["bound"] = {{"min_n", v.bound.min_n},
                {"max_n", v.bound.max_n},
                {"min_colors", v.bound.min_colors},
                {"mode", v.bound.exhaustive ? "exhaustive" : "sampled"},
                {"samples", v.bound.samples},
                {"seed", v.bound.seed}};
  j["visited"] = v.visited;
  if (v.witness) j["witness"] = coloring_to_json(*v.witness);
  if (!v.fact_ref.empty()) j["fact_ref"] = v.fact_ref;
  return j;
}

namespace {

// counterexample test: rainbow-h1-free and contains a rainbow h2
bool is_counterexample(const EdgeColoring& kc, const Graph& h1, const Graph& h2) {
  if (find_rainbow_embedding(kc, h1).found()) return false;
  return find_rainbow_embedding(kc, h2).found();
}

struct PrefixOutcome {
  std::uint64_t scanned_before = 0;  // colorings visited in this prefix before the hit
  std::optional<EdgeColoring> hit;
};

// Deterministic parallel exhaustive scan of one host size. Workers claim RGS
// prefixes in lexicographic order; the surviving counterexample is the first
// in RGS order. Prefixes beyond the best hit may be skipped, earlier ones
// always complete, so the scan count is replayable.
struct ExhaustiveScan {
  int n;
  int min_colors;
  const Graph& h1;
  const Graph& h2;
  int jobs;
  bool deterministic;

  std::uint64_t visited_total = 0;
  std::optional<EdgeColoring> found;

  bool run() {
    int m = n * (n - 1) / 2;
    int prefix_len = std::min(m, 5);
    std::vector<std::vector<int>> prefixes = rgs_prefixes(m, prefix_len);
    std::vector<PrefixOutcome> outcomes(prefixes.size());
    std::vector<std::uint64_t> scanned(prefixes.size(), 0);
    std::atomic<size_t> next{0};
    std::atomic<size_t> best_hit{prefixes.size()};
    std::atomic<bool> stop{false};  // non-deterministic fast abort
    std::mutex mu;

    auto worker = [&]() {
      for (;;) {
        if (!deterministic && stop.load()) return;
        size_t p = next.fetch_add(1);
        if (p >= prefixes.size()) return;
        if (p > best_hit.load()) continue;  // a strictly earlier hit exists
        std::uint64_t local = 0;
        std::optional<EdgeColoring> local_hit;
        for_each_rgs_completion(m, min_colors, prefixes[p], [&](const std::vector<int>& rgs) {
          if (!deterministic && stop.load()) return false;
          EdgeColoring kc = coloring_from_rgs(n, rgs);
          if (is_counterexample(kc, h1, h2)) {
            local_hit = kc;
            return false;
          }
          ++local;
          return true;
        });
        std::lock_guard<std::mutex> lock(mu);
        scanned[p] = local;
        if (local_hit) {
          outcomes[p].scanned_before = local;
          outcomes[p].hit = std::move(local_hit);
          size_t cur = best_hit.load();
          while (p < cur && !best_hit.compare_exchange_weak(cur, p)) {
          }
          stop.store(true);
        }
      }
    };

    if (jobs <= 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }

    size_t hit = best_hit.load();
    if (hit < prefixes.size()) {
      // deterministic mode: every prefix before the surviving hit ran to
      // completion, so the scan count replays exactly
      for (size_t p = 0; p < hit; ++p) visited_total += scanned[p];
      visited_total += outcomes[hit].scanned_before + 1;  // the hit itself
      found = outcomes[hit].hit;
      return true;
    }
    for (size_t p = 0; p < prefixes.size(); ++p) visited_total += scanned[p];
    return false;
  }
};

}  // namespace

Verdict check_relation(const Graph& h1, const Graph& h2, int max_n, int min_colors,
                       const Budget& budget, const FactLedger* ledger, int min_n) {
  if (!in_domain_H(h1) || !in_domain_H(h2))
    throw std::invalid_argument("check_relation: both patterns must lie in the domain");
  if (max_n < h2.order())
    throw std::invalid_argument("check_relation: max_n must be at least |V(h2)|");
  if (max_n > 8) throw std::invalid_argument("check_relation: hosts capped at 8 vertices");
  if (min_n <= 0) min_n = h2.order();
  if (min_n < 2 || min_n > max_n)
    throw std::invalid_argument("check_relation: min_n out of range");
  if (min_colors < 1) throw std::invalid_argument("check_relation: min_colors must be >= 1");

  Verdict v;
  v.h1 = pattern_display_name(h1);
  v.h2 = pattern_display_name(h2);
  v.bound = {min_n, max_n, min_colors, true, 0, budget.seed};

  if (is_subgraph(h1, h2)) {
    v.kind = VerdictKind::implied_by_subgraph;
    return v;
  }
  if (ledger) {
    if (auto ref = ledger_le_fact(*ledger, h1, h2)) {
      v.kind = VerdictKind::known_fact;
      v.fact_ref = *ref;
      return v;
    }
  }

  // exhaustive / sampled cutover on the Stirling-sum bound
  std::uint64_t total = 0;
  bool countable = true;
  for (int m = min_n; m <= max_n; ++m) {
    int edges = m * (m - 1) / 2;
    if (edges > 25) {
      countable = false;
      break;
    }
    if (min_colors <= edges) total += stirling_sum(edges, min_colors);
  }
  bool exhaustive;
  switch (budget.mode) {
    case Budget::Mode::exhaustive: exhaustive = true; break;
    case Budget::Mode::sampled: exhaustive = false; break;
    default: exhaustive = countable && total <= budget.exhaustive_ceiling; break;
  }
  if (exhaustive && !countable)
    throw std::invalid_argument("check_relation: exhaustive scan infeasible at this size");
  v.bound.exhaustive = exhaustive;

  auto revalidate = [&](const EdgeColoring& witness, int m) {
    if (witness.num_colors() < min_colors)
      throw std::logic_error("check_relation: counterexample uses too few colors");
    if (m > 8) return;
    // independent oracle pass
    bool free1 = !brute_force_find(witness, h1).found();
    bool has2 = brute_force_find(witness, h2).found();
    if (!free1 || !has2 || !is_counterexample(witness, h1, h2))
      throw std::logic_error("check_relation: counterexample failed re-validation");
  };

  if (exhaustive) {
    for (int m = min_n; m <= max_n; ++m) {
      if (min_colors > m * (m - 1) / 2) continue;  // no such coloring
      ExhaustiveScan scan{m, min_colors, h1, h2, budget.jobs, budget.deterministic, 0, {}};
      bool hit = scan.run();
      v.visited += scan.visited_total;
      if (hit) {
        v.kind = VerdictKind::counterexample;
        v.witness = scan.found->normalized();
        revalidate(*v.witness, m);
        return v;
      }
    }
    v.kind = VerdictKind::no_counterexample_up_to;
    return v;
  }

  // sampled: split the budget evenly over host sizes, seeded per host
  v.bound.samples = budget.samples;
  int hosts = max_n - min_n + 1;
  std::uint64_t per_host = budget.samples / static_cast<std::uint64_t>(hosts);
  std::uint64_t extra = budget.samples % static_cast<std::uint64_t>(hosts);
  for (int m = min_n; m <= max_n; ++m) {
    int edges = m * (m - 1) / 2;
    if (min_colors > edges) continue;
    std::uint64_t count = per_host + (m - min_n < static_cast<int>(extra) ? 1 : 0);
    PartitionSampler sampler(edges, min_colors);
    std::mt19937_64 rng(budget.seed ^ (0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(m)));
    for (std::uint64_t i = 0; i < count; ++i) {
      EdgeColoring kc = coloring_from_rgs(m, sampler.sample(rng));
      ++v.visited;
      if (is_counterexample(kc, h1, h2)) {
        v.kind = VerdictKind::counterexample;
        v.witness = kc.normalized();
        revalidate(*v.witness, m);
        return v;
      }
    }
  }
  v.kind = VerdictKind::no_counterexample_up_to;
  return v;
}

NecessaryConditionReport necessary_conditions(const Graph& h1, const Graph& h2, bool refined) {
  if (!in_domain_H(h1) || !in_domain_H(h2))
    throw std::invalid_argument("necessary_conditions: both patterns must lie in the domain");
  GraphInvariants a = invariants(h1), b = invariants(h2);
  NecessaryConditionReport r;
  r.e1 = a.size;
  r.e2 = b.size;
  r.v1 = a.order;
  r.v2 = b.order;
  r.d1 = a.max_degree;
  r.d2 = b.max_degree;
  r.dim1 = a.dimension;
  r.dim2 = b.dimension;
  r.edges_ok = r.e1 <= r.e2 + 1;
  r.vertices_ok = r.v1 <= r.v2 + 2;
  r.maxdeg_ok = r.d1 <= r.d2 + 1;
  r.dim_ok = r.dim1 <= r.dim2;
  if (refined) {
    r.refined_checked = true;
    if (r.d1 == r.d2 + 1) {
      std::vector<int> tops;
      for (int v : h1.vertices())
        if (h1.degree(v) == r.d1) tops.push_back(v);
      r.maxdeg_count_ok = tops.size() <= 2;
      r.maxdeg_adjacent_ok = tops.size() != 2 || h1.has_edge(tops[0], tops[1]);
    }
  }
  return r;
}

FamilyRefutation refute_via_witness_family(const WitnessId& base, const std::vector<int>& t_values) {
  FamilyRefutation out;
  out.base = base;
  out.all_pass = true;
  for (int t : t_values) {
    WitnessId id = base;
    id.t = t;
    WitnessReport rep = validate_witness(id);
    out.all_pass = out.all_pass && rep.pass;
    out.runs.emplace_back(t, std::move(rep));
  }
  return out;
}

}  // namespace rfs
