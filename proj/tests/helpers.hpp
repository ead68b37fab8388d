#pragma once
// Shared test oracles, independent of the library's search/canonicalization
// paths: plain permutation scans only.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "rfs/coloring.hpp"
#include "rfs/graph.hpp"
#include "rfs/pattern.hpp"

namespace testutil {

// Isomorphism by trying every vertex bijection.
inline bool iso_oracle(const rfs::Graph& a, const rfs::Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  int n = a.order();
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const auto& e : a.edges()) {
      int u = perm[static_cast<size_t>(a.index_of(e.first))];
      int v = perm[static_cast<size_t>(a.index_of(e.second))];
      if (!b.has_edge(b.label_at(u), b.label_at(v))) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Subgraph test by trying every injective map.
inline bool subgraph_oracle(const rfs::Graph& h, const rfs::Graph& g) {
  if (h.order() > g.order() || h.size() > g.size()) return false;
  int n = g.order(), k = h.order();
  std::vector<int> sel(static_cast<size_t>(n), 0);
  std::fill(sel.begin(), sel.begin() + k, 1);
  std::sort(sel.begin(), sel.end());  // iterate combinations via permutations of selector
  // simpler: recursive injective assignment
  std::vector<int> map(static_cast<size_t>(k), -1);
  std::vector<char> used(static_cast<size_t>(n), 0);
  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i == k) return true;
    for (int cand = 0; cand < n; ++cand) {
      if (used[static_cast<size_t>(cand)]) continue;
      bool ok = true;
      for (const auto& e : h.edges()) {
        int ia = h.index_of(e.first), ib = h.index_of(e.second);
        if (ia > i || ib > i) continue;
        int ga = ia == i ? cand : map[static_cast<size_t>(ia)];
        int gb = ib == i ? cand : map[static_cast<size_t>(ib)];
        if (ga >= 0 && gb >= 0 && !g.has_edge(g.label_at(ga), g.label_at(gb))) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      map[static_cast<size_t>(i)] = cand;
      used[static_cast<size_t>(cand)] = 1;
      if (rec(i + 1)) return true;
      used[static_cast<size_t>(cand)] = 0;
      map[static_cast<size_t>(i)] = -1;
    }
    return false;
  };
  return rec(0);
}

// Uniform random coloring of K_n: every edge gets a color in 1..palette.
inline rfs::EdgeColoring random_coloring(int n, int palette, std::mt19937_64& rng) {
  rfs::EdgeColoring kc(n, 1);
  std::uniform_int_distribution<int> dist(1, palette);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) kc.set_color(u, v, dist(rng));
  return kc;
}

// Named patterns used across tests, orders up to 8.
inline std::vector<std::string> named_specs_up_to(int max_order) {
  std::vector<std::string> out;
  for (int k = 5; k <= max_order; ++k) out.push_back("P" + std::to_string(k));
  for (int k = 3; k <= max_order; ++k) out.push_back("C" + std::to_string(k));
  for (int k = 3; k + 1 <= max_order; ++k) out.push_back("K1," + std::to_string(k));
  for (int k = 3; k + 2 <= max_order; ++k) out.push_back("K1," + std::to_string(k) + "+");
  for (int k = 2; k + 1 <= max_order; ++k) out.push_back("K1," + std::to_string(k) + "+e");
  for (int a = 1; a <= max_order - 3; ++a)
    for (int b = 1; b <= a; ++b)
      for (int c = 1; c <= b; ++c)
        if (a + b + c + 1 <= max_order && a >= 2)
          out.push_back("S" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c));
  if (max_order >= 6) out.push_back("B");
  if (max_order >= 4) out.push_back("Z1");
  return out;
}

}  // namespace testutil
