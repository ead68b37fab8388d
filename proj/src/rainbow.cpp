#include "rfs/rainbow.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <stdexcept>

namespace rfs {

int Embedding::host_of(int pattern_label) const {
  for (size_t i = 0; i < pattern_vertices.size(); ++i)
    if (pattern_vertices[i] == pattern_label) return host_vertices[i];
  throw std::out_of_range("Embedding: unknown pattern vertex");
}

std::vector<VertexPair> Embedding::image_edges(const Graph& pattern) const {
  std::vector<VertexPair> out;
  for (const auto& e : pattern.edges()) {
    int a = host_of(e.first), b = host_of(e.second);
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  return out;
}

namespace {

// Pattern vertex ordering: maximum-degree vertex first (ties by label), then
// BFS with neighbors visited in ascending label order. Every vertex after
// the first is adjacent to an earlier one, so each placement closes at least
// one image edge.
std::vector<int> connected_order(const Graph& h) {
  std::vector<int> deg(static_cast<size_t>(h.order()));
  for (int i = 0; i < h.order(); ++i) deg[static_cast<size_t>(i)] = h.degree(h.label_at(i));
  int start = 0;
  for (int i = 1; i < h.order(); ++i)
    if (deg[static_cast<size_t>(i)] > deg[static_cast<size_t>(start)]) start = i;
  std::vector<int> order;
  std::vector<char> seen(static_cast<size_t>(h.order()), 0);
  std::queue<int> q;
  q.push(start);
  seen[static_cast<size_t>(start)] = 1;
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    order.push_back(x);
    for (int nb : h.neighbors(h.label_at(x))) {
      int j = h.index_of(nb);
      if (!seen[static_cast<size_t>(j)]) {
        seen[static_cast<size_t>(j)] = 1;
        q.push(j);
      }
    }
  }
  return order;  // pattern vertex indices
}

struct RainbowSearch {
  const EdgeColoring& kc;
  const Graph& h;
  std::vector<int> order;                   // pattern indices in placement order
  std::vector<std::vector<int>> placed_nbrs;  // for order[k]: earlier positions adjacent to it
  std::vector<int> image;                   // position -> host vertex, 0 unset
  std::vector<char> host_used;
  std::vector<char> color_used;             // indexed by color id (dense remap)
  std::vector<std::vector<int>> cid;        // host color ids remapped to 0..t-1

  RainbowSearch(const EdgeColoring& kc_, const Graph& h_) : kc(kc_), h(h_) {
    order = connected_order(h);
    placed_nbrs.resize(order.size());
    for (size_t k = 0; k < order.size(); ++k)
      for (size_t j = 0; j < k; ++j)
        if (h.has_edge(h.label_at(order[k]), h.label_at(order[j])))
          placed_nbrs[k].push_back(static_cast<int>(j));
    image.assign(order.size(), 0);
    host_used.assign(static_cast<size_t>(kc.n()) + 1, 0);
    // dense color ids
    std::vector<int> colors = kc.distinct_colors();
    cid.assign(static_cast<size_t>(kc.n()) + 1,
               std::vector<int>(static_cast<size_t>(kc.n()) + 1, 0));
    for (int u = 1; u <= kc.n(); ++u)
      for (int v = u + 1; v <= kc.n(); ++v) {
        int r = static_cast<int>(
            std::lower_bound(colors.begin(), colors.end(), kc.color(u, v)) -
            colors.begin());
        cid[static_cast<size_t>(u)][static_cast<size_t>(v)] = r;
        cid[static_cast<size_t>(v)][static_cast<size_t>(u)] = r;
      }
    color_used.assign(colors.size(), 0);
  }

  bool place(size_t k) {
    if (k == order.size()) return true;
    for (int host = 1; host <= kc.n(); ++host) {
      if (host_used[static_cast<size_t>(host)]) continue;
      // colors closed by this placement must be fresh and pairwise distinct
      bool ok = true;
      int marked[16];
      int nmarked = 0;
      for (int j : placed_nbrs[k]) {
        int c = cid[static_cast<size_t>(host)][static_cast<size_t>(image[static_cast<size_t>(j)])];
        if (color_used[static_cast<size_t>(c)]) {
          ok = false;
          break;
        }
        color_used[static_cast<size_t>(c)] = 1;
        marked[nmarked++] = c;
      }
      if (ok) {
        image[k] = host;
        host_used[static_cast<size_t>(host)] = 1;
        if (place(k + 1)) return true;
        host_used[static_cast<size_t>(host)] = 0;
        image[k] = 0;
      }
      for (int i = 0; i < nmarked; ++i) color_used[static_cast<size_t>(marked[i])] = 0;
    }
    return false;
  }

  Embedding result() const {
    Embedding e;
    for (size_t k = 0; k < order.size(); ++k) {
      e.pattern_vertices.push_back(h.label_at(order[k]));
      e.host_vertices.push_back(image[k]);
    }
    return e;
  }
};

}  // namespace

SearchResult find_rainbow_embedding(const EdgeColoring& kc, const Graph& pattern) {
  if (pattern.order() == 0) throw std::invalid_argument("rainbow search: empty pattern");
  if (!is_connected(pattern)) throw std::invalid_argument("rainbow search: pattern must be connected");
  if (pattern.order() > 16) throw std::invalid_argument("rainbow search: pattern too big (max 16)");
  if (pattern.order() > kc.n()) return {SearchStatus::pattern_too_large, std::nullopt};
  RainbowSearch s(kc, pattern);
  if (s.place(0)) return {SearchStatus::found, s.result()};
  return {SearchStatus::not_found, std::nullopt};
}

bool is_rainbow_free(const EdgeColoring& kc, const Graph& pattern) {
  return !find_rainbow_embedding(kc, pattern).found();
}

SearchResult brute_force_find(const EdgeColoring& kc, const Graph& pattern) {
  if (kc.n() > 8) throw std::invalid_argument("brute_force_find: host capped at 8 vertices");
  if (pattern.order() == 0) throw std::invalid_argument("rainbow search: empty pattern");
  if (pattern.order() > kc.n()) return {SearchStatus::pattern_too_large, std::nullopt};
  int k = pattern.order();
  std::vector<int> map(static_cast<size_t>(k), 0);
  std::vector<char> used(static_cast<size_t>(kc.n()) + 1, 0);

  // all injective maps in lexicographic order of the image tuple
  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i == k) {
      std::set<int> colors;
      for (const auto& e : pattern.edges()) {
        int a = map[static_cast<size_t>(pattern.index_of(e.first))];
        int b = map[static_cast<size_t>(pattern.index_of(e.second))];
        if (!colors.insert(kc.color(a, b)).second) return false;
      }
      return true;
    }
    for (int host = 1; host <= kc.n(); ++host) {
      if (used[static_cast<size_t>(host)]) continue;
      used[static_cast<size_t>(host)] = 1;
      map[static_cast<size_t>(i)] = host;
      if (rec(i + 1)) return true;
      used[static_cast<size_t>(host)] = 0;
    }
    return false;
  };
  if (rec(0)) {
    Embedding e;
    for (int i = 0; i < k; ++i) {
      e.pattern_vertices.push_back(pattern.label_at(i));
      e.host_vertices.push_back(map[static_cast<size_t>(i)]);
    }
    return {SearchStatus::found, e};
  }
  return {SearchStatus::not_found, std::nullopt};
}

bool embedding_is_valid(const EdgeColoring& kc, const Graph& pattern, const Embedding& e) {
  if (e.pattern_vertices.size() != e.host_vertices.size()) return false;
  if (static_cast<int>(e.pattern_vertices.size()) != pattern.order()) return false;
  std::set<int> pat(e.pattern_vertices.begin(), e.pattern_vertices.end());
  std::set<int> host(e.host_vertices.begin(), e.host_vertices.end());
  if (static_cast<int>(pat.size()) != pattern.order()) return false;
  if (host.size() != e.host_vertices.size()) return false;  // injective
  for (int v : e.pattern_vertices)
    if (!pattern.has_vertex(v)) return false;
  for (int v : e.host_vertices)
    if (v < 1 || v > kc.n()) return false;
  return kc.is_rainbow_edge_set(e.image_edges(pattern));
}

}  // namespace rfs
