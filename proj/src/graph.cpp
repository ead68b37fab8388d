#include "rfs/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rfs {

namespace {

VertexPair norm_pair(int u, int v) {
  return u < v ? VertexPair{u, v} : VertexPair{v, u};
}

}  // namespace

Graph::Graph(std::vector<int> vertices, std::vector<VertexPair> edges) {
  std::sort(vertices.begin(), vertices.end());
  for (size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] < 1)
      throw std::invalid_argument("vertex labels must be positive naturals");
    if (i > 0 && vertices[i] == vertices[i - 1])
      throw std::invalid_argument("duplicate vertex label");
  }
  verts_ = std::move(vertices);
  for (auto& e : edges) {
    if (e.first == e.second) throw std::invalid_argument("loop edge");
    e = norm_pair(e.first, e.second);
    if (!std::binary_search(verts_.begin(), verts_.end(), e.first) ||
        !std::binary_search(verts_.begin(), verts_.end(), e.second))
      throw std::invalid_argument("edge endpoint is not a listed vertex");
  }
  std::sort(edges.begin(), edges.end());
  for (size_t i = 1; i < edges.size(); ++i)
    if (edges[i] == edges[i - 1]) throw std::invalid_argument("repeated edge");
  edges_ = std::move(edges);

  if (order() <= 16) {
    adj_.assign(verts_.size(), 0);
    for (const auto& e : edges_) {
      int a = index_of(e.first), b = index_of(e.second);
      adj_[static_cast<size_t>(a)] |= static_cast<std::uint16_t>(1u << b);
      adj_[static_cast<size_t>(b)] |= static_cast<std::uint16_t>(1u << a);
    }
  }
}

Graph Graph::from_edges(const std::vector<VertexPair>& edges) {
  std::set<int> vs;
  for (const auto& e : edges) {
    vs.insert(e.first);
    vs.insert(e.second);
  }
  return Graph(std::vector<int>(vs.begin(), vs.end()), edges);
}

bool Graph::has_vertex(int v) const {
  return std::binary_search(verts_.begin(), verts_.end(), v);
}

bool Graph::has_edge(int u, int v) const {
  return std::binary_search(edges_.begin(), edges_.end(), norm_pair(u, v));
}

int Graph::index_of(int v) const {
  auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
  if (it == verts_.end() || *it != v) return -1;
  return static_cast<int>(it - verts_.begin());
}

int Graph::degree(int v) const {
  int d = 0;
  for (const auto& e : edges_)
    if (e.first == v || e.second == v) ++d;
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (const auto& e : edges_) {
    if (e.first == v) out.push_back(e.second);
    if (e.second == v) out.push_back(e.first);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_connected(const Graph& g) {
  int n = g.order();
  if (n == 0) return false;
  if (n == 1) return true;
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int visited = 1;
  // index-based adjacency from edge list (works for any order)
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (const auto& e : g.edges()) {
    int a = g.index_of(e.first), b = g.index_of(e.second);
    adj[static_cast<size_t>(a)].push_back(b);
    adj[static_cast<size_t>(b)].push_back(a);
  }
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj[static_cast<size_t>(x)])
      if (!seen[static_cast<size_t>(y)]) {
        seen[static_cast<size_t>(y)] = 1;
        ++visited;
        stack.push_back(y);
      }
  }
  return visited == n;
}

GraphInvariants invariants(const Graph& g) {
  GraphInvariants inv;
  inv.order = g.order();
  inv.size = g.size();
  std::map<int, int> deg;
  for (int v : g.vertices()) deg[v] = 0;
  for (const auto& e : g.edges()) {
    ++deg[e.first];
    ++deg[e.second];
  }
  for (const auto& [v, d] : deg) {
    inv.max_degree = std::max(inv.max_degree, d);
    if (d >= 3) inv.branch_vertices.push_back(v);
  }
  inv.dimension = g.size() - g.order() + 1;
  inv.connected = is_connected(g);
  // component count via union-find
  std::vector<int> parent(static_cast<size_t>(g.order()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  for (const auto& e : g.edges()) {
    int a = find(g.index_of(e.first)), b = find(g.index_of(e.second));
    if (a != b) parent[static_cast<size_t>(a)] = b;
  }
  std::set<int> roots;
  for (int i = 0; i < g.order(); ++i) roots.insert(find(i));
  inv.component_count = static_cast<int>(roots.size());
  inv.is_tree = inv.connected && inv.dimension == 0;
  return inv;
}

namespace {

// Backtracking injective edge-preserving map from h into g.
struct SubgraphSearch {
  const Graph& h;
  const Graph& g;
  std::vector<int> h_deg, g_deg;
  std::vector<std::vector<int>> h_adj, g_adj;  // index-based
  std::vector<int> order;                      // h indices, most-constrained first
  std::vector<int> map;                        // h index -> g index, -1 unset
  std::vector<char> used;

  SubgraphSearch(const Graph& h_, const Graph& g_) : h(h_), g(g_) {
    auto fill = [](const Graph& x, std::vector<int>& deg,
                   std::vector<std::vector<int>>& adj) {
      deg.assign(static_cast<size_t>(x.order()), 0);
      adj.assign(static_cast<size_t>(x.order()), {});
      for (const auto& e : x.edges()) {
        int a = x.index_of(e.first), b = x.index_of(e.second);
        ++deg[static_cast<size_t>(a)];
        ++deg[static_cast<size_t>(b)];
        adj[static_cast<size_t>(a)].push_back(b);
        adj[static_cast<size_t>(b)].push_back(a);
      }
    };
    fill(h, h_deg, h_adj);
    fill(g, g_deg, g_adj);
    order.resize(static_cast<size_t>(h.order()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (h_deg[static_cast<size_t>(a)] != h_deg[static_cast<size_t>(b)])
        return h_deg[static_cast<size_t>(a)] > h_deg[static_cast<size_t>(b)];
      return a < b;
    });
    map.assign(static_cast<size_t>(h.order()), -1);
    used.assign(static_cast<size_t>(g.order()), 0);
  }

  bool run() { return h.order() <= g.order() && place(0); }

  bool place(size_t k) {
    if (k == order.size()) return true;
    int hv = order[k];
    for (int gv = 0; gv < g.order(); ++gv) {
      if (used[static_cast<size_t>(gv)]) continue;
      if (g_deg[static_cast<size_t>(gv)] < h_deg[static_cast<size_t>(hv)])
        continue;
      bool ok = true;
      for (int hn : h_adj[static_cast<size_t>(hv)]) {
        int gn = map[static_cast<size_t>(hn)];
        if (gn >= 0 &&
            !g.has_edge(g.label_at(gv), g.label_at(gn))) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      map[static_cast<size_t>(hv)] = gv;
      used[static_cast<size_t>(gv)] = 1;
      if (place(k + 1)) return true;
      map[static_cast<size_t>(hv)] = -1;
      used[static_cast<size_t>(gv)] = 0;
    }
    return false;
  }
};

// Stable colour refinement; colours are ranks of iterated signatures so they
// compare consistently across graphs.
std::vector<int> refine_colors(const Graph& g) {
  int n = g.order();
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (const auto& e : g.edges()) {
    int a = g.index_of(e.first), b = g.index_of(e.second);
    adj[static_cast<size_t>(a)].push_back(b);
    adj[static_cast<size_t>(b)].push_back(a);
  }
  std::vector<int> color(static_cast<size_t>(n), 0);
  for (int v = 0; v < n; ++v)
    color[static_cast<size_t>(v)] = static_cast<int>(adj[static_cast<size_t>(v)].size());
  for (int round = 0; round < n; ++round) {
    std::vector<std::vector<int>> sig(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& s = sig[static_cast<size_t>(v)];
      s.push_back(color[static_cast<size_t>(v)]);
      std::vector<int> nb;
      for (int u : adj[static_cast<size_t>(v)]) nb.push_back(color[static_cast<size_t>(u)]);
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
    }
    std::vector<std::vector<int>> uniq = sig;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    std::vector<int> next(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v)
      next[static_cast<size_t>(v)] = static_cast<int>(
          std::lower_bound(uniq.begin(), uniq.end(), sig[static_cast<size_t>(v)]) -
          uniq.begin());
    if (next == color) break;
    color = std::move(next);
  }
  return color;
}

// Minimum-encoding canonical labeling, branch and bound. At each position
// only candidates whose appended (colour, adjacency-bits) segment is minimal
// among siblings can reach the global minimum; direct twins share a swap
// automorphism fixing everything else, so one representative suffices.
struct CanonSearch {
  int n;
  std::vector<std::uint16_t> adj;
  std::vector<int> wl;
  std::vector<std::uint32_t> best;
  std::vector<int> best_perm;
  bool have_best = false;

  std::vector<int> perm;  // position -> vertex index
  std::vector<std::uint32_t> cur;

  explicit CanonSearch(const Graph& g) : n(g.order()), adj(g.adjacency()) {
    wl = refine_colors(g);
  }

  bool direct_twins(int u, int v) const {
    std::uint16_t mu = adj[static_cast<size_t>(u)] & static_cast<std::uint16_t>(~(1u << v));
    std::uint16_t mv = adj[static_cast<size_t>(v)] & static_cast<std::uint16_t>(~(1u << u));
    return mu == mv;
  }

  void run() {
    perm.clear();
    cur.clear();
    dfs(0);
  }

  void dfs(std::uint16_t placed) {
    int k = static_cast<int>(perm.size());
    if (k == n) {
      if (!have_best || cur < best) {
        best = cur;
        best_perm = perm;
        have_best = true;
      }
      return;
    }
    // appended segment for candidate v: [wl colour, bit to perm[0], ...]
    std::vector<std::pair<std::vector<std::uint32_t>, int>> cands;
    for (int v = 0; v < n; ++v) {
      if (placed & (1u << v)) continue;
      std::vector<std::uint32_t> seg;
      seg.reserve(static_cast<size_t>(k) + 1);
      seg.push_back(static_cast<std::uint32_t>(wl[static_cast<size_t>(v)]));
      for (int i = 0; i < k; ++i)
        seg.push_back((adj[static_cast<size_t>(v)] >> perm[static_cast<size_t>(i)]) & 1u);
      cands.emplace_back(std::move(seg), v);
    }
    std::sort(cands.begin(), cands.end());
    const auto min_seg = cands.front().first;
    size_t keep_end = 0;
    while (keep_end < cands.size() && cands[keep_end].first == min_seg) ++keep_end;

    // All kept siblings extend cur by the same segment; the node dies only
    // when the full extended prefix already exceeds best. Once a prefix is
    // strictly smaller, every descendant compare stays strictly smaller, so
    // deeper nodes are never mistakenly pruned.
    if (have_best) {
      int cmp = 0;
      for (size_t i = 0; i < cur.size() && cmp == 0; ++i)
        cmp = cur[i] == best[i] ? 0 : (cur[i] < best[i] ? -1 : 1);
      size_t off = cur.size();
      for (size_t i = 0; i < min_seg.size() && cmp == 0; ++i)
        cmp = min_seg[i] == best[off + i] ? 0 : (min_seg[i] < best[off + i] ? -1 : 1);
      if (cmp > 0) return;
    }

    std::vector<int> tried;
    for (size_t c = 0; c < keep_end; ++c) {
      int v = cands[c].second;
      bool dup = false;
      for (int u : tried)
        if (direct_twins(u, v)) {
          dup = true;
          break;
        }
      if (dup) continue;
      tried.push_back(v);

      size_t save = cur.size();
      cur.insert(cur.end(), min_seg.begin(), min_seg.end());
      perm.push_back(v);
      dfs(static_cast<std::uint16_t>(placed | (1u << v)));
      perm.pop_back();
      cur.resize(save);
    }
  }
};

}  // namespace

bool is_subgraph(const Graph& h, const Graph& g) {
  if (h.order() > g.order() || h.size() > g.size()) return false;
  SubgraphSearch s(h, g);
  return s.run();
}

std::vector<std::uint32_t> canonical_form(const Graph& g) {
  if (g.order() > 12)
    throw std::invalid_argument("canonical_form supports at most 12 vertices");
  if (g.order() == 0) return {};
  CanonSearch cs(g);
  cs.run();
  std::vector<std::uint32_t> out;
  out.push_back(static_cast<std::uint32_t>(g.order()));
  out.insert(out.end(), cs.best.begin(), cs.best.end());
  return out;
}

Graph canonical_copy(const Graph& g) {
  if (g.order() == 0) return Graph();
  CanonSearch cs(g);
  cs.run();
  // best_perm[pos] = old index; relabel old index -> pos+1
  std::vector<int> newlabel(static_cast<size_t>(g.order()), 0);
  for (int pos = 0; pos < g.order(); ++pos)
    newlabel[static_cast<size_t>(cs.best_perm[static_cast<size_t>(pos)])] = pos + 1;
  std::vector<int> vs(static_cast<size_t>(g.order()));
  std::iota(vs.begin(), vs.end(), 1);
  std::vector<VertexPair> es;
  for (const auto& e : g.edges())
    es.emplace_back(newlabel[static_cast<size_t>(g.index_of(e.first))],
                    newlabel[static_cast<size_t>(g.index_of(e.second))]);
  return Graph(vs, es);
}

std::string canonical_key(const Graph& g) {
  Graph c = canonical_copy(g);
  std::ostringstream os;
  if (c.size() == 0) {
    os << "vertices:[" << c.order() << "]";
    return os.str();
  }
  os << "edges:[";
  for (size_t i = 0; i < c.edges().size(); ++i) {
    if (i) os << ",";
    os << "(" << c.edges()[i].first << "," << c.edges()[i].second << ")";
  }
  os << "]";
  return os.str();
}

bool are_isomorphic(const Graph& g1, const Graph& g2) {
  if (g1.order() != g2.order() || g1.size() != g2.size()) return false;
  auto degs = [](const Graph& g) {
    std::vector<int> d;
    for (int v : g.vertices()) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degs(g1) != degs(g2)) return false;
  return canonical_form(g1) == canonical_form(g2);
}

bool in_domain_H(const Graph& g) {
  if (!is_connected(g)) return false;
  int n = g.order();
  if (n > 4) return true;
  // P1..P4 are exactly the connected graphs of order <= 4 that are trees
  // with maximum degree <= 2.
  GraphInvariants inv = invariants(g);
  return !(inv.is_tree && inv.max_degree <= 2);
}

}  // namespace rfs
