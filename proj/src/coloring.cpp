#include "rfs/coloring.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace rfs {

EdgeColoring::EdgeColoring(int n, int fill_color) : n_(n) {
  if (n < 1 || n > 64) throw std::invalid_argument("EdgeColoring: n out of range [1,64]");
  if (fill_color < 1) throw std::invalid_argument("EdgeColoring: colors are positive naturals");
  c_.assign(static_cast<size_t>(n) * (static_cast<size_t>(n) - 1) / 2, fill_color);
}

EdgeColoring EdgeColoring::from_rule(int n, const std::function<int(int, int)>& rule) {
  EdgeColoring kc(n, 1);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) kc.set_color(u, v, rule(u, v));
  return kc;
}

size_t EdgeColoring::idx(int u, int v) const {
  if (u > v) std::swap(u, v);
  if (u < 1 || v > n_ || u == v)
    throw std::out_of_range("EdgeColoring: vertex pair out of range");
  // lex position of (u,v), 1-based vertices
  size_t a = static_cast<size_t>(u - 1), b = static_cast<size_t>(v - 1);
  return a * static_cast<size_t>(n_) - a * (a + 1) / 2 + (b - a - 1);
}

int EdgeColoring::color(int u, int v) const { return c_[idx(u, v)]; }

void EdgeColoring::set_color(int u, int v, int c) {
  if (c < 1) throw std::invalid_argument("EdgeColoring: colors are positive naturals");
  c_[idx(u, v)] = c;
}

int EdgeColoring::num_colors() const {
  std::set<int> s(c_.begin(), c_.end());
  return static_cast<int>(s.size());
}

std::vector<int> EdgeColoring::distinct_colors() const {
  std::set<int> s(c_.begin(), c_.end());
  return std::vector<int>(s.begin(), s.end());
}

int EdgeColoring::color_degree(int v) const {
  if (v < 1 || v > n_) throw std::out_of_range("color_degree: vertex out of range");
  std::set<int> s;
  for (int u = 1; u <= n_; ++u)
    if (u != v) s.insert(color(u, v));
  return static_cast<int>(s.size());
}

ColorStats EdgeColoring::stats() const {
  ColorStats st;
  st.num_colors = num_colors();
  st.color_degree.resize(static_cast<size_t>(n_));
  for (int v = 1; v <= n_; ++v) {
    int d = n_ == 1 ? 0 : color_degree(v);
    st.color_degree[static_cast<size_t>(v - 1)] = d;
    st.max_color_degree = std::max(st.max_color_degree, d);
  }
  return st;
}

bool EdgeColoring::is_rainbow_edge_set(const std::vector<VertexPair>& edges) const {
  std::set<VertexPair> dedup;
  for (auto e : edges) {
    if (e.first > e.second) std::swap(e.first, e.second);
    dedup.insert(e);
  }
  std::set<int> seen;
  for (const auto& e : dedup) {
    int c = color(e.first, e.second);  // throws on out-of-range pairs
    if (!seen.insert(c).second) return false;
  }
  return true;
}

EdgeColoring EdgeColoring::normalized() const {
  EdgeColoring out(n_, 1);
  std::map<int, int> relabel;
  int next = 1;
  for (int u = 1; u <= n_; ++u)
    for (int v = u + 1; v <= n_; ++v) {
      int c = color(u, v);
      auto it = relabel.find(c);
      if (it == relabel.end()) it = relabel.emplace(c, next++).first;
      out.set_color(u, v, it->second);
    }
  return out;
}

nlohmann::json coloring_to_json(const EdgeColoring& kc) {
  EdgeColoring norm = kc.normalized();
  nlohmann::json rows = nlohmann::json::array();
  for (int u = 1; u <= norm.n(); ++u)
    for (int v = u + 1; v <= norm.n(); ++v)
      rows.push_back({u, v, norm.color(u, v)});
  return nlohmann::json{{"n", norm.n()}, {"colors", rows}};
}

EdgeColoring coloring_from_json(const nlohmann::json& j) {
  if (!j.contains("n") || !j.contains("colors"))
    throw std::invalid_argument("coloring json: need fields n, colors");
  int n = j.at("n").get<int>();
  EdgeColoring kc(n, 1);
  std::set<VertexPair> seen;
  for (const auto& row : j.at("colors")) {
    if (!row.is_array() || row.size() != 3)
      throw std::invalid_argument("coloring json: rows are [u,v,c]");
    int u = row[0].get<int>(), v = row[1].get<int>(), c = row[2].get<int>();
    if (u == v || u < 1 || v < 1 || u > n || v > n)
      throw std::invalid_argument("coloring json: bad edge");
    if (c < 1) throw std::invalid_argument("coloring json: colors are positive naturals");
    VertexPair e = u < v ? VertexPair{u, v} : VertexPair{v, u};
    if (!seen.insert(e).second) throw std::invalid_argument("coloring json: duplicate edge");
    kc.set_color(u, v, c);
  }
  if (static_cast<int>(seen.size()) != kc.edge_count())
    throw std::invalid_argument("coloring json: not total on all pairs");
  return kc;
}

}  // namespace rfs
