#include "rfs/pattern.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace rfs {

namespace {

Graph path_graph(int k) {
  std::vector<int> vs(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) vs[static_cast<size_t>(i)] = i + 1;
  std::vector<VertexPair> es;
  for (int i = 1; i < k; ++i) es.emplace_back(i, i + 1);
  return Graph(vs, es);
}

Graph cycle_graph(int k) {
  std::vector<int> vs(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) vs[static_cast<size_t>(i)] = i + 1;
  std::vector<VertexPair> es;
  for (int i = 1; i < k; ++i) es.emplace_back(i, i + 1);
  es.emplace_back(1, k);
  return Graph(vs, es);
}

Graph star_graph(int k) {
  std::vector<int> vs(static_cast<size_t>(k + 1));
  for (int i = 0; i <= k; ++i) vs[static_cast<size_t>(i)] = i + 1;
  std::vector<VertexPair> es;
  for (int i = 2; i <= k + 1; ++i) es.emplace_back(1, i);
  return Graph(vs, es);
}

Graph spider_graph(std::vector<int> legs) {
  std::sort(legs.rbegin(), legs.rend());
  int n = 1;
  for (int l : legs) n += l;
  std::vector<int> vs(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) vs[static_cast<size_t>(i)] = i + 1;
  std::vector<VertexPair> es;
  int next = 2;
  for (int l : legs) {
    int prev = 1;
    for (int j = 0; j < l; ++j) {
      es.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Graph(vs, es);
}

Graph star_plus_graph(int k) {  // K1,k with one edge subdivided
  std::vector<int> legs(static_cast<size_t>(k), 1);
  legs[0] = 2;
  return spider_graph(legs);
}

Graph star_plus_e_graph(int k) {  // K1,k with an edge between two leaves
  Graph s = star_graph(k);
  std::vector<VertexPair> es = s.edges();
  es.emplace_back(2, 3);
  return Graph(s.vertices(), es);
}

Graph barbell_graph() {
  Graph sp = star_plus_graph(3);  // center 1, leg 1-2-3, legs 1-4, 1-5
  std::vector<int> vs = sp.vertices();
  vs.push_back(6);
  std::vector<VertexPair> es = sp.edges();
  es.emplace_back(2, 6);  // pendant at the degree-2 vertex
  return Graph(vs, es);
}

Graph z1_graph() {
  return Graph({1, 2, 3, 4}, {{1, 2}, {2, 3}, {1, 3}, {1, 4}});
}

int parse_int(const std::string& s, size_t& pos) {
  size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == start) throw std::invalid_argument("pattern spec: expected integer in '" + s + "'");
  return std::stoi(s.substr(start, pos - start));
}

Graph parse_edge_list(const std::string& spec) {
  std::string s;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  const std::string prefix = "edges:[";
  if (s.rfind(prefix, 0) != 0 || s.back() != ']')
    throw std::invalid_argument("pattern spec: malformed edge list '" + spec + "'");
  std::string body = s.substr(prefix.size(), s.size() - prefix.size() - 1);
  std::vector<VertexPair> es;
  size_t pos = 0;
  while (pos < body.size()) {
    if (body[pos] == ',') ++pos;
    if (pos >= body.size()) break;
    if (body[pos] != '(') throw std::invalid_argument("pattern spec: expected '(' in edge list");
    ++pos;
    int u = parse_int(body, pos);
    if (pos >= body.size() || body[pos] != ',')
      throw std::invalid_argument("pattern spec: expected ',' in edge pair");
    ++pos;
    int v = parse_int(body, pos);
    if (pos >= body.size() || body[pos] != ')')
      throw std::invalid_argument("pattern spec: expected ')' in edge pair");
    ++pos;
    es.emplace_back(u, v);
  }
  if (es.empty()) throw std::invalid_argument("pattern spec: empty edge list");
  return Graph::from_edges(es);
}

}  // namespace

Graph make_pattern(const std::string& raw) {
  std::string spec;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) spec.push_back(c);
  if (spec.empty()) throw std::invalid_argument("pattern spec: empty");

  if (spec == "B") return barbell_graph();
  if (spec == "Z1") return z1_graph();
  if (spec.rfind("edges:", 0) == 0) return parse_edge_list(spec);

  if (spec.rfind("K1,", 0) == 0) {
    size_t pos = 3;
    int k = parse_int(spec, pos);
    if (k < 1) throw std::invalid_argument("pattern spec: star needs k >= 1");
    if (pos == spec.size()) return star_graph(k);
    if (spec.substr(pos) == "+") return star_plus_graph(k);
    if (spec.substr(pos) == "+e") {
      if (k < 2) throw std::invalid_argument("pattern spec: K1,k+e needs k >= 2");
      return star_plus_e_graph(k);
    }
    throw std::invalid_argument("pattern spec: malformed star '" + spec + "'");
  }

  char head = spec[0];
  size_t pos = 1;
  if (head == 'P') {
    int k = parse_int(spec, pos);
    if (pos != spec.size()) throw std::invalid_argument("pattern spec: trailing text in '" + spec + "'");
    if (k < 1) throw std::invalid_argument("pattern spec: path needs k >= 1");
    return path_graph(k);
  }
  if (head == 'C') {
    int k = parse_int(spec, pos);
    if (pos != spec.size()) throw std::invalid_argument("pattern spec: trailing text in '" + spec + "'");
    if (k < 3) throw std::invalid_argument("pattern spec: cycle needs k >= 3");
    return cycle_graph(k);
  }
  if (head == 'S') {
    int a = parse_int(spec, pos);
    if (pos >= spec.size() || spec[pos] != ',') throw std::invalid_argument("pattern spec: spider needs three legs");
    ++pos;
    int b = parse_int(spec, pos);
    if (pos >= spec.size() || spec[pos] != ',') throw std::invalid_argument("pattern spec: spider needs three legs");
    ++pos;
    int c = parse_int(spec, pos);
    if (pos != spec.size()) throw std::invalid_argument("pattern spec: trailing text in '" + spec + "'");
    if (a < 1 || b < 1 || c < 1) throw std::invalid_argument("pattern spec: spider legs must be >= 1");
    return spider_graph({a, b, c});
  }
  throw std::invalid_argument("pattern spec: unrecognized '" + raw + "'");
}

bool is_valid_pattern_spec(const std::string& spec) {
  try {
    make_pattern(spec);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

namespace {

// Leg lengths from the unique branch vertex of a spider, non-increasing.
std::optional<std::vector<int>> spider_legs(const Graph& g, const GraphInvariants& inv) {
  if (!inv.is_tree || inv.branch_vertices.size() != 1) return std::nullopt;
  int center = inv.branch_vertices[0];
  std::vector<int> legs;
  for (int nb : g.neighbors(center)) {
    int len = 1, prev = center, cur = nb;
    for (;;) {
      auto ns = g.neighbors(cur);
      if (ns.size() == 1) break;  // leaf
      if (ns.size() != 2) return std::nullopt;  // touched another branch vertex
      int next = ns[0] == prev ? ns[1] : ns[0];
      prev = cur;
      cur = next;
      ++len;
    }
    legs.push_back(len);
  }
  std::sort(legs.rbegin(), legs.rend());
  return legs;
}

}  // namespace

std::optional<std::string> family_name(const Graph& g) {
  GraphInvariants inv = invariants(g);
  if (!inv.connected) return std::nullopt;
  int n = inv.order;
  if (inv.is_tree && inv.max_degree <= 2) return "P" + std::to_string(n);
  if (inv.size == n && inv.max_degree == 2) return "C" + std::to_string(n);
  if (inv.is_tree) {
    if (inv.max_degree == n - 1) return "K1," + std::to_string(n - 1);
    auto legs = spider_legs(g, inv);
    if (legs) {
      bool unit_tail = std::all_of(legs->begin() + 1, legs->end(),
                                   [](int l) { return l == 1; });
      if ((*legs)[0] == 2 && unit_tail)
        return "K1," + std::to_string(legs->size()) + "+";
      if (legs->size() == 3)
        return "S" + std::to_string((*legs)[0]) + "," + std::to_string((*legs)[1]) +
               "," + std::to_string((*legs)[2]);
      return std::nullopt;
    }
    if (are_isomorphic(g, barbell_graph())) return "B";
    return std::nullopt;
  }
  if (n == 4 && inv.size == 4 && are_isomorphic(g, z1_graph())) return "Z1";
  // K1,k+e: order k+1, size k+1, a vertex of full degree, one triangle
  if (inv.size == n && inv.max_degree == n - 1 && n >= 4 &&
      are_isomorphic(g, star_plus_e_graph(n - 1)))
    return "K1," + std::to_string(n - 1) + "+e";
  return std::nullopt;
}

std::string pattern_display_name(const Graph& g) {
  if (auto name = family_name(g)) return *name;
  return canonical_key(g);
}

std::vector<std::string> pattern_family_help() {
  return {
      "P<k>          path of order k           (k >= 1)",
      "C<k>          cycle of order k          (k >= 3)",
      "K1,<k>        star with k leaves        (k >= 1)",
      "K1,<k>+       star, one edge subdivided (k >= 1)",
      "K1,<k>+e      star plus a leaf-leaf edge(k >= 2); K1,2+e = C3, K1,3+e = Z1",
      "S<a>,<b>,<c>  3-legged spider, legs a,b,c >= 1 (normalized non-increasing)",
      "B             barbell: the tree with degree sequence (3,3,1,1,1,1)",
      "Z1            triangle plus one pendant edge",
      "edges:[(u,v),...]  explicit edge list on natural-number labels",
  };
}

}  // namespace rfs
