#pragma once
// Edge-colored complete graphs (K_n, c): a total color assignment on the
// n(n-1)/2 unordered pairs, vertices implicitly 1..n, color ids positive
// naturals. Dense triangular storage; values are immutable once built.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rfs/graph.hpp"

#include <json.hpp>

namespace rfs {

struct ColorStats {
  int num_colors = 0;
  std::vector<int> color_degree;  // indexed by vertex-1
  int max_color_degree = 0;
};

class EdgeColoring {
 public:
  // All edges start at fill_color (must be >= 1).
  EdgeColoring(int n, int fill_color);

  // rule(u, v) with u < v must return a positive color id.
  static EdgeColoring from_rule(int n, const std::function<int(int, int)>& rule);

  int n() const { return n_; }
  int edge_count() const { return n_ * (n_ - 1) / 2; }

  int color(int u, int v) const;
  void set_color(int u, int v, int c);  // builder use only

  int num_colors() const;
  std::vector<int> distinct_colors() const;  // sorted ascending
  int color_degree(int v) const;
  ColorStats stats() const;

  bool is_rainbow_edge_set(const std::vector<VertexPair>& edges) const;

  // Colors relabeled to 1..t by first appearance in lexicographic edge order
  // (1,2),(1,3),...,(2,3),...; idempotent, preserves the color partition.
  EdgeColoring normalized() const;

  bool operator==(const EdgeColoring& o) const { return n_ == o.n_ && c_ == o.c_; }

 private:
  int n_;
  std::vector<int> c_;  // triangular, lex order
  size_t idx(int u, int v) const;
};

inline EdgeColoring normalize_colors(const EdgeColoring& kc) { return kc.normalized(); }

// JSON coloring file {"n": N, "colors": [[u,v,c],...]}: the writer emits the
// normalized coloring with rows sorted lexicographically; the loader demands
// totality (every pair exactly once) and positive ids.
nlohmann::json coloring_to_json(const EdgeColoring& kc);
EdgeColoring coloring_from_json(const nlohmann::json& j);

}  // namespace rfs
