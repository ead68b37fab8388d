#pragma once
// Small simple graphs on natural-number vertex labels, plus the invariants,
// subgraph and isomorphism machinery the rest of the library builds on.
// Everything here is a value type: immutable after construction, cheap to
// copy at the sizes we care about (patterns have <= 8 vertices, isomorphism
// is supported up to 12).

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace rfs {

using VertexPair = std::pair<int, int>;

class Graph {
 public:
  Graph() = default;

  // Validates: labels distinct and >= 1, no loops, no duplicate edges,
  // every endpoint listed among the vertices.
  Graph(std::vector<int> vertices, std::vector<VertexPair> edges);

  // Vertex set inferred from edge endpoints.
  static Graph from_edges(const std::vector<VertexPair>& edges);

  int order() const { return static_cast<int>(verts_.size()); }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<int>& vertices() const { return verts_; }
  const std::vector<VertexPair>& edges() const { return edges_; }

  bool has_vertex(int v) const;
  bool has_edge(int u, int v) const;
  int degree(int v) const;
  std::vector<int> neighbors(int v) const;

  // Position of a label in the sorted vertex list; -1 if absent.
  int index_of(int v) const;
  int label_at(int idx) const { return verts_[static_cast<size_t>(idx)]; }

  // Adjacency bitmask per vertex index; only built for order() <= 16.
  const std::vector<std::uint16_t>& adjacency() const { return adj_; }

  bool operator==(const Graph& o) const {
    return verts_ == o.verts_ && edges_ == o.edges_;
  }

 private:
  std::vector<int> verts_;            // sorted ascending
  std::vector<VertexPair> edges_;     // normalized u < v, sorted
  std::vector<std::uint16_t> adj_;    // by vertex index; empty if order > 16
};

struct GraphInvariants {
  int order = 0;
  int size = 0;
  int max_degree = 0;
  int dimension = 0;   // |E| - |V| + 1, the formula taken verbatim
  bool is_tree = false;
  bool connected = false;
  int component_count = 0;
  std::vector<int> branch_vertices;  // labels with degree >= 3
};

GraphInvariants invariants(const Graph& g);

bool is_connected(const Graph& g);

// Not-necessarily-induced subgraph test: true iff some injective vertex map
// sends E(h) into E(g). Backtracking with degree pruning; deterministic.
bool is_subgraph(const Graph& h, const Graph& g);

// Exact isomorphism decision; graphs up to 12 vertices.
bool are_isomorphic(const Graph& g1, const Graph& g2);

// Canonical encoding, minimised over all labelings: per position the stable
// refinement colour of the chosen vertex followed by its adjacency bits to
// the already-placed positions. Equal encodings <=> isomorphic. Order <= 12.
std::vector<std::uint32_t> canonical_form(const Graph& g);

// Canonically relabeled copy on vertices 1..n.
Graph canonical_copy(const Graph& g);

// "edges:[(u,v),...]" text of the canonical copy ("vertices:[...]" form for
// edgeless graphs); a stable key for the isomorphism class.
std::string canonical_key(const Graph& g);

// Membership in the study domain: connected and not one of P1..P4.
bool in_domain_H(const Graph& g);

}  // namespace rfs
