#pragma once
// Rainbow subgraph search: does an edge-colored complete graph contain a
// rainbow copy of a connected pattern H? Backtracking over a connected
// ordering of the pattern (maximum-degree vertex first, then BFS), host
// candidates tried in ascending label order, partial maps pruned the moment
// an image edge repeats a used color.

#include <optional>
#include <vector>

#include "rfs/coloring.hpp"
#include "rfs/graph.hpp"

namespace rfs {

struct Embedding {
  std::vector<int> pattern_vertices;  // pattern labels
  std::vector<int> host_vertices;     // aligned image, 1..n

  int host_of(int pattern_label) const;
  // Image edges of the pattern under the map.
  std::vector<VertexPair> image_edges(const Graph& pattern) const;
};

enum class SearchStatus { found, not_found, pattern_too_large };

struct SearchResult {
  SearchStatus status = SearchStatus::not_found;
  std::optional<Embedding> embedding;

  bool found() const { return status == SearchStatus::found; }
};

// Pattern must be connected; pattern_too_large is reported distinctly from
// a plain miss. Deterministic for fixed inputs.
SearchResult find_rainbow_embedding(const EdgeColoring& kc, const Graph& pattern);

// Negation wrapper; a pattern larger than the host counts as free.
bool is_rainbow_free(const EdgeColoring& kc, const Graph& pattern);

// Exhaustive scan over all injective maps, lexicographic; testing oracle.
// Hosts up to 8 vertices.
SearchResult brute_force_find(const EdgeColoring& kc, const Graph& pattern);

// Re-validation of a returned embedding: injective, aligned with the
// pattern, rainbow image.
bool embedding_is_valid(const EdgeColoring& kc, const Graph& pattern, const Embedding& e);

}  // namespace rfs
