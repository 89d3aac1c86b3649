#pragma once

#include <utility>
#include <vector>

namespace kspan {

/// Bipartite graph with left vertices [0, left) and right vertices [0, right).
struct BipartiteGraph {
  int left = 0;
  int right = 0;
  std::vector<std::vector<int>> adjacency;  // per left vertex, sorted

  explicit BipartiteGraph(int l = 0, int r = 0) : left(l), right(r), adjacency(static_cast<std::size_t>(l)) {}
  std::size_t edge_count() const;
  bool has_edge(int a, int b) const;
  void remove_edge(int a, int b);
};

using MatchingEdges = std::vector<std::pair<int, int>>;

/// Maximum matching by Hopcroft-Karp; edges sorted by left endpoint.
MatchingEdges maximum_matching(const BipartiteGraph& g);

}  // namespace kspan
