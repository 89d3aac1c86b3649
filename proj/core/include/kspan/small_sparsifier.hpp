#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kspan/digraph.hpp"
#include "kspan/tournament.hpp"

namespace kspan {

/// Disjoint k-sets X, Y such that every x in X reaches every y in Y after
/// deleting any k-1 other vertices.
struct LinkagePair {
  VertexSet x;
  VertexSet y;
  /// 1: extreme-degree sets certified pairwise; 2: complete bipartite
  /// X -> Y found inside a failing pair.
  int branch = 1;
  /// certificates[i * k + j]: internally disjoint paths x[i] -> y[j].
  std::vector<std::vector<Path>> certificates;
};

/// Throws kTooSmall if n < 5k.
LinkagePair linkage_pair(const Tournament& t, int k);

/// Checks disjointness, certificate paths and a flow recount of every pair.
std::optional<std::string> validate_linkage_pair(const Tournament& t, const LinkagePair& lp, int k);

/// Strongly k-connected spanning subgraph with at most
/// (5k-2)n + C(5k, 2) arcs. Returns T itself when n < 5k. With `validate`,
/// throws kNotKConnected unless T is strongly k-connected.
Digraph sparsify_small(const Tournament& t, int k, bool validate = true);

/// Spanning cycle of a strongly connected tournament, as a digraph with
/// exactly n arcs. Throws kNotStronglyConnected otherwise.
Digraph hamilton_cycle(const Tournament& t);

/// The cycle's vertex sequence (first vertex not repeated).
VertexSet hamilton_cycle_order(const Tournament& t);

}  // namespace kspan
