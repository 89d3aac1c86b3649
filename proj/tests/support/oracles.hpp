#pragma once

// Slow, independent reference implementations used to cross-check the
// library. None of them call into the algorithms they check.

#include <cstdint>
#include <optional>
#include <vector>

#include "kspan/kspan.hpp"

namespace kspan::oracle {

/// reach[u][v]: v reachable from u (reflexive), by Floyd-Warshall closure
/// over the vertices not in `removed`.
std::vector<std::vector<bool>> reachability(const Digraph& d, const std::vector<bool>& removed);

/// Strong connectivity of D - removed by the closure above.
bool strongly_connected_without(const Digraph& d, const std::vector<bool>& removed);

/// |V| >= k + 1 and D - S strongly connected for every S with |S| <= k - 1,
/// by enumerating all subsets. Intended for n <= 12.
bool k_connected_exhaustive(const Digraph& d, int k);

/// Maximum matching size by Kuhn's augmenting paths.
int kuhn_matching_size(const BipartiteGraph& g);

/// Minimum total length of k vertex-disjoint source-to-sink paths (distinct
/// sources and sinks), by enumerating simple paths. k in {1, 2}; small n.
/// nullopt when no such system exists.
std::optional<std::size_t> min_disjoint_total_exhaustive(const Digraph& d, const VertexSet& sources,
                                                         const VertexSet& sinks, int k);

/// Window audit of Q1_s and Q2_s by running counts from each endpoint.
bool q_windows_hold(const Digraph& d, const Ordering& order, int s);

/// Tournament on n vertices whose pair bits are the binary digits of `mask`.
Tournament tournament_from_mask(int n, std::uint64_t mask);

/// Random digraph: each ordered pair u != v is an arc with probability p.
Digraph random_digraph(int n, double p, std::uint64_t seed);

/// k vertex-disjoint (apart from endpoints) paths check by direct scan.
bool internally_disjoint(const std::vector<Path>& paths);

/// Independent check that `cycle` is a Hamilton cycle of t of exactly n arcs.
bool is_hamilton_cycle(const Tournament& t, const Digraph& cycle);

}  // namespace kspan::oracle
