#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kspan/digraph.hpp"
#include "kspan/matching.hpp"

namespace kspan {

/// Ordering whose windows satisfy Q1_s and Q2_s: for i < j, v_i has at
/// least (j-i-s)/2 out-neighbours among v_{i+1..j} and v_j at least
/// (j-i-s)/2 in-neighbours among v_{i..j-1}.
struct QOrdering {
  Ordering order;
  int s = 0;
  std::int64_t rounds = 0;
  /// Forward arc count before the first round and after each round.
  std::vector<std::int64_t> forward_history;
};

/// Minimum total degree d+(v) + d-(v) over all vertices.
int min_total_degree(const Digraph& d);

/// Repairs violations one at a time, first violated (i, j) in
/// lexicographic order. Throws kDegreeTooLow if delta(D) < n-1-s and
/// kInvalidArgument if D has a 2-cycle.
QOrdering q_ordering(const Digraph& d, int s);

/// Direct window-count audit of Q1_s / Q2_s.
std::optional<std::string> audit_q_ordering(const Digraph& d, const Ordering& order, int s);

std::int64_t forward_arc_count(const Digraph& d, const Ordering& order);

/// Left index i (0-based position) is joined to right index j iff
/// v_i -> v_j is a forward arc.
BipartiteGraph forward_bipartite(const Digraph& d, const Ordering& order);

/// Arc-disjoint matchings M_0..M_{k-1}; M_l is a maximum matching of H_0
/// minus the earlier ones, trimmed to max(n-s-2l-1, 0) edges by dropping
/// the highest left indices. Throws kMatchingDeficit when a maximum matching
/// falls short.
std::vector<MatchingEdges> extract_matchings(const BipartiteGraph& h0, int k, int s);

/// A (sigma, k, t)-good spanning subgraph with t = 2k + s - 1.
struct GoodDigraph {
  Digraph graph;
  Ordering order;
  int k = 0;
  int s = 0;
  int t = 0;
  std::size_t matched_arcs = 0;  // |E(D_1)|
};

GoodDigraph good_subgraph(const Digraph& d, int k, int s);

/// Checks all arcs forward, out-degree >= k on sigma(1, n-t) and in-degree
/// >= k on sigma(t+1, n).
std::optional<std::string> audit_good(const Digraph& graph, const Ordering& order, int k, int t);

enum class TailDirection { kToEnd, kFromStart };

/// Path in D' - blocked from v to the last t positions (kToEnd) or from the
/// first t positions to v (kFromStart). Throws kStuck if the greedy walk
/// cannot continue.
Path tail_path(const GoodDigraph& g, std::span<const Vertex> blocked, Vertex v, TailDirection direction);

}  // namespace kspan
