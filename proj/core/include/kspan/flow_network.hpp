#pragma once

#include <cstdint>
#include <vector>

namespace kspan {

/// Integer-capacity flow network with residual edges, sized for the unit
/// capacity instances produced by vertex splitting.
///
/// Edges are stored in pairs (e, e ^ 1). Flows can be cleared cheaply
/// between queries: only edges touched by an augmentation are restored.
class FlowNetwork {
 public:
  static constexpr int kUnbounded = 1 << 28;

  explicit FlowNetwork(int nodes = 0);

  int node_count() const noexcept { return static_cast<int>(head_.size()); }
  int add_node();
  /// Returns the id of the forward edge.
  int add_edge(int from, int to, int capacity, int cost = 0);

  /// Augments along shortest residual paths until `limit` units are sent or
  /// no path remains. Flow already present is kept.
  int max_flow(int source, int sink, int limit);

  struct CostFlow {
    int flow = 0;
    long long cost = 0;
  };
  /// Successive shortest paths (Dijkstra with potentials). Edge costs must
  /// be nonnegative on a network with no flow.
  CostFlow min_cost_flow(int source, int sink, int limit);

  int flow_on(int edge) const { return original_[edge] - cap_[edge]; }
  int edge_from(int edge) const { return to_[edge ^ 1]; }
  int edge_to(int edge) const { return to_[edge]; }
  int edge_count() const noexcept { return static_cast<int>(to_.size()); }

  /// Nodes reachable from `source` in the residual graph.
  std::vector<char> residual_reachable(int source) const;

  /// Outgoing edge ids of `node` (forward and residual).
  template <typename F>
  void for_each_edge(int node, F&& f) const {
    for (int e = head_[node]; e != -1; e = next_[e]) f(e);
  }

  /// Restores every capacity touched since construction or the last reset.
  void reset_flow();

 private:
  void push(int edge, int amount);

  std::vector<int> head_;
  std::vector<int> next_;
  std::vector<int> to_;
  std::vector<int> cap_;
  std::vector<int> original_;
  std::vector<int> cost_;
  std::vector<int> touched_;
  std::vector<char> is_touched_;

  // BFS scratch, stamped to avoid clearing between queries.
  std::vector<std::uint32_t> stamp_;
  std::vector<int> parent_edge_;
  std::vector<int> queue_;
  std::uint32_t epoch_ = 0;
};

}  // namespace kspan
