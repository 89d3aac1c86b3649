#include "kspan/flow_network.hpp"

#include <functional>
#include <limits>
#include <queue>
#include <utility>

namespace kspan {

FlowNetwork::FlowNetwork(int nodes)
    : head_(nodes, -1),
      stamp_(nodes, 0),
      parent_edge_(nodes, -1) {}

int FlowNetwork::add_node() {
  head_.push_back(-1);
  stamp_.push_back(0);
  parent_edge_.push_back(-1);
  return node_count() - 1;
}

int FlowNetwork::add_edge(int from, int to, int capacity, int cost) {
  const int id = edge_count();
  auto append = [&](int a, int b, int c, int w) {
    to_.push_back(b);
    cap_.push_back(c);
    original_.push_back(c);
    cost_.push_back(w);
    next_.push_back(head_[a]);
    is_touched_.push_back(0);
    head_[a] = edge_count() - 1;
  };
  append(from, to, capacity, cost);
  append(to, from, 0, -cost);
  return id;
}

void FlowNetwork::push(int edge, int amount) {
  for (int e : {edge, edge ^ 1}) {
    if (!is_touched_[e]) {
      is_touched_[e] = 1;
      touched_.push_back(e);
    }
  }
  cap_[edge] -= amount;
  cap_[edge ^ 1] += amount;
}

void FlowNetwork::reset_flow() {
  for (int e : touched_) {
    cap_[e] = original_[e];
    is_touched_[e] = 0;
  }
  touched_.clear();
}

int FlowNetwork::max_flow(int source, int sink, int limit) {
  int total = 0;
  while (total < limit) {
    ++epoch_;
    queue_.clear();
    queue_.push_back(source);
    stamp_[source] = epoch_;
    bool found = false;
    for (std::size_t qi = 0; qi < queue_.size() && !found; ++qi) {
      const int u = queue_[qi];
      for (int e = head_[u]; e != -1; e = next_[e]) {
        const int v = to_[e];
        if (cap_[e] <= 0 || stamp_[v] == epoch_) continue;
        stamp_[v] = epoch_;
        parent_edge_[v] = e;
        if (v == sink) {
          found = true;
          break;
        }
        queue_.push_back(v);
      }
    }
    if (!found) break;
    int bottleneck = limit - total;
    for (int v = sink; v != source;) {
      const int e = parent_edge_[v];
      bottleneck = std::min(bottleneck, cap_[e]);
      v = to_[e ^ 1];
    }
    for (int v = sink; v != source;) {
      const int e = parent_edge_[v];
      push(e, bottleneck);
      v = to_[e ^ 1];
    }
    total += bottleneck;
  }
  return total;
}

FlowNetwork::CostFlow FlowNetwork::min_cost_flow(int source, int sink, int limit) {
  constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
  const auto n = static_cast<std::size_t>(node_count());
  std::vector<long long> potential(n, 0);
  std::vector<long long> dist(n);
  CostFlow result;
  using Item = std::pair<long long, int>;
  while (result.flow < limit) {
    std::fill(dist.begin(), dist.end(), kInf);
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[source] = 0;
    heap.emplace(0, source);
    while (!heap.empty()) {
      auto [d, u] = heap.top();
      heap.pop();
      if (d != dist[u]) continue;
      for (int e = head_[u]; e != -1; e = next_[e]) {
        if (cap_[e] <= 0) continue;
        const int v = to_[e];
        const long long nd = d + cost_[e] + potential[u] -
                             potential[v];
        if (nd < dist[v]) {
          dist[v] = nd;
          parent_edge_[v] = e;
          heap.emplace(nd, v);
        }
      }
    }
    if (dist[sink] == kInf) break;
    for (std::size_t v = 0; v < n; ++v)
      if (dist[v] != kInf) potential[v] += dist[v];
    int bottleneck = limit - result.flow;
    for (int v = sink; v != source;) {
      const int e = parent_edge_[v];
      bottleneck = std::min(bottleneck, cap_[e]);
      v = to_[e ^ 1];
    }
    for (int v = sink; v != source;) {
      const int e = parent_edge_[v];
      push(e, bottleneck);
      result.cost += static_cast<long long>(bottleneck) * cost_[e];
      v = to_[e ^ 1];
    }
    result.flow += bottleneck;
  }
  return result;
}

std::vector<char> FlowNetwork::residual_reachable(int source) const {
  std::vector<char> seen(static_cast<std::size_t>(node_count()), 0);
  std::vector<int> stack{source};
  seen[source] = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int e = head_[u]; e != -1; e = next_[e]) {
      const int v = to_[e];
      if (cap_[e] > 0 && !seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  return seen;
}

}  // namespace kspan
