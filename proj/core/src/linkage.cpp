#include "kspan/linkage.hpp"

#include <algorithm>
#include <numeric>

#include "kspan/error.hpp"
#include "kspan/flow_network.hpp"

namespace kspan {

std::size_t Fan::total_length() const {
  std::size_t total = 0;
  for (const Path& p : paths) total += p.length();
  return total;
}

std::optional<std::string> validate_fan(const Digraph& d, const Fan& fan, std::span<const Vertex> pool) {
  if (fan.paths.size() != fan.targets.size()) return "paths/targets size mismatch";
  std::vector<Vertex> sorted_targets = fan.targets;
  std::sort(sorted_targets.begin(), sorted_targets.end());
  if (std::adjacent_find(sorted_targets.begin(), sorted_targets.end()) != sorted_targets.end())
    return "repeated target";
  std::vector<char> owner_pool(d.order(), 0);
  for (Vertex u : pool) owner_pool[u] = 1;
  for (Vertex u : fan.targets) owner_pool[u] = 1;

  std::vector<int> used_by(d.order(), -1);
  for (std::size_t i = 0; i < fan.paths.size(); ++i) {
    const Path& p = fan.paths[i];
    if (!is_path_in(d, p)) return "path " + std::to_string(i) + " is not a path of the digraph";
    const bool outward = fan.direction == FanDirection::kFromCenter;
    const Vertex start = outward ? fan.center : fan.targets[i];
    const Vertex end = outward ? fan.targets[i] : fan.center;
    if (p.front() != start || p.back() != end) return "path " + std::to_string(i) + " has wrong endpoints";
    if (fan.targets[i] == fan.center && p.length() != 0) return "center target must use the trivial path";
    for (Vertex x : p.vertices) {
      if (x == fan.center) continue;
      if (x != fan.targets[i] && owner_pool[x]) return "path " + std::to_string(i) + " meets another target";
      if (used_by[x] != -1) return "paths " + std::to_string(used_by[x]) + " and " + std::to_string(i) + " intersect";
      used_by[x] = static_cast<int>(i);
    }
  }
  return std::nullopt;
}

namespace {

int in_node(Vertex v) { return 2 * v; }
int out_node(Vertex v) { return 2 * v + 1; }
Vertex vertex_of(int node) { return node / 2; }

// Walks one unit of flow from `start` to `stop`, consuming it, and returns
// the vertices visited (each vertex once, via its out-node).
std::vector<Vertex> take_flow_path(const FlowNetwork& net, std::vector<int>& remaining, int start, int stop,
                                   int vertex_nodes) {
  std::vector<Vertex> vertices;
  int node = start;
  while (node != stop) {
    int chosen = -1;
    net.for_each_edge(node, [&](int e) {
      if (chosen == -1 && (e % 2 == 0) && remaining[e] > 0) chosen = e;
    });
    if (chosen == -1) throw Error(ErrorCode::kInternalInvariant, "flow decomposition lost a path");
    --remaining[chosen];
    node = net.edge_to(chosen);
    if (node < vertex_nodes && node % 2 == 1) vertices.push_back(vertex_of(node));
  }
  return vertices;
}

std::vector<int> flow_snapshot(const FlowNetwork& net) {
  std::vector<int> remaining(net.edge_count(), 0);
  for (int e = 0; e < net.edge_count(); e += 2) remaining[e] = net.flow_on(e);
  return remaining;
}

Fan fan_from_center(const Digraph& d, Vertex v, std::span<const Vertex> pool, int k) {
  const int n = d.order();
  std::vector<char> in_pool(n, 0);
  for (Vertex u : pool) {
    if (u < 0 || u >= n) throw Error(ErrorCode::kInvalidArgument, "pool vertex out of range");
    in_pool[u] = 1;
  }
  const bool center_in_pool = in_pool[v] != 0;

  FlowNetwork net(2 * n);
  const int sink = net.add_node();
  for (Vertex x = 0; x < n; ++x) {
    if (x == v) continue;
    if (in_pool[x])
      net.add_edge(in_node(x), sink, 1);
    else
      net.add_edge(in_node(x), out_node(x), 1);
  }
  for (const Arc& a : d.arcs())
    if (a.head != v) net.add_edge(out_node(a.tail), in_node(a.head), 1, 1);

  const int wanted = k - (center_in_pool ? 1 : 0);
  const auto flow = net.min_cost_flow(out_node(v), sink, wanted);
  if (flow.flow < wanted)
    throw Error(ErrorCode::kNoFan, "only " + std::to_string(flow.flow + (center_in_pool ? 1 : 0)) +
                                       " disjoint paths from " + std::to_string(v));

  Fan fan;
  fan.center = v;
  fan.direction = FanDirection::kFromCenter;
  if (center_in_pool) {
    fan.targets.push_back(v);
    fan.paths.push_back(Path{{v}});
  }
  auto remaining = flow_snapshot(net);
  for (int i = 0; i < wanted; ++i) {
    Path p{{v}};
    // Pool vertices end at their in-node, so record the last hop by hand.
    int node = out_node(v);
    while (node != sink) {
      int chosen = -1;
      net.for_each_edge(node, [&](int e) {
        if (chosen == -1 && e % 2 == 0 && remaining[e] > 0) chosen = e;
      });
      if (chosen == -1) throw Error(ErrorCode::kInternalInvariant, "fan decomposition lost a path");
      --remaining[chosen];
      const int next = net.edge_to(chosen);
      if (next != sink && next % 2 == 0) p.vertices.push_back(vertex_of(next));
      node = next;
    }
    fan.targets.push_back(p.back());
    fan.paths.push_back(std::move(p));
  }
  return fan;
}

}  // namespace

Fan k_fan(const Digraph& d, Vertex v, std::span<const Vertex> pool, int k, FanDirection direction) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  if (v < 0 || v >= d.order()) throw Error(ErrorCode::kInvalidArgument, "center out of range");
  if (static_cast<int>(pool.size()) < k) throw Error(ErrorCode::kNoFan, "target pool smaller than k");
  if (direction == FanDirection::kFromCenter) return fan_from_center(d, v, pool, k);

  Fan fan = fan_from_center(d.reversed(), v, pool, k);
  fan.direction = FanDirection::kToCenter;
  for (Path& p : fan.paths) std::reverse(p.vertices.begin(), p.vertices.end());
  return fan;
}

PathSystem min_disjoint_paths(const Digraph& d, std::span<const Vertex> sources, std::span<const Vertex> sinks,
                              int k) {
  const int n = d.order();
  if (k < 1 || static_cast<int>(sources.size()) != k || static_cast<int>(sinks.size()) != k)
    throw Error(ErrorCode::kInvalidArgument, "need exactly k sources and k sinks");
  for (auto set : {sources, sinks}) {
    std::vector<Vertex> s(set.begin(), set.end());
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end() || s.front() < 0 || s.back() >= n)
      throw Error(ErrorCode::kInvalidArgument, "terminals must be distinct vertices");
  }

  FlowNetwork net(2 * n);
  const int super_source = net.add_node();
  const int super_sink = net.add_node();
  for (Vertex x = 0; x < n; ++x) net.add_edge(in_node(x), out_node(x), 1);
  for (const Arc& a : d.arcs()) net.add_edge(out_node(a.tail), in_node(a.head), 1, 1);
  for (Vertex s : sources) net.add_edge(super_source, in_node(s), 1);
  for (Vertex t : sinks) net.add_edge(out_node(t), super_sink, 1);

  const auto flow = net.min_cost_flow(super_source, super_sink, k);
  if (flow.flow < k)
    throw Error(ErrorCode::kNoLinkage, "only " + std::to_string(flow.flow) + " disjoint paths exist");

  auto remaining = flow_snapshot(net);
  PathSystem system;
  for (Vertex s : sources) {
    // Route the unit that enters through this source.
    Path p{{}};
    std::vector<Vertex> walk = take_flow_path(net, remaining, in_node(s), super_sink, 2 * n);
    p.vertices = std::move(walk);
    system.total_length += p.length();
    system.paths.push_back(std::move(p));
  }
  if (static_cast<long long>(system.total_length) != flow.cost)
    throw Error(ErrorCode::kInternalInvariant, "path lengths disagree with flow cost");
  return system;
}

bool check_backwards_transitive(const Tournament& t, const Path& p) {
  const auto& v = p.vertices;
  for (std::size_t i = 2; i < v.size(); ++i)
    for (std::size_t j = 0; j + 2 <= i; ++j)
      if (!t.beats(v[i], v[j])) return false;
  return true;
}

}  // namespace kspan
