#include "kspan/connectivity.hpp"

#include <algorithm>
#include <random>

#include "kspan/error.hpp"
#include "kspan/flow_network.hpp"

namespace kspan {

std::vector<VertexSet> strongly_connected_components(const Digraph& d) {
  const int n = d.order();
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<Vertex> stack;
  std::vector<VertexSet> components;
  int counter = 0;

  // Iterative Tarjan: frames hold (vertex, next neighbour offset).
  std::vector<std::pair<Vertex, std::size_t>> frames;
  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    frames.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      auto& [v, next] = frames.back();
      const auto out = d.out_neighbors(v);
      if (next < out.size()) {
        const Vertex w = out[next++];
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        VertexSet component;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          component.push_back(w);
        } while (w != v);
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
      }
      const Vertex finished = v;
      frames.pop_back();
      if (!frames.empty()) {
        Vertex parent = frames.back().first;
        low[parent] = std::min(low[parent], low[finished]);
      }
    }
  }
  return components;
}

bool is_strongly_connected(const Digraph& d) {
  if (d.order() == 0) return false;
  return strongly_connected_components(d).size() == 1;
}

namespace {

// Vertex v becomes in(v) = 2v and out(v) = 2v + 1 joined by a unit edge.
// Original arcs are unbounded so every minimum cut is a set of split edges.
class SplitGraph {
 public:
  explicit SplitGraph(const Digraph& d) : net_(2 * d.order()) {
    for (Vertex v = 0; v < d.order(); ++v) net_.add_edge(in(v), out(v), 1);
    for (const Arc& a : d.arcs()) net_.add_edge(out(a.tail), in(a.head), FlowNetwork::kUnbounded);
    order_ = d.order();
  }

  static int in(Vertex v) { return 2 * v; }
  static int out(Vertex v) { return 2 * v + 1; }

  int flow(Vertex s, Vertex t, int limit) {
    net_.reset_flow();
    return net_.max_flow(out(s), in(t), limit);
  }

  // Valid right after flow(s, t, .) returned less than its limit.
  VertexSet separator(Vertex s) const {
    const auto reach = net_.residual_reachable(out(s));
    VertexSet cut;
    for (Vertex v = 0; v < order_; ++v)
      if (reach[in(v)] && !reach[out(v)]) cut.push_back(v);
    return cut;
  }

 private:
  FlowNetwork net_;
  int order_ = 0;
};

}  // namespace

int local_connectivity(const Digraph& d, Vertex s, Vertex t, int limit) {
  if (s == t) throw Error(ErrorCode::kInvalidArgument, "local_connectivity needs s != t");
  int direct = 0;
  if (d.has_arc(s, t)) {
    direct = 1;
    if (limit <= 1) return limit;
  }
  Digraph without = d;
  if (direct) {
    const Arc a{s, t};
    without = d.without_arcs(std::span<const Arc>(&a, 1));
  }
  SplitGraph g(without);
  return direct + g.flow(s, t, limit - direct);
}

KConnectivityResult check_strongly_k_connected(const Digraph& d, int k,
                                               const KConnectivityOptions& options) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  KConnectivityResult result;
  const int n = d.order();
  if (n < k + 1) {
    result.too_few_vertices = true;
    return result;
  }
  if (k == 1) {
    result.connected = is_strongly_connected(d);
    if (!result.connected) result.separator = VertexSet{};
    return result;
  }
  // Cheap necessary condition; its witness is the neighbourhood itself.
  for (Vertex v = 0; v < n; ++v) {
    if (d.out_degree(v) < k) {
      result.separator = VertexSet(d.out_neighbors(v).begin(), d.out_neighbors(v).end());
      return result;
    }
    if (d.in_degree(v) < k) {
      result.separator = VertexSet(d.in_neighbors(v).begin(), d.in_neighbors(v).end());
      return result;
    }
  }

  std::vector<std::pair<Vertex, Vertex>> pairs;
  if (options.family == PairFamily::kAllPairs) {
    for (Vertex u = 0; u < n; ++u)
      for (Vertex w = 0; w < n; ++w)
        if (u != w && !d.has_arc(u, w)) pairs.push_back({u, w});
  } else {
    for (Vertex r = 0; r < k; ++r)
      for (Vertex w = 0; w < n; ++w) {
        if (w == r) continue;
        if (!d.has_arc(r, w)) pairs.push_back({r, w});
        if (!d.has_arc(w, r)) pairs.push_back({w, r});
      }
  }
  if (options.sample_pairs && *options.sample_pairs < static_cast<std::int64_t>(pairs.size())) {
    std::mt19937_64 rng(options.sample_seed);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    pairs.resize(static_cast<std::size_t>(*options.sample_pairs));
    result.probabilistic = true;
  }

  SplitGraph g(d);
  for (const auto& [s, t] : pairs) {
    ++result.flows_run;
    if (g.flow(s, t, k) < k) {
      result.separator = g.separator(s);
      return result;
    }
  }
  result.connected = true;
  return result;
}

}  // namespace kspan
