#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <random>
#include <set>

namespace kspan::oracle {

std::vector<std::vector<bool>> reachability(const Digraph& d, const std::vector<bool>& removed) {
  const int n = d.order();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (int u = 0; u < n; ++u) {
    if (removed[u]) continue;
    reach[u][u] = true;
    for (int v = 0; v < n; ++v)
      if (!removed[v] && d.has_arc(u, v)) reach[u][v] = true;
  }
  for (int m = 0; m < n; ++m) {
    if (removed[m]) continue;
    for (int u = 0; u < n; ++u)
      if (reach[u][m])
        for (int v = 0; v < n; ++v)
          if (reach[m][v]) reach[u][v] = true;
  }
  return reach;
}

bool strongly_connected_without(const Digraph& d, const std::vector<bool>& removed) {
  const auto reach = reachability(d, removed);
  const int n = d.order();
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (!removed[u] && !removed[v] && !reach[u][v]) return false;
  return true;
}

bool k_connected_exhaustive(const Digraph& d, int k) {
  const int n = d.order();
  if (n < k + 1) return false;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) > k - 1) continue;
    std::vector<bool> removed(n);
    for (int v = 0; v < n; ++v) removed[v] = (mask >> v) & 1u;
    if (!strongly_connected_without(d, removed)) return false;
  }
  return true;
}

int kuhn_matching_size(const BipartiteGraph& g) {
  std::vector<int> match_right(g.right, -1);
  std::vector<char> seen;
  std::function<bool(int)> augment = [&](int a) {
    for (int b : g.adjacency[a]) {
      if (seen[b]) continue;
      seen[b] = 1;
      if (match_right[b] == -1 || augment(match_right[b])) {
        match_right[b] = a;
        return true;
      }
    }
    return false;
  };
  int size = 0;
  for (int a = 0; a < g.left; ++a) {
    seen.assign(g.right, 0);
    if (augment(a)) ++size;
  }
  return size;
}

namespace {

void simple_paths(const Digraph& d, Vertex at, const std::vector<bool>& is_sink, std::vector<bool>& on,
                  std::vector<Vertex>& path, std::vector<std::vector<Vertex>>& out) {
  if (is_sink[at]) out.push_back(path);
  for (Vertex w : d.out_neighbors(at)) {
    if (on[w]) continue;
    on[w] = true;
    path.push_back(w);
    simple_paths(d, w, is_sink, on, path, out);
    path.pop_back();
    on[w] = false;
  }
}

}  // namespace

std::optional<std::size_t> min_disjoint_total_exhaustive(const Digraph& d, const VertexSet& sources,
                                                         const VertexSet& sinks, int k) {
  const int n = d.order();
  std::vector<bool> is_sink(n, false);
  for (Vertex t : sinks) is_sink[t] = true;
  std::vector<std::vector<Vertex>> all;
  for (Vertex s : sources) {
    std::vector<bool> on(n, false);
    on[s] = true;
    std::vector<Vertex> path{s};
    simple_paths(d, s, is_sink, on, path, all);
  }
  std::optional<std::size_t> best;
  if (k == 1) {
    for (const auto& p : all)
      if (!best || p.size() - 1 < *best) best = p.size() - 1;
    return best;
  }
  for (std::size_t a = 0; a < all.size(); ++a) {
    std::set<Vertex> used(all[a].begin(), all[a].end());
    for (std::size_t b = a + 1; b < all.size(); ++b) {
      if (best && all[a].size() + all[b].size() - 2 >= *best) continue;
      bool clash = false;
      for (Vertex v : all[b])
        if (used.count(v)) {
          clash = true;
          break;
        }
      if (!clash) best = all[a].size() + all[b].size() - 2;
    }
  }
  return best;
}

bool q_windows_hold(const Digraph& d, const Ordering& order, int s) {
  const int n = order.size();
  for (int i = 1; i <= n; ++i) {
    int out_i = 0;
    for (int j = i + 1; j <= n; ++j) {
      out_i += d.has_arc(order.at(i), order.at(j)) ? 1 : 0;
      if (2 * out_i < j - i - s) return false;
    }
  }
  for (int j = 1; j <= n; ++j) {
    int in_j = 0;
    for (int i = j - 1; i >= 1; --i) {
      in_j += d.has_arc(order.at(i), order.at(j)) ? 1 : 0;
      if (2 * in_j < j - i - s) return false;
    }
  }
  return true;
}

Tournament tournament_from_mask(int n, std::uint64_t mask) {
  Tournament t(n);
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if (!((mask >> bit) & 1u)) t.orient(j, i);
  return t;
}

Digraph random_digraph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  Digraph d(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && coin(rng)) d.add_arc(u, v);
  return d;
}

bool internally_disjoint(const std::vector<Path>& paths) {
  std::multiset<Vertex> inner;
  for (const Path& p : paths)
    for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) inner.insert(p.vertices[i]);
  for (Vertex v : inner)
    if (inner.count(v) > 1) return false;
  for (const Path& p : paths)
    for (Vertex end : {p.front(), p.back()})
      if (inner.count(end)) return false;
  return true;
}

bool is_hamilton_cycle(const Tournament& t, const Digraph& cycle) {
  const int n = t.order();
  if (cycle.order() != n || static_cast<int>(cycle.size()) != n) return false;
  for (int v = 0; v < n; ++v)
    if (cycle.out_degree(v) != 1 || cycle.in_degree(v) != 1) return false;
  for (const Arc& a : cycle.arcs())
    if (!t.beats(a.tail, a.head)) return false;
  Vertex at = 0;
  for (int step = 1; step < n; ++step) {
    at = cycle.out_neighbors(at)[0];
    if (at == 0) return false;
  }
  return cycle.out_neighbors(at)[0] == 0;
}

}  // namespace kspan::oracle
