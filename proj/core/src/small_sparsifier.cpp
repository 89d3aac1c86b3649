#include "kspan/small_sparsifier.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "kspan/connectivity.hpp"
#include "kspan/error.hpp"
#include "kspan/good_ordering.hpp"
#include "kspan/linkage.hpp"
#include "kspan/matching.hpp"

namespace kspan {

namespace {

struct PairCertificate {
  std::vector<Path> paths;
  VertexSet free_x;  // X_ij minus the matched vertices
  VertexSet free_y;  // Y_ij minus the matched vertices
};

PairCertificate certify_pair(const Tournament& t, Vertex x, Vertex y) {
  PairCertificate cert;
  if (t.beats(x, y)) cert.paths.push_back(Path{{x, y}});
  VertexSet xs;
  VertexSet ys;
  for (Vertex w = 0; w < t.order(); ++w) {
    if (w == x || w == y) continue;
    const bool from_x = t.beats(x, w);
    const bool to_y = t.beats(w, y);
    if (from_x && to_y) {
      cert.paths.push_back(Path{{x, w, y}});
    } else if (from_x) {
      xs.push_back(w);
    } else if (to_y) {
      ys.push_back(w);
    }
  }
  BipartiteGraph h(static_cast<int>(xs.size()), static_cast<int>(ys.size()));
  for (std::size_t a = 0; a < xs.size(); ++a)
    for (std::size_t b = 0; b < ys.size(); ++b)
      if (t.beats(xs[a], ys[b])) h.adjacency[a].push_back(static_cast<int>(b));
  const MatchingEdges m = maximum_matching(h);
  std::vector<char> used_x(xs.size(), 0);
  std::vector<char> used_y(ys.size(), 0);
  for (const auto& [a, b] : m) {
    cert.paths.push_back(Path{{x, xs[a], ys[b], y}});
    used_x[a] = 1;
    used_y[b] = 1;
  }
  for (std::size_t a = 0; a < xs.size(); ++a)
    if (!used_x[a]) cert.free_x.push_back(xs[a]);
  for (std::size_t b = 0; b < ys.size(); ++b)
    if (!used_y[b]) cert.free_y.push_back(ys[b]);
  return cert;
}

}  // namespace

LinkagePair linkage_pair(const Tournament& t, int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be positive");
  const int n = t.order();
  if (n < 5 * k) throw Error(ErrorCode::kTooSmall, "linkage pair needs at least 5k vertices");

  LinkagePair lp;
  lp.x = top_degree_set(t, Direction::kOut, Extreme::kLargest, k);
  for (Vertex v : top_degree_set(t, Direction::kIn, Extreme::kLargest, n)) {
    if (static_cast<int>(lp.y.size()) == k) break;
    if (std::find(lp.x.begin(), lp.x.end(), v) == lp.x.end()) lp.y.push_back(v);
  }

  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      PairCertificate cert = certify_pair(t, lp.x[i], lp.y[j]);
      if (static_cast<int>(cert.paths.size()) >= k) {
        cert.paths.resize(static_cast<std::size_t>(k));
        lp.certificates.push_back(std::move(cert.paths));
        continue;
      }
      // Every unmatched y' beats every unmatched x', giving a complete
      // bipartite digraph from the free Y side to the free X side.
      if (static_cast<int>(cert.free_x.size()) < k || static_cast<int>(cert.free_y.size()) < k)
        throw Error(ErrorCode::kInternalInvariant, "failing pair leaves fewer than k free vertices");
      LinkagePair bip;
      bip.branch = 2;
      bip.x.assign(cert.free_y.begin(), cert.free_y.begin() + k);
      bip.y.assign(cert.free_x.begin(), cert.free_x.begin() + k);
      for (Vertex a : bip.x)
        for (Vertex b : bip.y) {
          if (!t.beats(a, b)) throw Error(ErrorCode::kInternalInvariant, "free sides are not completely joined");
          bip.certificates.push_back({Path{{a, b}}});
        }
      return bip;
    }
  }
  return lp;
}

std::optional<std::string> validate_linkage_pair(const Tournament& t, const LinkagePair& lp, int k) {
  std::ostringstream msg;
  if (static_cast<int>(lp.x.size()) != k || static_cast<int>(lp.y.size()) != k) return "X or Y does not have k vertices";
  VertexSet all = lp.x;
  all.insert(all.end(), lp.y.begin(), lp.y.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) return "X and Y are not disjoint sets";
  if (static_cast<int>(lp.certificates.size()) != k * k) return "certificate table has the wrong size";

  const Digraph d = t.to_digraph();
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const Vertex x = lp.x[i];
      const Vertex y = lp.y[j];
      const auto& paths = lp.certificates[static_cast<std::size_t>(i * k + j)];
      std::vector<char> seen(static_cast<std::size_t>(t.order()), 0);
      bool direct = false;
      for (const Path& p : paths) {
        if (!is_path_in(d, p) || p.front() != x || p.back() != y) {
          msg << "invalid certificate path for pair (" << x << ", " << y << ")";
          return msg.str();
        }
        if (p.length() == 1) direct = true;
        for (Vertex w : p.interior()) {
          if (seen[w]) {
            msg << "certificate paths for (" << x << ", " << y << ") share vertex " << w;
            return msg.str();
          }
          seen[w] = 1;
        }
      }
      const int needed = lp.branch == 2 ? 1 : k;
      if (static_cast<int>(paths.size()) < needed || (lp.branch == 2 && !direct)) {
        msg << "pair (" << x << ", " << y << ") has too few certificate paths";
        return msg.str();
      }
      if (!direct && local_connectivity(d, x, y, k) < k) {
        msg << "flow recount for pair (" << x << ", " << y << ") is below k";
        return msg.str();
      }
    }
  }
  return std::nullopt;
}

Digraph sparsify_small(const Tournament& t, int k, bool validate) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be positive");
  const int n = t.order();
  const Digraph whole = t.to_digraph();
  if (validate) {
    const KConnectivityResult check = check_strongly_k_connected(whole, k);
    if (!check.connected) throw Error(ErrorCode::kNotKConnected, "input tournament is not strongly k-connected");
  }
  if (n < 5 * k) return whole;

  VertexSet core(static_cast<std::size_t>(5 * k));
  std::iota(core.begin(), core.end(), 0);
  const InducedTournament sub = induced(t, core);
  const LinkagePair local = linkage_pair(sub.tournament, k);
  VertexSet xs;
  VertexSet ys;
  for (Vertex v : local.x) xs.push_back(sub.to_parent[v]);
  for (Vertex v : local.y) ys.push_back(sub.to_parent[v]);

  Digraph result(n);
  for (Vertex u : core)
    for (Vertex v : core)
      if (t.beats(u, v)) result.add_arc(u, v);
  const GoodDigraph good = good_subgraph(whole, k, 0);
  result.add_arcs(good.graph.arcs());

  auto add_fan = [&](const Fan& fan) {
    for (const Path& p : fan.paths) result.add_arcs(p.arcs());
  };
  for (int p = n - 2 * k + 2; p <= n; ++p) add_fan(k_fan(whole, good.order.at(p), xs, k, FanDirection::kFromCenter));
  for (int p = 1; p <= 2 * k - 1; ++p) add_fan(k_fan(whole, good.order.at(p), ys, k, FanDirection::kToCenter));

  const std::size_t bound = static_cast<std::size_t>(5 * k - 2) * n + static_cast<std::size_t>(5 * k) * (5 * k - 1) / 2;
  if (result.size() > bound) throw Error(ErrorCode::kInternalInvariant, "small sparsifier exceeds its arc bound");
  return result;
}

VertexSet hamilton_cycle_order(const Tournament& t) {
  const int n = t.order();
  if (n < 3 || !is_strongly_connected(t.to_digraph()))
    throw Error(ErrorCode::kNotStronglyConnected, "tournament is not strongly connected");

  VertexSet cycle;
  for (Vertex a = 1; a < n && cycle.empty(); ++a) {
    if (!t.beats(0, a)) continue;
    for (Vertex b = 1; b < n; ++b)
      if (t.beats(b, 0) && t.beats(a, b)) {
        cycle = {0, a, b};
        break;
      }
  }
  if (cycle.empty()) throw Error(ErrorCode::kNotStronglyConnected, "no cycle through vertex 0");

  // beats_cycle[w]: cycle vertices w beats; beaten_by_cycle[w]: the rest.
  std::vector<char> on(static_cast<std::size_t>(n), 0);
  std::vector<int> beats_cycle(static_cast<std::size_t>(n), 0);
  std::vector<int> beaten_by_cycle(static_cast<std::size_t>(n), 0);
  auto absorb = [&](Vertex c) {
    on[c] = 1;
    for (Vertex w = 0; w < n; ++w) {
      if (on[w]) continue;
      if (t.beats(w, c)) {
        ++beats_cycle[w];
      } else {
        ++beaten_by_cycle[w];
      }
    }
  };
  for (Vertex c : cycle) absorb(c);

  while (static_cast<int>(cycle.size()) < n) {
    const int m = static_cast<int>(cycle.size());
    Vertex mixed = -1;
    for (Vertex w = 0; w < n && mixed == -1; ++w)
      if (!on[w] && beats_cycle[w] > 0 && beaten_by_cycle[w] > 0) mixed = w;
    if (mixed != -1) {
      for (int i = 0; i < m; ++i) {
        if (t.beats(cycle[i], mixed) && t.beats(mixed, cycle[(i + 1) % m])) {
          cycle.insert(cycle.begin() + i + 1, mixed);
          break;
        }
      }
      absorb(mixed);
      continue;
    }
    // Every outside vertex beats the whole cycle or loses to all of it; an
    // arc from the losing side to the beating side closes a longer cycle.
    Vertex a = -1;
    Vertex b = -1;
    for (Vertex u = 0; u < n && a == -1; ++u) {
      if (on[u] || beaten_by_cycle[u] != m) continue;
      for (Vertex w = 0; w < n; ++w)
        if (!on[w] && beats_cycle[w] == m && t.beats(u, w)) {
          a = u;
          b = w;
          break;
        }
    }
    if (a == -1) throw Error(ErrorCode::kNotStronglyConnected, "cycle cannot be extended");
    cycle.push_back(a);
    cycle.push_back(b);
    absorb(a);
    absorb(b);
  }
  return cycle;
}

Digraph hamilton_cycle(const Tournament& t) {
  const VertexSet order = hamilton_cycle_order(t);
  Digraph d(t.order());
  for (std::size_t i = 0; i < order.size(); ++i) d.add_arc(order[i], order[(i + 1) % order.size()]);
  return d;
}

}  // namespace kspan
