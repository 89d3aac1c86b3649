#include "kspan/good_ordering.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "kspan/error.hpp"

namespace kspan {

int min_total_degree(const Digraph& d) {
  int best = d.order() > 0 ? d.order() * 2 : 0;
  for (Vertex v = 0; v < d.order(); ++v) best = std::min(best, d.out_degree(v) + d.in_degree(v));
  return best;
}

std::int64_t forward_arc_count(const Digraph& d, const Ordering& order) {
  std::int64_t count = 0;
  for (Vertex u = 0; u < d.order(); ++u)
    for (Vertex w : d.out_neighbors(u))
      if (order.position(u) < order.position(w)) ++count;
  return count;
}

namespace {

void check_oriented(const Digraph& d, int s) {
  if (s < 0) throw Error(ErrorCode::kInvalidArgument, "defect s must be nonnegative");
  for (Vertex u = 0; u < d.order(); ++u)
    for (Vertex w : d.out_neighbors(u))
      if (d.has_arc(w, u)) throw Error(ErrorCode::kInvalidArgument, "digraph has a 2-cycle");
  const int n = d.order();
  if (n > 0 && min_total_degree(d) < n - 1 - s) {
    std::ostringstream msg;
    msg << "minimum degree " << min_total_degree(d) << " is below n-1-s = " << n - 1 - s;
    throw Error(ErrorCode::kDegreeTooLow, msg.str());
  }
}

// Per-position prefix counts: out_[p][q] is the number of out-neighbours of
// the vertex at position p among positions < q; in_ likewise.
class WindowTables {
 public:
  WindowTables(const Digraph& d, std::vector<Vertex> perm)
      : n_(d.order()), stride_(n_ + 1), adj_(static_cast<std::size_t>(n_) * n_, 0), perm_(std::move(perm)),
        out_(static_cast<std::size_t>(n_) * stride_, 0), in_(static_cast<std::size_t>(n_) * stride_, 0) {
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex w : d.out_neighbors(u)) adj_[index(u, w)] = 1;
    for (int p = 0; p < n_; ++p) rebuild_row(p, 0, n_);
  }

  const std::vector<Vertex>& perm() const { return perm_; }

  // Out-neighbours of v_i among positions (i, j].
  int q1_count(int i, int j) const { return out_at(i, j + 1) - out_at(i, i + 1); }
  // In-neighbours of v_j among positions [i, j).
  int q2_count(int i, int j) const { return in_at(j, j) - in_at(j, i); }

  // Positions [i, j] are rotated left (v_i moves after v_j) or right (v_j
  // moves before v_i).
  void rotate(int i, int j, bool left) {
    auto first = perm_.begin() + i;
    auto last = perm_.begin() + j + 1;
    if (left) {
      std::rotate(first, first + 1, last);
    } else {
      std::rotate(first, last - 1, last);
    }
    for (int p = 0; p < n_; ++p) {
      if (p >= i && p <= j) {
        rebuild_row(p, 0, n_);
      } else {
        rebuild_row(p, i + 1, j + 1);
      }
    }
  }

 private:
  std::size_t index(Vertex u, Vertex w) const { return static_cast<std::size_t>(u) * n_ + w; }
  int out_at(int p, int q) const { return out_[static_cast<std::size_t>(p) * stride_ + q]; }
  int in_at(int p, int q) const { return in_[static_cast<std::size_t>(p) * stride_ + q]; }

  // Recomputes columns [from, to] of row p, assuming column from-1 is valid.
  void rebuild_row(int p, int from, int to) {
    const Vertex u = perm_[p];
    std::int32_t* out_row = out_.data() + static_cast<std::size_t>(p) * stride_;
    std::int32_t* in_row = in_.data() + static_cast<std::size_t>(p) * stride_;
    if (from == 0) {
      out_row[0] = 0;
      in_row[0] = 0;
      from = 1;
    }
    const std::uint8_t* u_row = adj_.data() + static_cast<std::size_t>(u) * n_;
    for (int q = from; q <= to; ++q) {
      const Vertex w = perm_[q - 1];
      out_row[q] = out_row[q - 1] + u_row[w];
      in_row[q] = in_row[q - 1] + adj_[index(w, u)];
    }
  }

  int n_;
  int stride_;
  std::vector<std::uint8_t> adj_;
  std::vector<Vertex> perm_;
  std::vector<std::int32_t> out_;
  std::vector<std::int32_t> in_;
};

struct Violation {
  int i = 0;
  int j = 0;
  bool q1 = false;  // otherwise Q2
};

std::optional<Violation> check_pair(const WindowTables& w, int i, int j, int s) {
  const int need = j - i - s;
  if (need <= 0) return std::nullopt;
  if (2 * w.q1_count(i, j) < need) return Violation{i, j, true};
  if (2 * w.q2_count(i, j) < need) return Violation{i, j, false};
  return std::nullopt;
}

}  // namespace

QOrdering q_ordering(const Digraph& d, int s) {
  check_oriented(d, s);
  const int n = d.order();
  std::vector<Vertex> start(static_cast<std::size_t>(n));
  std::iota(start.begin(), start.end(), 0);
  std::stable_sort(start.begin(), start.end(),
                   [&](Vertex a, Vertex b) { return d.out_degree(a) - d.in_degree(a) > d.out_degree(b) - d.in_degree(b); });

  WindowTables tables(d, start);
  QOrdering result;
  result.s = s;
  std::int64_t forward = forward_arc_count(d, Ordering(start));
  result.forward_history.push_back(forward);

  std::vector<char> row_valid(static_cast<std::size_t>(n), 0);
  std::optional<std::pair<int, int>> moved;
  const std::int64_t max_rounds = static_cast<std::int64_t>(n) * (n - 1) / 2 + 1;

  while (true) {
    std::optional<Violation> found;
    if (moved) {
      const auto [lo, hi] = *moved;
      for (int r = 0; r < lo && !found; ++r)
        for (int c = lo; c <= hi && !found; ++c) found = check_pair(tables, r, c, s);
    }
    for (int r = 0; r < n && !found; ++r) {
      if (row_valid[r]) continue;
      for (int c = r + 1; c < n && !found; ++c) found = check_pair(tables, r, c, s);
      if (!found) row_valid[r] = 1;
    }
    if (!found) break;

    const Violation v = *found;
    // Gain = arcs that turn forward minus arcs that turn backward.
    int gain = 0;
    if (v.q1) {
      const int out = tables.q1_count(v.i, v.j);
      const Vertex moving = tables.perm()[v.i];
      int in = 0;
      for (int p = v.i + 1; p <= v.j; ++p) in += d.has_arc(tables.perm()[p], moving) ? 1 : 0;
      gain = in - out;
    } else {
      const int in = tables.q2_count(v.i, v.j);
      const Vertex moving = tables.perm()[v.j];
      int out = 0;
      for (int p = v.i; p < v.j; ++p) out += d.has_arc(moving, tables.perm()[p]) ? 1 : 0;
      gain = out - in;
    }
    if (gain <= 0) throw Error(ErrorCode::kInternalInvariant, "q-ordering move did not gain a forward arc");
    tables.rotate(v.i, v.j, v.q1);
    for (int p = v.i; p <= v.j; ++p) row_valid[p] = 0;
    moved = std::make_pair(v.i, v.j);
    forward += gain;
    result.forward_history.push_back(forward);
    if (++result.rounds > max_rounds) throw Error(ErrorCode::kInternalInvariant, "q-ordering exceeded round bound");
  }
  result.order = Ordering(tables.perm());
  return result;
}

std::optional<std::string> audit_q_ordering(const Digraph& d, const Ordering& order, int s) {
  const int n = d.order();
  if (order.size() != n) return "ordering size differs from digraph order";
  for (int i = 1; i <= n; ++i) {
    const Vertex vi = order.at(i);
    int out = 0;
    for (int j = i + 1; j <= n; ++j) {
      if (d.has_arc(vi, order.at(j))) ++out;
      if (2 * out < j - i - s) {
        std::ostringstream msg;
        msg << "Q1 fails at positions (" << i << ", " << j << ")";
        return msg.str();
      }
    }
  }
  for (int j = n; j >= 1; --j) {
    const Vertex vj = order.at(j);
    int in = 0;
    for (int i = j - 1; i >= 1; --i) {
      if (d.has_arc(order.at(i), vj)) ++in;
      if (2 * in < j - i - s) {
        std::ostringstream msg;
        msg << "Q2 fails at positions (" << i << ", " << j << ")";
        return msg.str();
      }
    }
  }
  return std::nullopt;
}

BipartiteGraph forward_bipartite(const Digraph& d, const Ordering& order) {
  const int n = d.order();
  BipartiteGraph h(n, n);
  for (int i = 1; i <= n; ++i) {
    auto& row = h.adjacency[static_cast<std::size_t>(i - 1)];
    for (Vertex w : d.out_neighbors(order.at(i))) {
      const int j = order.position(w);
      if (j > i) row.push_back(j - 1);
    }
    std::sort(row.begin(), row.end());
  }
  return h;
}

std::vector<MatchingEdges> extract_matchings(const BipartiteGraph& h0, int k, int s) {
  if (k < 0 || s < 0) throw Error(ErrorCode::kInvalidArgument, "k and s must be nonnegative");
  const int n = h0.left;
  BipartiteGraph h = h0;
  std::vector<MatchingEdges> result;
  for (int level = 0; level < k; ++level) {
    const int target = std::max(n - s - 2 * level - 1, 0);
    MatchingEdges m = maximum_matching(h);
    if (static_cast<int>(m.size()) < target) {
      std::ostringstream msg;
      msg << "matching " << level << " has size " << m.size() << " < " << target;
      throw Error(ErrorCode::kMatchingDeficit, msg.str());
    }
    m.resize(static_cast<std::size_t>(target));
    for (const auto& [a, b] : m) h.remove_edge(a, b);
    result.push_back(std::move(m));
  }
  return result;
}

GoodDigraph good_subgraph(const Digraph& d, int k, int s) {
  if (k < 1 || s < 0) throw Error(ErrorCode::kInvalidArgument, "good_subgraph needs k >= 1 and s >= 0");
  const int n = d.order();
  GoodDigraph g;
  g.k = k;
  g.s = s;
  g.t = 2 * k + s - 1;
  if (n < 2 * k + s) {
    g.graph = Digraph(n);
    g.order = Ordering::identity(n);
    return g;
  }

  const QOrdering q = q_ordering(d, s);
  g.order = q.order;
  const auto matchings = extract_matchings(forward_bipartite(d, g.order), k, s);

  Digraph result(n);
  for (const auto& m : matchings)
    for (const auto& [i, j] : m) result.add_arc(g.order.at(i + 1), g.order.at(j + 1));
  g.matched_arcs = result.size();
  const std::int64_t expected_d1 = static_cast<std::int64_t>(k) * n - static_cast<std::int64_t>(k) * k -
                                   static_cast<std::int64_t>(s) * k;
  if (static_cast<std::int64_t>(g.matched_arcs) != expected_d1)
    throw Error(ErrorCode::kInternalInvariant, "matched arc count differs from kn - k^2 - sk");

  const Digraph d1 = result;
  std::vector<Vertex> candidates;
  auto by_position = [&](Vertex a, Vertex b) { return g.order.position(a) < g.order.position(b); };

  for (int p = 2 * k + s; p <= n; ++p) {
    const Vertex u = g.order.at(p);
    const int need = k - d1.in_degree(u);
    if (need <= 0) continue;
    candidates.clear();
    for (Vertex w : d.in_neighbors(u))
      if (g.order.position(w) < p && !d1.has_arc(w, u)) candidates.push_back(w);
    if (static_cast<int>(candidates.size()) < need)
      throw Error(ErrorCode::kInternalInvariant, "too few forward in-arcs to augment");
    std::partial_sort(candidates.begin(), candidates.begin() + need, candidates.end(), by_position);
    for (int c = 0; c < need; ++c) result.add_arc(candidates[c], u);
  }
  for (int p = 1; p <= n - 2 * k - s + 1; ++p) {
    const Vertex u = g.order.at(p);
    const int need = k - d1.out_degree(u);
    if (need <= 0) continue;
    candidates.clear();
    for (Vertex w : d.out_neighbors(u))
      if (g.order.position(w) > p && !d1.has_arc(u, w)) candidates.push_back(w);
    if (static_cast<int>(candidates.size()) < need)
      throw Error(ErrorCode::kInternalInvariant, "too few forward out-arcs to augment");
    std::partial_sort(candidates.begin(), candidates.begin() + need, candidates.end(), by_position);
    for (int c = 0; c < need; ++c) result.add_arc(u, candidates[c]);
  }

  const std::int64_t bound = static_cast<std::int64_t>(k) * n - k + static_cast<std::int64_t>(s) * k;
  if (static_cast<std::int64_t>(result.size()) > bound)
    throw Error(ErrorCode::kInternalInvariant, "good subgraph exceeds kn - k + sk arcs");
  g.graph = std::move(result);
  if (auto problem = audit_good(g.graph, g.order, k, g.t))
    throw Error(ErrorCode::kInternalInvariant, "good subgraph audit failed: " + *problem);
  return g;
}

std::optional<std::string> audit_good(const Digraph& graph, const Ordering& order, int k, int t) {
  const int n = graph.order();
  if (order.size() != n) return "ordering size differs from digraph order";
  for (const Arc& a : graph.arcs())
    if (order.position(a.tail) >= order.position(a.head)) {
      std::ostringstream msg;
      msg << "arc " << a.tail << "->" << a.head << " is not forward";
      return msg.str();
    }
  for (int p = 1; p <= n - t; ++p)
    if (graph.out_degree(order.at(p)) < k) {
      std::ostringstream msg;
      msg << "vertex at position " << p << " has out-degree " << graph.out_degree(order.at(p));
      return msg.str();
    }
  for (int p = t + 1; p <= n; ++p)
    if (graph.in_degree(order.at(p)) < k) {
      std::ostringstream msg;
      msg << "vertex at position " << p << " has in-degree " << graph.in_degree(order.at(p));
      return msg.str();
    }
  return std::nullopt;
}

Path tail_path(const GoodDigraph& g, std::span<const Vertex> blocked, Vertex v, TailDirection direction) {
  const int n = g.graph.order();
  if (v < 0 || v >= n) throw Error(ErrorCode::kInvalidArgument, "vertex out of range");
  std::vector<char> is_blocked(static_cast<std::size_t>(n), 0);
  for (Vertex b : blocked) {
    if (b < 0 || b >= n) throw Error(ErrorCode::kInvalidArgument, "blocked vertex out of range");
    is_blocked[b] = 1;
  }
  if (is_blocked[v]) throw Error(ErrorCode::kInvalidArgument, "start vertex is blocked");

  const bool forward = direction == TailDirection::kToEnd;
  auto arrived = [&](Vertex u) {
    return forward ? g.order.position(u) > n - g.t : g.order.position(u) <= g.t;
  };
  Path p{{v}};
  Vertex current = v;
  while (!arrived(current)) {
    const auto next = forward ? g.graph.out_neighbors(current) : g.graph.in_neighbors(current);
    Vertex best = -1;
    for (Vertex w : next) {
      if (is_blocked[w]) continue;
      if (best == -1 || (forward ? g.order.position(w) > g.order.position(best)
                                 : g.order.position(w) < g.order.position(best)))
        best = w;
    }
    if (best == -1) throw Error(ErrorCode::kStuck, "no unblocked neighbour to continue the tail path");
    p.vertices.push_back(best);
    current = best;
  }
  if (!forward) std::reverse(p.vertices.begin(), p.vertices.end());
  return p;
}

}  // namespace kspan
