#include "kspan/dominating_chain.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "kspan/error.hpp"

namespace kspan {

namespace {

constexpr double kSlack = 1e-9;

}  // namespace

DominatingChain in_dominating_chain(const Tournament& t, Vertex v) {
  if (v < 0 || v >= t.order()) throw Error(ErrorCode::kInvalidArgument, "chain root out of range");
  DominatingChain c;
  c.kind = ChainKind::kIn;
  c.root = v;
  c.vertices.push_back(v);
  VertexSet level = t.out_neighbors(v);
  c.d = static_cast<int>(level.size());
  c.levels.push_back(c.d);
  while (!level.empty()) {
    Vertex next = level.front();
    if (level.size() > 1) {
      const InducedTournament sub = induced(t, level);
      next = sub.to_parent[balanced_vertex(sub.tournament, Direction::kOut)];
    }
    c.vertices.push_back(next);
    VertexSet narrowed;
    for (Vertex u : level)
      if (t.beats(next, u)) narrowed.push_back(u);
    level = std::move(narrowed);
    c.levels.push_back(static_cast<int>(level.size()));
  }
  return c;
}

DominatingChain out_dominating_chain(const Tournament& t, Vertex v) {
  DominatingChain c = in_dominating_chain(reverse(t), v);
  c.kind = ChainKind::kOut;
  std::reverse(c.vertices.begin(), c.vertices.end());
  return c;
}

std::optional<std::string> audit_chain(const Tournament& t, const DominatingChain& c, int k) {
  std::ostringstream msg;
  const int s = c.size();
  if (s == 0) return "empty chain";
  const bool in_kind = c.kind == ChainKind::kIn;
  if ((in_kind ? c.source() : c.sink()) != c.root) return "root is not at the expected end";
  if (c.d != (in_kind ? t.out_degree(c.root) : t.in_degree(c.root))) return "degree witness mismatch";

  const double lg = std::log2(c.d + 1.0);
  if (s + kSlack < 0.5 * lg + 1 || s > 2.5 * lg + 2 + kSlack) {
    msg << "size " << s << " outside [" << 0.5 * lg + 1 << ", " << 2.5 * lg + 2 << "]";
    return msg.str();
  }
  if (!is_transitive_order(t, c.vertices)) return "chain is not transitive in the given order";

  std::vector<char> in_chain(static_cast<std::size_t>(t.order()), 0);
  for (Vertex u : c.vertices) {
    if (in_chain[u]) return "chain repeats a vertex";
    in_chain[u] = 1;
  }
  for (Vertex u = 0; u < t.order(); ++u) {
    if (in_chain[u]) continue;
    const bool dominated = std::any_of(c.vertices.begin(), c.vertices.end(), [&](Vertex w) {
      return in_kind ? t.beats(u, w) : t.beats(w, u);
    });
    if (!dominated) {
      msg << "vertex " << u << " is not dominated";
      return msg.str();
    }
  }

  if (static_cast<int>(c.levels.size()) != s || c.levels.back() != 0) return "level record malformed";
  if (c.levels.front() != c.d) return "first level differs from d";
  if (c.d >= 1) {
    if (c.levels[static_cast<std::size_t>(s - 2)] != 1) return "second to last level is not a singleton";
    for (int i = 0; i + 2 < s; ++i) {
      const int cur = c.levels[i];
      const int next = c.levels[i + 1];
      if (4 * next < cur || 4 * next > 3 * cur) {
        msg << "level contraction fails at " << i + 1;
        return msg.str();
      }
    }
  }

  // Window degree bounds, indexed in the in-chain orientation.
  auto outside = [&](Vertex u, bool out) {
    int count = 0;
    const VertexSet nbrs = out ? t.out_neighbors(u) : t.in_neighbors(u);
    for (Vertex w : nbrs) count += in_chain[w] ? 0 : 1;
    return count;
  };
  auto vertex_at = [&](int i) { return in_kind ? c.vertices[i - 1] : c.vertices[s - i]; };
  const double seventh = 8.0 * std::pow(static_cast<double>(c.d), 1.0 / 7.0) - 1.0;
  for (int i = 1; i <= s && i <= s / 5.0 - 13 + kSlack; ++i) {
    const Vertex u = vertex_at(i);
    if (outside(u, true) + kSlack < seventh || outside(u, false) + kSlack < seventh) {
      msg << "window degree bound 8d^(1/7)-1 fails at chain index " << i;
      return msg.str();
    }
  }
  if (k >= 1) {
    const double limit = s - 5.0 * std::log2(static_cast<double>(k)) - 30;
    const int big = 1000 * k * k;
    for (int i = 1; i <= s && i <= limit + kSlack; ++i) {
      const Vertex u = vertex_at(i);
      if (outside(u, true) < big || outside(u, false) < big) {
        msg << "window degree bound 1000k^2 fails at chain index " << i;
        return msg.str();
      }
    }
  }
  return std::nullopt;
}

ChainWindows chain_windows(const DominatingChain& c, int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be positive");
  const int s = c.size();
  const int last = s > 65 ? (s - 65 + 4) / 5 : 0;
  const int first = std::min(static_cast<int>(std::ceil(5.0 * std::log2(static_cast<double>(k)) + 30 - kSlack)), s);
  ChainWindows w;
  w.last.assign(c.vertices.end() - last, c.vertices.end());
  w.first.assign(c.vertices.begin(), c.vertices.begin() + first);
  return w;
}

}  // namespace kspan
