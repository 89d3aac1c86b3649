#include "kspan/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "kspan/error.hpp"
#include "kspan/good_ordering.hpp"

namespace kspan {

double log2_plus_one(int k) { return std::log2(static_cast<double>(k) + 1.0); }

namespace {

std::vector<char> make_mask(int n, const VertexSet& s) {
  std::vector<char> m(static_cast<std::size_t>(n), 0);
  for (Vertex v : s) m[v] = 1;
  return m;
}

VertexSet sorted_union(VertexSet a, const VertexSet& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

[[noreturn]] void invariant_failure(const std::string& what) { throw Error(ErrorCode::kInternalInvariant, what); }

void append_path_arcs(std::vector<Arc>& out, const Path& p) {
  const auto arcs = p.arcs();
  out.insert(out.end(), arcs.begin(), arcs.end());
}

void normalize(std::vector<Arc>& arcs) {
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
}

struct PartGood {
  std::vector<Arc> arcs;
  VertexSet first_window;
  VertexSet last_window;
};

// Good subgraph of T[part] - removed, lifted to global ids, with the
// first/last `window` positions of its ordering.
PartGood good_on_part(const Tournament& t, const VertexSet& part, int k, int s, const std::vector<Arc>& removed,
                      int window) {
  PartGood result;
  if (part.empty()) return result;
  const InducedTournament sub = induced(t, part);
  Digraph local = sub.tournament.to_digraph();
  if (!removed.empty()) {
    std::vector<int> local_id(static_cast<std::size_t>(t.order()), -1);
    for (std::size_t i = 0; i < part.size(); ++i) local_id[part[i]] = static_cast<int>(i);
    std::vector<Arc> drop;
    for (const Arc& a : removed)
      if (local_id[a.tail] >= 0 && local_id[a.head] >= 0) drop.push_back({local_id[a.tail], local_id[a.head]});
    local = local.without_arcs(drop);
  }
  const GoodDigraph g = good_subgraph(local, k, s);
  for (const Arc& a : g.graph.arcs()) result.arcs.push_back({part[a.tail], part[a.head]});
  const int m = static_cast<int>(part.size());
  for (Vertex v : g.order.window(1, window)) result.first_window.push_back(part[v]);
  for (Vertex v : g.order.window(m - window + 1, m)) result.last_window.push_back(part[v]);
  return result;
}

// Chooses `count` vertices of smallest degree in direction dir such that
// every excluded vertex has degree at least the largest chosen one. Ties at
// the threshold prefer vertices outside `avoid_soft`; vertices in
// `avoid_hard` are never chosen.
std::optional<VertexSet> smallest_with_ties(const std::vector<int>& degree, int count,
                                            const std::vector<char>& avoid_hard,
                                            const std::vector<char>& avoid_soft) {
  const int n = static_cast<int>(degree.size());
  std::vector<int> sorted = degree;
  std::sort(sorted.begin(), sorted.end());
  const int threshold = sorted[static_cast<std::size_t>(count - 1)];
  VertexSet chosen;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] < threshold) {
      if (avoid_hard[v]) return std::nullopt;
      chosen.push_back(v);
    }
  }
  for (int pass = 0; pass < 2; ++pass)
    for (Vertex v = 0; v < n && static_cast<int>(chosen.size()) < count; ++v) {
      if (degree[v] != threshold || avoid_hard[v]) continue;
      if ((pass == 0) == (avoid_soft[v] != 0)) continue;
      chosen.push_back(v);
    }
  if (static_cast<int>(chosen.size()) < count) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace

ExtremeSets build_extreme_sets(const Tournament& t, int k) {
  const int n = t.order();
  const int m = 3 * k - 1;
  if (k < 1 || n < 2 * m) throw Error(ErrorCode::kTooSmall, "too few vertices for two disjoint extreme sets");
  std::vector<int> out(static_cast<std::size_t>(n));
  std::vector<int> in(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    out[v] = t.out_degree(v);
    in[v] = t.in_degree(v);
  }
  // Vertices Y cannot do without: in-degree strictly below its threshold.
  std::vector<int> sorted_in = in;
  std::sort(sorted_in.begin(), sorted_in.end());
  const int in_threshold = sorted_in[static_cast<std::size_t>(m - 1)];
  std::vector<char> y_strict(static_cast<std::size_t>(n), 0);
  std::vector<char> y_any(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    y_strict[v] = in[v] < in_threshold;
    y_any[v] = in[v] <= in_threshold;
  }
  const auto x = smallest_with_ties(out, m, y_strict, y_any);
  if (!x) throw Error(ErrorCode::kTooSmall, "extreme out-degree set must overlap the in-degree set");
  const auto y = smallest_with_ties(in, m, make_mask(n, *x), std::vector<char>(static_cast<std::size_t>(n), 0));
  if (!y) throw Error(ErrorCode::kTooSmall, "extreme in-degree set cannot avoid the out-degree set");

  ExtremeSets e;
  e.x = *x;
  e.y = *y;
  for (Vertex v : e.x) e.delta_plus = std::max(e.delta_plus, out[v]);
  for (Vertex v : e.y) e.delta_minus = std::max(e.delta_minus, in[v]);
  return e;
}

Fan fan_to_ab(const Tournament& t, const Digraph& td, const FanContext& ctx, Vertex v) {
  const int n = t.order();
  const int k = ctx.k;
  auto in_ab = [&](Vertex u) { return ctx.in_a[u] || ctx.in_b[u]; };
  if (!in_ab(v)) throw Error(ErrorCode::kInvalidArgument, "fan_to_ab needs a vertex of A u B");

  if (ctx.delta_minus <= 60 * k * k) {
    VertexSet pool;
    for (Vertex u = 0; u < n; ++u)
      if (!in_ab(u)) pool.push_back(u);
    return k_fan(td, v, pool, k, FanDirection::kToCenter);
  }
  if (!ctx.in_y[v]) {
    Fan f;
    f.center = v;
    f.direction = FanDirection::kToCenter;
    for (Vertex u : td.in_neighbors(v)) {
      if (static_cast<int>(f.targets.size()) == k) break;
      if (in_ab(u)) continue;
      f.targets.push_back(u);
      f.paths.push_back(Path{{u, v}});
    }
    if (static_cast<int>(f.targets.size()) < k) invariant_failure("too few in-neighbours outside A u B");
    return f;
  }
  VertexSet pool;
  for (Vertex u = 0; u < n; ++u)
    if (!ctx.in_y[u]) pool.push_back(u);
  Fan f = k_fan(td, v, pool, k, FanDirection::kToCenter);
  std::vector<char> taken = make_mask(n, f.targets);
  for (std::size_t i = 0; i < f.targets.size(); ++i) {
    const Vertex start = f.targets[i];
    if (!in_ab(start)) continue;
    Vertex pick = -1;
    for (Vertex w : td.in_neighbors(start))
      if (!in_ab(w) && !taken[w]) {
        pick = w;
        break;
      }
    if (pick == -1) invariant_failure("no fresh in-neighbour outside A u B to prepend");
    taken[pick] = 1;
    f.paths[i].vertices.insert(f.paths[i].vertices.begin(), pick);
    f.targets[i] = pick;
  }
  return f;
}

OutFan fan_from_ab(const Tournament& t, const Digraph& td, const FanContext& ctx, Vertex v) {
  const int n = t.order();
  const int k = ctx.k;
  auto in_ab = [&](Vertex u) { return ctx.in_a[u] || ctx.in_b[u]; };
  auto in_core = [&](Vertex u) { return ctx.in_a[u] || ctx.in_b_first[u]; };
  if (!in_ab(v)) throw Error(ErrorCode::kInvalidArgument, "fan_from_ab needs a vertex of A u B");

  OutFan result;
  Fan& star = result.star;
  if (ctx.delta_plus <= 100 * k * k) {
    VertexSet pool;
    for (Vertex u = 0; u < n; ++u)
      if (!in_core(u)) pool.push_back(u);
    star = k_fan(td, v, pool, k, FanDirection::kFromCenter);
  } else if (!ctx.in_x[v]) {
    star.center = v;
    star.direction = FanDirection::kFromCenter;
    for (Vertex u : td.out_neighbors(v)) {
      if (static_cast<int>(star.targets.size()) == k) break;
      if (in_core(u)) continue;
      star.targets.push_back(u);
      star.paths.push_back(Path{{v, u}});
    }
    if (static_cast<int>(star.targets.size()) < k) invariant_failure("too few out-neighbours outside A u B''");
  } else {
    VertexSet pool;
    for (Vertex u = 0; u < n; ++u)
      if (!ctx.in_x[u]) pool.push_back(u);
    star = k_fan(td, v, pool, k, FanDirection::kFromCenter);
    std::vector<char> taken = make_mask(n, star.targets);
    for (std::size_t i = 0; i < star.targets.size(); ++i) {
      const Vertex end = star.targets[i];
      if (!in_core(end)) continue;
      Vertex pick = -1;
      for (Vertex w : td.out_neighbors(end))
        if (!in_core(w) && !taken[w]) {
          pick = w;
          break;
        }
      if (pick == -1) invariant_failure("no fresh out-neighbour outside A u B'' to append");
      taken[pick] = 1;
      star.paths[i].vertices.push_back(pick);
      star.targets[i] = pick;
    }
  }
  result.fan = extend_out_fan(t, ctx, star);
  return result;
}

Fan extend_out_fan(const Tournament& t, const FanContext& ctx, const Fan& star) {
  const int n = t.order();
  const int k = ctx.k;
  auto in_ab = [&](Vertex u) { return ctx.in_a[u] || ctx.in_b[u]; };
  const int large = 18 * k + 80;

  enum class Kind { kNone, kI1, kI2, kI3 };
  std::vector<Kind> kind(star.targets.size(), Kind::kNone);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (const Path& p : star.paths)
    for (Vertex u : p.vertices) used[u] = 1;

  for (std::size_t i = 0; i < star.targets.size(); ++i) {
    const Vertex u = star.targets[i];
    if (!in_ab(u)) continue;
    if (ctx.in_a[u] || ctx.in_b_first[u]) invariant_failure("star path ends inside A u B''");
    const int chain = ctx.b_chain[u];
    if (chain < 0) invariant_failure("B vertex without a chain index");
    if (ctx.b_chain_size[chain] >= large) {
      const auto& last = ctx.b_last[chain];
      kind[i] = std::find(last.begin(), last.end(), u) != last.end() ? Kind::kI2 : Kind::kI1;
    } else {
      kind[i] = Kind::kI3;
    }
  }

  Fan fan = star;
  auto pick_out = [&](Vertex from, auto&& eligible) {
    for (Vertex w = 0; w < n; ++w)
      if (!used[w] && t.beats(from, w) && eligible(w)) {
        used[w] = 1;
        return w;
      }
    invariant_failure("no escort vertex available");
  };
  auto outside = [&](Vertex w) { return !in_ab(w); };

  std::vector<Vertex> escort(star.targets.size(), -1);
  for (std::size_t i = 0; i < kind.size(); ++i) {
    if (kind[i] != Kind::kI1) continue;
    const auto& last = ctx.b_last[ctx.b_chain[star.targets[i]]];
    escort[i] = pick_out(star.targets[i], [&](Vertex w) {
      return std::find(last.begin(), last.end(), w) != last.end();
    });
  }
  for (std::size_t i = 0; i < kind.size(); ++i) {
    if (kind[i] != Kind::kI1) continue;
    const Vertex w2 = pick_out(escort[i], outside);
    fan.paths[i].vertices.push_back(escort[i]);
    fan.paths[i].vertices.push_back(w2);
    fan.targets[i] = w2;
  }
  for (Kind wanted : {Kind::kI2, Kind::kI3})
    for (std::size_t i = 0; i < kind.size(); ++i) {
      if (kind[i] != wanted) continue;
      const Vertex w = pick_out(star.targets[i], outside);
      fan.paths[i].vertices.push_back(w);
      fan.targets[i] = w;
    }
  return fan;
}

PipelineResult run_pipeline(const Tournament& t, int k, const PipelineOptions& options) {
  const int n = t.order();
  if (k < 2) throw Error(ErrorCode::kInvalidArgument, "the pipeline needs k >= 2");
  const int m = 3 * k - 1;
  const double lg = log2_plus_one(k);
  const Digraph td = t.to_digraph();

  PipelineResult result;
  PipelineState& st = result.state;
  auto check = [&](std::string name, double value, double bound, bool upper = true) {
    BoundCheck c{std::move(name), value, bound, upper};
    if (!c.holds()) {
      std::ostringstream msg;
      msg << c.name << ": " << value << (upper ? " > " : " < ") << bound;
      invariant_failure(msg.str());
    }
    result.ledger.push_back(std::move(c));
  };

  st.k = k;
  st.extremes = build_extreme_sets(t, k);
  const ExtremeSets& ex = st.extremes;
  if (ex.delta_minus < ex.delta_plus) throw Error(ErrorCode::kInvalidArgument, "pipeline expects delta- >= delta+");

  // Dominating chains on shrinking residual hosts.
  std::vector<char> residual(static_cast<std::size_t>(n), 1);
  for (Vertex v : ex.x) residual[v] = 0;
  for (Vertex v : ex.y) residual[v] = 0;
  auto grow_chains = [&](const VertexSet& roots, ChainKind kind, std::vector<DominatingChain>& chains,
                         std::vector<int>& degrees) {
    std::vector<char> done(static_cast<std::size_t>(n), 0);
    for (int step = 0; step < m; ++step) {
      Vertex root = -1;
      int best = -1;
      for (Vertex r : roots) {
        if (done[r]) continue;
        int count = 0;
        for (Vertex u = 0; u < n; ++u)
          if (residual[u] && (kind == ChainKind::kIn ? t.beats(r, u) : t.beats(u, r))) ++count;
        if (count > best) {
          best = count;
          root = r;
        }
      }
      done[root] = 1;
      VertexSet host{root};
      for (Vertex u = 0; u < n; ++u)
        if (residual[u]) host.push_back(u);
      std::sort(host.begin(), host.end());
      const InducedTournament sub = induced(t, host);
      const Vertex local_root =
          static_cast<Vertex>(std::lower_bound(host.begin(), host.end(), root) - host.begin());
      DominatingChain c = kind == ChainKind::kIn ? in_dominating_chain(sub.tournament, local_root)
                                                 : out_dominating_chain(sub.tournament, local_root);
      if (auto problem = audit_chain(sub.tournament, c, k)) invariant_failure("chain audit: " + *problem);
      if (c.d != best) invariant_failure("chain degree witness differs from the residual count");
      c.root = root;
      for (Vertex& v : c.vertices) {
        v = host[v];
        residual[v] = 0;
      }
      degrees.push_back(c.d);
      chains.push_back(std::move(c));
    }
  };
  grow_chains(ex.x, ChainKind::kIn, st.a_chains, st.d_plus);
  grow_chains(ex.y, ChainKind::kOut, st.b_chains, st.d_minus);

  for (int i = 0; i < m; ++i) {
    if (st.d_plus[i] > (i == 0 ? ex.delta_plus : st.d_plus[i - 1])) invariant_failure("d+ sequence not monotone");
    if (st.d_minus[i] > (i == 0 ? ex.delta_minus : st.d_minus[i - 1])) invariant_failure("d- sequence not monotone");
  }

  VertexSet a_all;
  VertexSet b_all;
  for (const auto& c : st.a_chains) {
    a_all.insert(a_all.end(), c.vertices.begin(), c.vertices.end());
    st.a_sink.push_back(c.sink());
  }
  for (const auto& c : st.b_chains) {
    b_all.insert(b_all.end(), c.vertices.begin(), c.vertices.end());
    st.b_source.push_back(c.source());
    const ChainWindows w = chain_windows(c, k);
    st.b_last.push_back(w.last);
    st.b_first.push_back(w.first);
  }
  const VertexSet ab = sorted_union(a_all, b_all);
  if (ab.size() != a_all.size() + b_all.size()) invariant_failure("chains are not pairwise disjoint");
  const std::vector<char> in_ab = make_mask(n, ab);

  check("|A u B|", static_cast<double>(ab.size()), (6.0 * k - 2) * (2.5 * std::log2(ex.delta_minus + 1.0) + 2));
  const int outside_count = n - static_cast<int>(ab.size());
  if (outside_count < k) throw Error(ErrorCode::kTooSmall, "fewer than k vertices outside A u B");
  check("|V \\ (A u B)|", outside_count, k, false);

  for (Vertex u = 0; u < n; ++u) {
    if (in_ab[u]) continue;
    for (const auto& c : st.a_chains)
      if (std::none_of(c.vertices.begin(), c.vertices.end(), [&](Vertex w) { return t.beats(u, w); }))
        invariant_failure("an A-chain does not in-dominate V \\ (A u B)");
    for (const auto& c : st.b_chains)
      if (std::none_of(c.vertices.begin(), c.vertices.end(), [&](Vertex w) { return t.beats(w, u); }))
        invariant_failure("a B-chain does not out-dominate V \\ (A u B)");
  }

  // Fan context.
  FanContext& ctx = st.context;
  ctx.k = k;
  ctx.delta_plus = ex.delta_plus;
  ctx.delta_minus = ex.delta_minus;
  ctx.in_x = make_mask(n, ex.x);
  ctx.in_y = make_mask(n, ex.y);
  ctx.in_a = make_mask(n, a_all);
  ctx.in_b = make_mask(n, b_all);
  ctx.in_b_first.assign(static_cast<std::size_t>(n), 0);
  ctx.b_chain.assign(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < m; ++i) {
    for (Vertex v : st.b_first[i]) ctx.in_b_first[v] = 1;
    for (Vertex v : st.b_chains[i].vertices) ctx.b_chain[v] = i;
    ctx.b_chain_size.push_back(st.b_chains[i].size());
  }
  ctx.b_last = st.b_last;

  // Backbone between well-connected chain ends.
  {
    const InducedTournament sinks = induced(t, st.a_sink);
    for (Vertex v : top_degree_set(sinks.tournament, Direction::kIn, Extreme::kLargest, k)) {
      if (sinks.tournament.in_degree(v) < k) invariant_failure("A_sink lacks k vertices of in-degree >= k");
      st.a_selected.push_back(sinks.to_parent[v]);
    }
    const InducedTournament sources = induced(t, st.b_source);
    for (Vertex v : top_degree_set(sources.tournament, Direction::kOut, Extreme::kLargest, k)) {
      if (sources.tournament.out_degree(v) < k) invariant_failure("B_source lacks k vertices of out-degree >= k");
      st.b_selected.push_back(sources.to_parent[v]);
    }
  }
  st.backbone = min_disjoint_paths(td, st.a_selected, st.b_selected, k);
  {
    VertexSet ordered_b;
    for (const Path& p : st.backbone.paths) {
      if (!check_backwards_transitive(t, p)) invariant_failure("backbone path is not backwards-transitive");
      ordered_b.push_back(p.back());
    }
    st.b_selected = ordered_b;
  }

  VertexSet interiors;
  for (const Path& p : st.backbone.paths) {
    interiors.insert(interiors.end(), p.interior().begin(), p.interior().end());
    append_path_arcs(st.e0, p);
  }
  std::sort(interiors.begin(), interiors.end());
  normalize(st.e0);
  const std::vector<char> interior_mask = make_mask(n, interiors);
  for (Vertex v : ab) (interior_mask[v] ? st.v1_prime : st.v1).push_back(v);

  // E1: good subgraphs on V1 and V1' - E0, plus fans for their windows.
  const int window = 2 * k - 1;
  const PartGood g1 = good_on_part(t, st.v1, k, 0, {}, window);
  const PartGood g1p = good_on_part(t, st.v1_prime, k - 1, 2, st.e0, window);
  st.e1 = g1.arcs;
  st.e1.insert(st.e1.end(), g1p.arcs.begin(), g1p.arcs.end());
  st.w1_minus = sorted_union(g1.first_window, g1p.first_window);
  st.w1_plus = sorted_union(g1.last_window, g1p.last_window);
  for (Vertex u : st.w1_minus) {
    Fan f = fan_to_ab(t, td, ctx, u);
    if (auto problem = validate_fan(td, f)) invariant_failure("in-fan invalid: " + *problem);
    for (Vertex target : f.targets)
      if (in_ab[target]) invariant_failure("in-fan starts inside A u B");
    check("in-fan length", static_cast<double>(f.total_length()), 70.0 * k * lg);
    for (const Path& p : f.paths) append_path_arcs(st.e1, p);
    st.in_fans.push_back(std::move(f));
  }
  for (Vertex u : st.w1_plus) {
    OutFan f = fan_from_ab(t, td, ctx, u);
    if (auto problem = validate_fan(td, f.fan)) invariant_failure("out-fan invalid: " + *problem);
    for (Vertex target : f.fan.targets)
      if (in_ab[target]) invariant_failure("out-fan ends inside A u B");
    check("out-fan star length", static_cast<double>(f.star.total_length()), 98.0 * k * lg);
    check("out-fan length", static_cast<double>(f.fan.total_length()), 100.0 * k * lg);
    for (const Path& p : f.fan.paths) append_path_arcs(st.e1, p);
    st.out_fans.push_back(std::move(f));
  }
  normalize(st.e1);
  {
    VertexSet touched;
    for (const Arc& a : st.e1) {
      if (!in_ab[a.tail]) touched.push_back(a.tail);
      if (!in_ab[a.head]) touched.push_back(a.head);
    }
    st.v2 = sorted_union(std::move(touched), {});
  }
  check("|E1|", static_cast<double>(st.e1.size()),
        static_cast<double>(k) * st.v1.size() + (k - 1.0) * st.v1_prime.size() + 680.0 * k * k * lg);
  check("|V2|", static_cast<double>(st.v2.size()), 8.0 * k * k);

  // E2, E3, E4 on the remaining parts.
  const PartGood g2 = good_on_part(t, st.v2, k, 0, {}, window);
  st.e2 = g2.arcs;
  const std::vector<char> v2_mask = make_mask(n, st.v2);
  for (Vertex v : interiors)
    if (!in_ab[v] && !v2_mask[v]) st.v3.push_back(v);
  const PartGood g3 = good_on_part(t, st.v3, k - 1, 2, st.e0, window);
  st.e3 = g3.arcs;
  const std::vector<char> v3_mask = make_mask(n, st.v3);
  for (Vertex v = 0; v < n; ++v)
    if (!in_ab[v] && !v2_mask[v] && !v3_mask[v]) st.v4.push_back(v);
  const PartGood g4 = good_on_part(t, st.v4, k, 0, {}, window);
  st.e4 = g4.arcs;
  if (!st.v2.empty()) check("|E2|", static_cast<double>(st.e2.size()), static_cast<double>(k) * st.v2.size() - k);
  if (!st.v3.empty())
    check("|E3|", static_cast<double>(st.e3.size()), (k - 1.0) * st.v3.size() + (k - 1.0));
  if (!st.v4.empty()) check("|E4|", static_cast<double>(st.e4.size()), static_cast<double>(k) * st.v4.size() - k);

  if (st.v1.size() + st.v1_prime.size() + st.v2.size() + st.v3.size() + st.v4.size() != static_cast<std::size_t>(n))
    invariant_failure("V1, V1', V2, V3, V4 do not partition V");

  // E5: arcs into the A-sinks and out of the B-sources.
  st.w_plus = sorted_union(sorted_union(g2.last_window, g3.last_window), g4.last_window);
  st.w_minus = sorted_union(sorted_union(g2.first_window, g3.first_window), g4.first_window);
  for (Vertex u : st.a_sink)
    for (Vertex v : st.a_sink)
      if (t.beats(u, v)) st.e5.push_back({u, v});
  for (Vertex u : st.b_source)
    for (Vertex v : st.b_source)
      if (t.beats(u, v)) st.e5.push_back({u, v});
  for (Vertex u : st.w_plus) {
    if (in_ab[u]) invariant_failure("W+ meets A u B");
    for (const auto& c : st.a_chains) {
      const Vertex a = c.sink();
      if (t.beats(u, a)) {
        st.e5.push_back({u, a});
        continue;
      }
      const auto hit = std::find_if(c.vertices.begin(), c.vertices.end(), [&](Vertex w) { return t.beats(u, w); });
      if (hit == c.vertices.end() || !t.beats(*hit, a)) invariant_failure("no two-step path into an A-sink");
      st.e5.push_back({u, *hit});
      st.e5.push_back({*hit, a});
    }
  }
  for (Vertex u : st.w_minus) {
    if (in_ab[u]) invariant_failure("W- meets A u B");
    for (const auto& c : st.b_chains) {
      const Vertex b = c.source();
      if (t.beats(b, u)) {
        st.e5.push_back({b, u});
        continue;
      }
      const auto hit = std::find_if(c.vertices.begin(), c.vertices.end(), [&](Vertex w) { return t.beats(w, u); });
      if (hit == c.vertices.end() || !t.beats(b, *hit)) invariant_failure("no two-step path out of a B-source");
      st.e5.push_back({b, *hit});
      st.e5.push_back({*hit, u});
    }
  }
  normalize(st.e5);
  check("|E5|", static_cast<double>(st.e5.size()), 81.0 * k * k);

  // Assemble.
  Digraph d(n);
  for (const auto* part : {&st.e0, &st.e1, &st.e2, &st.e3, &st.e4, &st.e5}) d.add_arcs(*part);
  for (const Arc& a : d.arcs())
    if (!t.beats(a.tail, a.head)) invariant_failure("output arc is not an arc of T");

  check("|E0|", static_cast<double>(st.e0.size()), static_cast<double>(interiors.size() + k));
  result.e0_tight_form_holds = static_cast<double>(st.e0.size()) <=
                               static_cast<double>(st.v1_prime.size() + st.v2.size() + st.v3.size()) - k;
  check("|E(D)|", static_cast<double>(d.size()), static_cast<double>(k) * n + 750.0 * k * k * lg);

  if (options.verify) {
    result.verification = check_strongly_k_connected(d, k, options.verifier);
    if (!result.verification->connected) invariant_failure("assembled digraph is not strongly k-connected");
  }
  result.graph = std::move(d);
  return result;
}

}  // namespace kspan
