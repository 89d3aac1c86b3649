#include <gtest/gtest.h>

#include <random>

#include "kspan/kspan.hpp"
#include "oracles.hpp"

namespace kspan {
namespace {

BipartiteGraph random_bipartite(int l, int r, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  BipartiteGraph g(l, r);
  for (int a = 0; a < l; ++a)
    for (int b = 0; b < r; ++b)
      if (coin(rng)) g.adjacency[a].push_back(b);
  return g;
}

TEST(Matching, AgreesWithKuhn) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const BipartiteGraph g = random_bipartite(1 + seed % 17, 1 + seed % 13, 0.05 + 0.02 * (seed % 10), seed);
    const MatchingEdges m = maximum_matching(g);
    EXPECT_EQ(static_cast<int>(m.size()), oracle::kuhn_matching_size(g)) << seed;
    std::vector<int> left_used(g.left), right_used(g.right);
    for (auto [a, b] : m) {
      EXPECT_TRUE(g.has_edge(a, b));
      EXPECT_EQ(left_used[a]++, 0);
      EXPECT_EQ(right_used[b]++, 0);
    }
    EXPECT_TRUE(std::is_sorted(m.begin(), m.end()));
  }
}

TEST(Matching, RemoveEdge) {
  BipartiteGraph g(2, 2);
  g.adjacency = {{0, 1}, {1}};
  EXPECT_EQ(g.edge_count(), 3u);
  g.remove_edge(0, 1);
  EXPECT_FALSE(g.has_edge(0, 1));
  EXPECT_EQ(maximum_matching(g).size(), 2u);
}

TEST(QOrdering, TransitiveIsAlreadyGood) {
  const Digraph d = Tournament::transitive(6).to_digraph();
  const QOrdering q = q_ordering(d, 0);
  EXPECT_TRUE(oracle::q_windows_hold(d, q.order, 0));
  EXPECT_EQ(q.order.vertices(), (VertexSet{0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(q.rounds, 0);
}

TEST(QOrdering, SingleVertex) {
  const QOrdering q = q_ordering(Digraph(1), 0);
  EXPECT_EQ(q.order.size(), 1);
}

TEST(QOrdering, RandomTournamentsPassWindowAudit) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Digraph d = gen_random(50, seed).to_digraph();
    const QOrdering q = q_ordering(d, 0);
    EXPECT_TRUE(oracle::q_windows_hold(d, q.order, 0));
    EXPECT_EQ(audit_q_ordering(d, q.order, 0), std::nullopt);
    for (std::size_t i = 1; i < q.forward_history.size(); ++i)
      EXPECT_GT(q.forward_history[i], q.forward_history[i - 1]);
    EXPECT_LE(q.rounds, 50 * 49 / 2);
    EXPECT_EQ(q.forward_history.back(), forward_arc_count(d, q.order));
  }
}

TEST(QOrdering, OrientedWithMissingPairs) {
  for (int s = 1; s <= 2; ++s)
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const Digraph d = gen_oriented(45, s, seed);
      const QOrdering q = q_ordering(d, s);
      EXPECT_TRUE(oracle::q_windows_hold(d, q.order, s));
    }
}

TEST(QOrdering, Errors) {
  const Digraph sparse(5, std::vector<Arc>{{0, 1}});
  try {
    q_ordering(sparse, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegreeTooLow);
  }
  const Digraph two_cycle(2, std::vector<Arc>{{0, 1}, {1, 0}});
  EXPECT_THROW(q_ordering(two_cycle, 0), Error);
}

TEST(QOrdering, AuditDetectsViolation) {
  const Digraph d = Tournament::transitive(5).to_digraph();
  EXPECT_NE(audit_q_ordering(d, Ordering(VertexSet{4, 3, 2, 1, 0}), 0), std::nullopt);
}

TEST(ExtractMatchings, TransitiveFour) {
  const Digraph d = Tournament::transitive(4).to_digraph();
  const auto ms = extract_matchings(forward_bipartite(d, Ordering::identity(4)), 1, 0);
  ASSERT_EQ(ms.size(), 1u);
  EXPECT_EQ(ms[0].size(), 3u);
}

TEST(ExtractMatchings, ClampsToEmpty) {
  const Digraph d = Tournament::transitive(4).to_digraph();
  const auto ms = extract_matchings(forward_bipartite(d, Ordering::identity(4)), 3, 0);
  EXPECT_EQ(ms[1].size(), 1u);
  EXPECT_TRUE(ms[2].empty());
}

TEST(ExtractMatchings, SizesAndKuhnCrossCheck) {
  const Digraph d = gen_random(40, 3).to_digraph();
  const QOrdering q = q_ordering(d, 0);
  BipartiteGraph h = forward_bipartite(d, q.order);
  const auto ms = extract_matchings(h, 3, 0);
  const std::vector<std::size_t> sizes{39, 37, 35};
  for (int l = 0; l < 3; ++l) {
    EXPECT_GE(oracle::kuhn_matching_size(h), static_cast<int>(sizes[l]));
    EXPECT_EQ(ms[l].size(), sizes[l]);
    for (auto [a, b] : ms[l]) {
      EXPECT_TRUE(h.has_edge(a, b));
      h.remove_edge(a, b);
    }
  }
}

TEST(ExtractMatchings, DeficitThrows) {
  BipartiteGraph h(4, 4);
  try {
    extract_matchings(h, 1, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMatchingDeficit);
  }
}

TEST(GoodSubgraph, TransitiveSix) {
  const Digraph d = Tournament::transitive(6).to_digraph();
  const GoodDigraph g = good_subgraph(d, 1, 0);
  EXPECT_LE(g.graph.size(), 5u);
  EXPECT_EQ(g.t, 1);
  EXPECT_EQ(audit_good(g.graph, g.order, 1, 1), std::nullopt);
}

TEST(GoodSubgraph, TooFewVertices) {
  const Digraph d = gen_random(3, 1).to_digraph();
  const GoodDigraph g = good_subgraph(d, 2, 0);
  EXPECT_EQ(g.graph.size(), 0u);
  EXPECT_EQ(g.graph.order(), 3);
}

TEST(GoodSubgraph, RandomTournamentBound) {
  const Digraph d = gen_random(200, 12).to_digraph();
  const GoodDigraph g = good_subgraph(d, 4, 0);
  EXPECT_LE(g.graph.size(), 796u);
  EXPECT_EQ(audit_good(g.graph, g.order, 4, g.t), std::nullopt);
  for (const Arc& a : g.graph.arcs()) {
    EXPECT_TRUE(d.has_arc(a.tail, a.head));
    EXPECT_LT(g.order.position(a.tail), g.order.position(a.head));
  }
}

TEST(GoodSubgraph, DirectAuditOnOrientedGraphs) {
  for (int s = 0; s <= 2; ++s)
    for (int k = 1; k <= 4; ++k) {
      const int n = 30 + 10 * k;
      const Digraph d = gen_oriented(n, s, 100 * s + k);
      const GoodDigraph g = good_subgraph(d, k, s);
      EXPECT_LE(g.graph.size(), static_cast<std::size_t>(k * n - k + s * k));
      const int t = 2 * k + s - 1;
      EXPECT_EQ(g.t, t);
      for (int p = 1; p <= n; ++p) {
        const Vertex v = g.order.at(p);
        if (p <= n - t) EXPECT_GE(g.graph.out_degree(v), k);
        if (p >= t + 1) EXPECT_GE(g.graph.in_degree(v), k);
      }
    }
}

TEST(AuditGood, DetectsBackwardArc) {
  const Digraph back(3, std::vector<Arc>{{2, 0}});
  EXPECT_NE(audit_good(back, Ordering::identity(3), 0, 0), std::nullopt);
}

TEST(TailPath, TrivialWhenInWindow) {
  const GoodDigraph g = good_subgraph(Tournament::transitive(6).to_digraph(), 1, 0);
  const Vertex last = g.order.at(6);
  EXPECT_EQ(tail_path(g, {}, last, TailDirection::kToEnd).vertices, (VertexSet{last}));
}

TEST(TailPath, TransitiveReachesEnd) {
  const GoodDigraph g = good_subgraph(Tournament::transitive(6).to_digraph(), 1, 0);
  const Path p = tail_path(g, {}, g.order.at(1), TailDirection::kToEnd);
  EXPECT_EQ(p.back(), g.order.at(6));
  EXPECT_TRUE(is_path_in(g.graph, p));
}

TEST(TailPath, AvoidsBlockedSet) {
  std::mt19937_64 rng(2);
  const int n = 60, k = 3;
  const GoodDigraph g = good_subgraph(gen_random(n, 21).to_digraph(), k, 0);
  for (int trial = 0; trial < 100; ++trial) {
    VertexSet perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    const VertexSet blocked(perm.begin(), perm.begin() + k - 1);
    const Vertex v = perm[k - 1];
    for (TailDirection dir : {TailDirection::kToEnd, TailDirection::kFromStart}) {
      const Path p = tail_path(g, blocked, v, dir);
      EXPECT_TRUE(is_path_in(g.graph, p));
      for (Vertex b : blocked) EXPECT_EQ(std::count(p.vertices.begin(), p.vertices.end(), b), 0);
      if (dir == TailDirection::kToEnd) {
        EXPECT_EQ(p.front(), v);
        EXPECT_GT(g.order.position(p.back()), n - g.t);
      } else {
        EXPECT_EQ(p.back(), v);
        EXPECT_LE(g.order.position(p.front()), g.t);
      }
    }
  }
}

}  // namespace
}  // namespace kspan
