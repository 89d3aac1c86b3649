#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "kspan/kspan.hpp"
#include "oracles.hpp"

namespace kspan {
namespace {

Tournament three_cycle() {
  Tournament t(3);  // 0->1, 0->2, 1->2
  t.orient(2, 0);
  return t;
}

TEST(Tournament, ThreeCycleProfileIsBalanced) {
  for (const DegreePair& p : degree_profile(three_cycle())) EXPECT_EQ(p, (DegreePair{1, 1}));
}

TEST(Tournament, TransitiveProfile) {
  const auto profile = degree_profile(Tournament::transitive(4));
  std::vector<int> out;
  for (const auto& p : profile) out.push_back(p.out);
  EXPECT_EQ(out, (std::vector<int>{3, 2, 1, 0}));
}

TEST(Tournament, ProfileMatchesPairScan) {
  const Tournament t = gen_random(50, 17);
  const auto profile = degree_profile(t);
  for (Vertex v = 0; v < 50; ++v) {
    int out = 0, in = 0;
    for (Vertex u = 0; u < 50; ++u) {
      if (u == v) continue;
      const bool v_first = v < u;
      const bool bit = t.pair_bit(t.pair_index(std::min(u, v), std::max(u, v)));
      (bit == v_first ? out : in) += 1;
    }
    EXPECT_EQ(profile[v].out, out);
    EXPECT_EQ(profile[v].in, in);
    EXPECT_EQ(out + in, 49);
  }
}

TEST(Tournament, BalancedVertex) {
  const Vertex v = balanced_vertex(three_cycle(), Direction::kOut);
  EXPECT_EQ(three_cycle().out_degree(v), 1);

  const Tournament tr = Tournament::transitive(8);
  const int d = tr.out_degree(balanced_vertex(tr, Direction::kOut));
  EXPECT_GE(d, 2);
  EXPECT_LE(d, 6);

  const Tournament r = gen_random(100, 3);
  for (Direction dir : {Direction::kOut, Direction::kIn}) {
    const int deg = r.degree(balanced_vertex(r, dir), dir);
    EXPECT_GE(deg, 25);
    EXPECT_LE(deg, 75);
  }
}

TEST(Tournament, TopDegreeSet) {
  EXPECT_EQ(top_degree_set(Tournament::transitive(5), Direction::kIn, Extreme::kLargest, 2),
            (VertexSet{4, 3}));
  EXPECT_EQ(top_degree_set(three_cycle(), Direction::kOut, Extreme::kSmallest, 1), (VertexSet{0}));

  const Tournament t = gen_random(60, 8);
  std::vector<std::pair<int, Vertex>> sorted;
  for (Vertex v = 0; v < 60; ++v) sorted.push_back({t.out_degree(v), v});
  std::sort(sorted.begin(), sorted.end());
  VertexSet expected;
  for (int i = 0; i < 5; ++i) expected.push_back(sorted[i].second);
  EXPECT_EQ(top_degree_set(t, Direction::kOut, Extreme::kSmallest, 5), expected);
}

TEST(Tournament, Reverse) {
  const Tournament r = reverse(three_cycle());
  EXPECT_TRUE(r.beats(0, 2));
  EXPECT_TRUE(r.beats(2, 1));
  EXPECT_TRUE(r.beats(1, 0));

  const Tournament tr = reverse(Tournament::transitive(4));
  EXPECT_TRUE(is_transitive_order(tr, VertexSet{3, 2, 1, 0}));

  const Tournament t = gen_random(30, 4);
  EXPECT_EQ(reverse(reverse(t)), t);
}

TEST(Tournament, Induced) {
  const Tournament t = gen_random(5, 9);
  const InducedTournament sub = induced(t, VertexSet{0, 2, 4});
  EXPECT_EQ(sub.tournament.order(), 3);
  for (Vertex a = 0; a < 3; ++a)
    for (Vertex b = 0; b < 3; ++b)
      if (a != b) EXPECT_EQ(sub.tournament.beats(a, b), t.beats(sub.to_parent[a], sub.to_parent[b]));

  EXPECT_EQ(induced(t, VertexSet{3}).tournament.order(), 1);
  EXPECT_THROW(induced(t, VertexSet{1, 1}), Error);

  const Tournament big = gen_random(40, 10);
  std::mt19937_64 rng(1);
  VertexSet keep(40);
  for (int i = 0; i < 40; ++i) keep[i] = i;
  std::shuffle(keep.begin(), keep.end(), rng);
  keep.resize(17);
  const InducedTournament s2 = induced(big, keep);
  for (Vertex a = 0; a < 17; ++a)
    for (Vertex b = 0; b < 17; ++b)
      if (a != b) EXPECT_EQ(s2.tournament.beats(a, b), big.beats(keep[a], keep[b]));
}

TEST(Tournament, DigraphViewHasEveryPairOnce) {
  const Tournament t = gen_random(25, 2);
  const Digraph d = t.to_digraph();
  EXPECT_EQ(d.size(), t.pair_count());
  for (Vertex u = 0; u < 25; ++u)
    for (Vertex v = 0; v < 25; ++v)
      if (u != v) EXPECT_EQ(d.has_arc(u, v), t.beats(u, v));
}

TEST(Generators, Deterministic) {
  EXPECT_EQ(gen_random(1, 5).order(), 1);
  EXPECT_EQ(gen_random(64, 99), gen_random(64, 99));
  EXPECT_NE(gen_random(64, 99), gen_random(64, 100));
}

TEST(Generators, KConnected) {
  const Tournament t = gen_k_connected(50, 3, 1);
  EXPECT_TRUE(is_strongly_k_connected(t.to_digraph(), 3));
  EXPECT_THROW(gen_k_connected(6, 3, 1, 5), Error);
}

TEST(Generators, Paley) {
  const Tournament p = paley(7);
  for (Vertex v = 0; v < 7; ++v) EXPECT_EQ(p.out_degree(v), 3);
  EXPECT_TRUE(p.beats(0, 1));
  EXPECT_TRUE(p.beats(0, 2));
  EXPECT_TRUE(p.beats(0, 4));
  EXPECT_THROW(paley(5), Error);
}

TEST(Generators, OrientedKeepsDegree) {
  for (int s = 0; s <= 2; ++s) {
    const Digraph d = gen_oriented(40, s, 3 + s);
    for (Vertex v = 0; v < 40; ++v) EXPECT_GE(d.out_degree(v) + d.in_degree(v), 39 - s);
    for (const Arc& a : d.arcs()) EXPECT_FALSE(d.has_arc(a.head, a.tail));
  }
}

TEST(Io, TournamentRoundTrip) {
  const Tournament t = gen_random(3, 1);
  const std::string text = io::tournament_to_json(t);
  EXPECT_EQ(io::tournament_from_json(text), t);
  EXPECT_EQ(io::bits_to_hex(t).size(), 1u);

  const Tournament big = gen_random(37, 6);
  EXPECT_EQ(io::tournament_from_json(io::tournament_to_json(big)), big);
  EXPECT_EQ(io::tournament_from_hex(37, io::bits_to_hex(big)), big);
}

TEST(Io, RejectsMalformed) {
  EXPECT_THROW(io::tournament_from_json("{"), Error);
  EXPECT_THROW(io::tournament_from_json(R"({"n": 3})"), Error);
  EXPECT_THROW(io::tournament_from_json(R"({"n": 3, "bits": "zz"})"), Error);
  EXPECT_THROW(io::tournament_from_json(R"({"n": 3, "bits": "f"})"), Error);  // padding bit set
  EXPECT_THROW(io::digraph_from_json(R"({"n": 2, "arcs": [[0, 0]]})"), Error);
  EXPECT_THROW(io::digraph_from_json(R"({"n": 2, "arcs": [[0, 2]]})"), Error);
  try {
    io::tournament_from_json("[]");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
  }
}

TEST(Io, DigraphRoundTripAndDot) {
  const Digraph d = oracle::random_digraph(12, 0.3, 4);
  EXPECT_EQ(io::digraph_from_json(io::digraph_to_json(d)), d);
  const std::string dot = io::digraph_to_dot(Digraph(2, std::vector<Arc>{{0, 1}}));
  EXPECT_NE(dot.find("0 -> 1;"), std::string::npos);
  EXPECT_EQ(dot.rfind("digraph D {", 0), 0u);
}

TEST(Digraph, BasicOperations) {
  Digraph d(4);
  EXPECT_TRUE(d.add_arc(0, 1));
  EXPECT_FALSE(d.add_arc(0, 1));
  d.add_arc(1, 2);
  d.add_arc(3, 1);
  EXPECT_EQ(d.size(), 3u);
  EXPECT_THROW(d.add_arc(2, 2), Error);
  EXPECT_THROW(d.add_arc(0, 4), Error);
  EXPECT_TRUE(d.reversed().has_arc(1, 0));
  const Digraph sub = d.induced(VertexSet{1, 2});
  EXPECT_TRUE(sub.has_arc(0, 1));
  EXPECT_EQ(sub.size(), 1u);
  const std::vector<Arc> drop{{0, 1}};
  EXPECT_FALSE(d.without_arcs(drop).has_arc(0, 1));
}

TEST(Ordering, WindowsAreClamped) {
  const Ordering o(VertexSet{2, 0, 1});
  EXPECT_EQ(o.at(1), 2);
  EXPECT_EQ(o.position(1), 3);
  EXPECT_EQ(o.window(0, 2), (VertexSet{2, 0}));
  EXPECT_TRUE(o.window(3, 2).empty());
  EXPECT_THROW(Ordering(VertexSet{0, 0}), Error);
}

}  // namespace
}  // namespace kspan
