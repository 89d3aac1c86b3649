#include <gtest/gtest.h>

#include <random>

#include "kspan/kspan.hpp"
#include "oracles.hpp"

namespace kspan {
namespace {

Tournament three_cycle() {
  Tournament t(3);
  t.orient(2, 0);
  return t;
}

TEST(HamiltonCycle, ThreeCycleIsItself) {
  const Digraph c = hamilton_cycle(three_cycle());
  EXPECT_EQ(c, three_cycle().to_digraph());
}

TEST(HamiltonCycle, EveryStrongTournamentOnFiveVertices) {
  int strong = 0;
  for (std::uint64_t mask = 0; mask < (1u << 10); ++mask) {
    const Tournament t = oracle::tournament_from_mask(5, mask);
    const std::vector<bool> none(5, false);
    if (!oracle::strongly_connected_without(t.to_digraph(), none)) {
      EXPECT_THROW(hamilton_cycle(t), Error);
      continue;
    }
    ++strong;
    EXPECT_TRUE(oracle::is_hamilton_cycle(t, hamilton_cycle(t))) << mask;
  }
  EXPECT_GT(strong, 0);
}

TEST(HamiltonCycle, LargeSeeded) {
  const Tournament t = gen_k_connected(100, 1, 4);
  const Digraph c = hamilton_cycle(t);
  EXPECT_EQ(c.size(), 100u);
  EXPECT_TRUE(oracle::is_hamilton_cycle(t, c));
  const VertexSet order = hamilton_cycle_order(t);
  ASSERT_EQ(order.size(), 100u);
  for (std::size_t i = 0; i < order.size(); ++i) EXPECT_TRUE(t.beats(order[i], order[(i + 1) % 100]));
}

TEST(HamiltonCycle, NotStronglyConnected) {
  try {
    hamilton_cycle(Tournament::transitive(4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotStronglyConnected);
  }
}

TEST(LinkagePair, KOneUsesExtremeDegrees) {
  const Tournament t = gen_k_connected(12, 1, 3);
  const LinkagePair lp = linkage_pair(t, 1);
  EXPECT_EQ(lp.branch, 1);
  EXPECT_EQ(lp.x, top_degree_set(t, Direction::kOut, Extreme::kLargest, 1));
  EXPECT_EQ(validate_linkage_pair(t, lp, 1), std::nullopt);
}

TEST(LinkagePair, TooSmall) {
  try {
    linkage_pair(gen_random(9, 1), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooSmall);
  }
}

TEST(LinkagePair, RandomSmallTournamentsValidate) {
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    const Tournament t = gen_random(10 + static_cast<int>(seed % 6), seed);
    const LinkagePair lp = linkage_pair(t, 2);
    EXPECT_EQ(validate_linkage_pair(t, lp, 2), std::nullopt) << seed;
    if (lp.branch == 2)
      for (Vertex a : lp.x)
        for (Vertex b : lp.y) EXPECT_TRUE(t.beats(a, b));
  }
}

// A directed K_{2,2} planted from {0, 1} to {2, 3}: the arcs themselves
// certify every pair.
TEST(LinkagePair, PlantedCompleteBipartiteCertificate) {
  Tournament t = gen_random(10, 4);
  for (Vertex a : {0, 1})
    for (Vertex b : {2, 3}) t.orient(a, b);
  LinkagePair lp;
  lp.branch = 2;
  lp.x = {0, 1};
  lp.y = {2, 3};
  for (Vertex a : lp.x)
    for (Vertex b : lp.y) lp.certificates.push_back({Path{{a, b}}});
  EXPECT_EQ(validate_linkage_pair(t, lp, 2), std::nullopt);

  t.orient(3, 1);
  EXPECT_NE(validate_linkage_pair(t, lp, 2), std::nullopt);
}

TEST(LinkagePair, PathsSurviveRandomDeletions) {
  const Tournament t = gen_k_connected(50, 3, 7);
  const LinkagePair lp = linkage_pair(t, 3);
  ASSERT_EQ(validate_linkage_pair(t, lp, 3), std::nullopt);
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    VertexSet s;
    while (s.size() < 2) {
      const Vertex v = static_cast<Vertex>(rng() % 50);
      if (std::find(s.begin(), s.end(), v) == s.end()) s.push_back(v);
    }
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const Vertex x = lp.x[i], y = lp.y[j];
        if (std::find(s.begin(), s.end(), x) != s.end() || std::find(s.begin(), s.end(), y) != s.end())
          continue;
        bool survives = false;
        for (const Path& p : lp.certificates[i * 3 + j]) {
          bool clean = true;
          for (Vertex w : p.interior()) clean = clean && std::find(s.begin(), s.end(), w) == s.end();
          survives = survives || clean;
        }
        EXPECT_TRUE(survives);
      }
  }
}

TEST(SparsifySmall, BelowFiveKReturnsWholeTournament) {
  const Tournament t = gen_k_connected(9, 2, 2);
  EXPECT_EQ(sparsify_small(t, 2), t.to_digraph());
}

TEST(SparsifySmall, ThreeCycle) {
  const Digraph d = sparsify_small(three_cycle(), 1);
  EXPECT_LE(d.size(), 3u);
  EXPECT_LE(static_cast<double>(d.size()), small_bound(3, 1));
  EXPECT_EQ(small_bound(3, 1), 19.0);
  EXPECT_TRUE(is_strongly_connected(d));
}

TEST(SparsifySmall, Corpus) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const Tournament t = gen_k_connected(40, 2, seed);
    const Digraph d = sparsify_small(t, 2);
    EXPECT_TRUE(is_strongly_k_connected(d, 2));
    EXPECT_LE(static_cast<double>(d.size()), small_bound(40, 2));
    for (const Arc& a : d.arcs()) EXPECT_TRUE(t.beats(a.tail, a.head));
  }
}

TEST(SparsifySmall, RejectsInvalidInput) {
  try {
    sparsify_small(Tournament::transitive(30), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotKConnected);
  }
}

}  // namespace
}  // namespace kspan
