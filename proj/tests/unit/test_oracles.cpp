// The oracles themselves, on cases small enough to settle by hand.
#include <gtest/gtest.h>

#include "support/corpus.hpp"
#include "support/oracles.hpp"

using tilinglab::Graph;

TEST(Oracles, PartitionSearchOnHandCases) {
  EXPECT_TRUE(oracle::has_factor_by_partitions(Graph::complete(6), Graph::complete(3)));
  EXPECT_FALSE(oracle::has_factor_by_partitions(corpus::cycle(6), Graph::complete(3)));
  EXPECT_TRUE(oracle::has_factor_by_partitions(corpus::cycle(6), Graph::complete(2)));
  EXPECT_FALSE(oracle::has_factor_by_partitions(corpus::path(3), Graph::complete(2)));
  // Two triangles joined by one edge: the triangle factor is the obvious one.
  Graph g(6);
  for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}}) g.add_edge(u, v);
  EXPECT_TRUE(oracle::has_factor_by_partitions(g, Graph::complete(3)));
}

TEST(Oracles, SpansCopyChecksAllBijections) {
  // P_3 = 0-1-2 embeds onto {a, b, c} iff one vertex is adjacent to both others.
  Graph p3 = corpus::path(3);
  Graph g(3);
  g.add_edge(0, 2);
  g.add_edge(2, 1);
  EXPECT_TRUE(oracle::spans_copy(g, p3, {0, 1, 2}));
  g.remove_edge(0, 2);
  EXPECT_FALSE(oracle::spans_copy(g, p3, {0, 1, 2}));
}

TEST(Oracles, ExhaustiveAlphaOnHandCases) {
  EXPECT_EQ(oracle::alpha_ell_exhaustive(corpus::cycle(5), 2), 2u);
  EXPECT_EQ(oracle::alpha_ell_exhaustive(Graph::complete(5), 2), 1u);
  EXPECT_EQ(oracle::alpha_ell_exhaustive(Graph::complete(5), 3), 2u);
  EXPECT_EQ(oracle::alpha_ell_exhaustive(corpus::cycle(6), 3), 6u);
}

TEST(Oracles, EdgeSubsetDensity) {
  EXPECT_EQ(oracle::density_by_edge_subsets(Graph::complete(2)), (std::pair<std::int64_t, std::int64_t>{1, 1}));
  EXPECT_EQ(oracle::density_by_edge_subsets(Graph::complete(3)), (std::pair<std::int64_t, std::int64_t>{3, 2}));
  // A triangle with a pendant edge: the triangle wins (3/2 > 4/3).
  Graph g(4);
  for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {0, 2}, {2, 3}}) g.add_edge(u, v);
  EXPECT_EQ(oracle::density_by_edge_subsets(g), (std::pair<std::int64_t, std::int64_t>{3, 2}));
}

TEST(Oracles, BoostMatching) {
  EXPECT_TRUE(oracle::has_perfect_matching_boost(corpus::cycle(6)));
  EXPECT_FALSE(oracle::has_perfect_matching_boost(corpus::cycle(5)));
  // Star K_{1,3}: maximum matching 1.
  Graph star(4);
  for (int i = 1; i < 4; ++i) star.add_edge(0, i);
  EXPECT_EQ(oracle::max_matching_boost(star), 1u);
}

TEST(Oracles, BruteAlphaStar) {
  EXPECT_TRUE(oracle::alpha_star_holds_brute(Graph::complete(6), Graph::complete(3), 1));
  // Path 0-1-2-3-4-5 has no triangle at all.
  EXPECT_FALSE(oracle::alpha_star_holds_brute(corpus::path(6), Graph::complete(3), 2));
}

TEST(Oracles, HallCondition) {
  // Left {0,1} both adjacent only to right 0: Hall fails.
  EXPECT_FALSE(oracle::hall_condition(2, 2, {{0, 0}, {1, 0}}, {0, 1}));
  EXPECT_TRUE(oracle::hall_condition(2, 2, {{0, 0}, {1, 0}, {1, 1}}, {0, 1}));
}
