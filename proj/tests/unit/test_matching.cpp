#include <gtest/gtest.h>

#include <random>

#include "support/oracles.hpp"
#include "tilinglab/matching.hpp"

using namespace tilinglab;

namespace {

// The bipartite graph as an ordinary graph: left i -> i, right j -> left + j.
Graph as_graph(const BipartiteGraph& b, const std::vector<bool>* active = nullptr) {
  Graph g(b.left_count() + b.right_count());
  for (std::uint32_t l = 0; l < b.left_count(); ++l) {
    if (active && !(*active)[l]) continue;
    for (auto r : b.neighbors(l)) g.add_edge(l, static_cast<Vertex>(b.left_count() + r));
  }
  return g;
}

void expect_valid(const BipartiteGraph& b, const BipartiteMatching& m) {
  std::size_t count = 0;
  for (std::uint32_t l = 0; l < b.left_count(); ++l) {
    const auto r = m.left_to_right[l];
    if (r == kUnmatched) continue;
    ++count;
    ASSERT_LT(r, b.right_count());
    EXPECT_EQ(m.right_to_left[r], l);
    const auto& nb = b.neighbors(l);
    EXPECT_NE(std::find(nb.begin(), nb.end(), r), nb.end());
  }
  EXPECT_EQ(count, m.size);
}

}  // namespace

TEST(HopcroftKarp, SmallCases) {
  BipartiteGraph b(3, 3);
  b.add_edge(0, 0);
  b.add_edge(1, 0);
  b.add_edge(2, 0);
  EXPECT_EQ(maximum_matching(b).size, 1u);
  b.add_edge(1, 1);
  b.add_edge(2, 2);
  auto m = maximum_matching(b);
  EXPECT_EQ(m.size, 3u);
  expect_valid(b, m);
}

TEST(HopcroftKarp, MatchesEdmondsOnRandomGraphs) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t left = 1 + rng() % 20;
    const std::size_t right = 1 + rng() % 20;
    const double p = (1 + rng() % 8) / 20.0;
    BipartiteGraph b(left, right);
    std::uniform_real_distribution<double> coin(0, 1);
    for (std::uint32_t l = 0; l < left; ++l) {
      for (std::uint32_t r = 0; r < right; ++r) {
        if (coin(rng) < p) b.add_edge(l, r);
      }
    }
    auto m = maximum_matching(b);
    expect_valid(b, m);
    EXPECT_EQ(m.size, oracle::max_matching_boost(as_graph(b)));

    std::vector<bool> active(left);
    for (std::size_t i = 0; i < left; ++i) active[i] = rng() % 2;
    auto part = maximum_matching(b, &active);
    expect_valid(b, part);
    for (std::uint32_t l = 0; l < left; ++l) {
      if (!active[l]) EXPECT_EQ(part.left_to_right[l], kUnmatched);
    }
    EXPECT_EQ(part.size, oracle::max_matching_boost(as_graph(b, &active)));
  }
}
