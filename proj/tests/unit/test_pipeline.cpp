#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "support/corpus.hpp"
#include "support/oracles.hpp"
#include "tilinglab/generators.hpp"
#include "tilinglab/pipeline.hpp"

using namespace tilinglab;

namespace {

bool oracle_factor(const Graph& g, const Graph& h, const Tiling& t) {
  VertexSet seen;
  for (const auto& copy : t.copies) {
    VertexSet c(copy.begin(), copy.end());
    std::sort(c.begin(), c.end());
    if (!oracle::spans_copy(g, h, c)) return false;
    seen.insert(seen.end(), c.begin(), c.end());
  }
  std::sort(seen.begin(), seen.end());
  return seen.size() == g.order() && std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

// The clique hypotheses need r > ell >= 2, so K_2 runs in general mode.
PipelineConfig clique_config(std::size_t r) {
  PipelineConfig c;
  c.r = r;
  c.ell = 2;
  if (r == 2) c.mode = PipelineMode::general;
  return c;
}

}  // namespace

TEST(CoverCheck, Examples) {
  auto k30 = cover_check(Graph::complete(30), Pattern::clique(3), {0, 1, 2, 3, 4, 5}, 0.1, 1);
  EXPECT_TRUE(k30.leftover.empty());
  EXPECT_EQ(k30.tiling.copies.size(), 8u);
  EXPECT_EQ(k30.bound, 3u);
  EXPECT_TRUE(k30.bound_met);

  auto k66 = cover_check(gen_complete_multipartite(std::vector<std::size_t>{6, 6}), Pattern::clique(3), {}, 0.1, 1);
  EXPECT_EQ(k66.leftover.size(), 12u);
  EXPECT_FALSE(k66.bound_met);
}

TEST(CoverCheck, RandomGraphFixtureAgainstAlphaStar) {
  const Graph g = gen_gnp(90, 0.6, 5);
  const Pattern k3 = Pattern::clique(3);
  std::mt19937_64 rng(5);
  VertexSet all(90);
  std::iota(all.begin(), all.end(), Vertex{0});
  std::shuffle(all.begin(), all.end(), rng);
  VertexSet a(all.begin(), all.begin() + 9);
  std::sort(a.begin(), a.end());

  auto cover = cover_check(g, k3, a, 0.1, 5);
  EXPECT_EQ(cover.bound, 9u);
  EXPECT_LE(cover.leftover.size(), 9u);
  EXPECT_TRUE(verify_tiling(g, k3, cover.tiling));
  for (Vertex v : cover.leftover) EXPECT_FALSE(std::binary_search(a.begin(), a.end(), v));

  AlphaStarOptions probe{AlphaStarMode::sampled, 200, 1, kDefaultFamilyCap};
  auto upper = alpha_star_upper(g, k3, probe);
  ASSERT_TRUE(upper.value);
  EXPECT_LT(cover.leftover.size(), 3 * *upper.value);
  EXPECT_FALSE(oracle::contains_copy(g, k3.graph(), cover.leftover));
}

TEST(CoverCheck, LocalImprovementNeverHurts) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = gen_gnp(36, 0.35, seed);
    auto plain = cover_check(g, Pattern::clique(3), {}, 0.1, seed, false);
    auto improved = cover_check(g, Pattern::clique(3), {}, 0.1, seed, true);
    EXPECT_LE(improved.leftover.size(), plain.leftover.size());
    EXPECT_EQ(improved.leftover.size() + 3 * improved.tiling.copies.size(), 36u);
    EXPECT_TRUE(verify_tiling(g, Pattern::clique(3), improved.tiling));
    EXPECT_FALSE(oracle::contains_copy(g, Pattern::clique(3).graph(), improved.leftover));
  }
}

TEST(Pipeline, CompleteGraphs) {
  // K_30 is too small to hold a structure; the exact solver takes over.
  auto small = find_factor_absorbing(Graph::complete(30), Pattern::clique(3), clique_config(3), 1);
  ASSERT_TRUE(small.found());
  EXPECT_EQ(small.route, "exact-fallback");
  EXPECT_EQ(small.failure_stage.value_or(""), "absorbing-set/template");
  EXPECT_TRUE(oracle_factor(Graph::complete(30), Pattern::clique(3).graph(), *small.tiling));

  for (std::size_t n : {60, 90}) {
    auto rep = find_factor_absorbing(Graph::complete(n), Pattern::clique(3), clique_config(3), 1);
    ASSERT_TRUE(rep.found()) << n;
    EXPECT_EQ(rep.route, "absorbing");
    EXPECT_TRUE(rep.absorbed);
    EXPECT_TRUE(rep.leftover_bound_met);
    EXPECT_LE(*rep.cover_leftover, rep.max_remainder);
    EXPECT_EQ(rep.constants, "override");
    EXPECT_TRUE(oracle_factor(Graph::complete(n), Pattern::clique(3).graph(), *rep.tiling));
  }
}

TEST(Pipeline, TripartiteCounterexample) {
  const Graph g = gen_complete_multipartite(std::vector<std::size_t>{3, 4, 5});
  auto rep = find_factor_absorbing(g, Pattern::clique(3), clique_config(3), 1);
  EXPECT_FALSE(rep.found());
  EXPECT_EQ(rep.route, "none");
  ASSERT_TRUE(rep.failure_stage);
  EXPECT_EQ(rep.failure_stage->rfind("absorbing-set/", 0), 0u);
  EXPECT_TRUE(rep.fallback_used);
  EXPECT_EQ(rep.fallback_status, FactorStatus::none);
  EXPECT_FALSE(oracle::has_factor_by_partitions(g, Pattern::clique(3).graph()));
  ASSERT_TRUE(rep.hypotheses);
  EXPECT_FALSE(rep.hypotheses->degree_held);
}

TEST(Pipeline, TwoCliquesSensitivity) {
  for (std::size_t n : {12, 18, 24}) {
    const Graph g = gen_two_cliques(n);
    ASSERT_NE((n / 2 - 1) % 3, 0u);
    auto rep = find_factor_absorbing(g, Pattern::clique(3), clique_config(3), 3);
    EXPECT_FALSE(rep.found()) << n;
    EXPECT_EQ(rep.fallback_status, FactorStatus::none);
    EXPECT_EQ(find_factor_exact(g, Pattern::clique(3)).status, FactorStatus::none);
  }
}

TEST(Pipeline, IndivisibleOrderStopsImmediately) {
  auto rep = find_factor_absorbing(Graph::complete(10), Pattern::clique(3), clique_config(3), 1);
  EXPECT_FALSE(rep.divisible);
  EXPECT_EQ(rep.failure_stage.value_or(""), "divisibility");
  EXPECT_FALSE(rep.fallback_used);
  EXPECT_FALSE(rep.absorbing_built);
}

TEST(Pipeline, PositiveControls) {
  for (std::size_t r = 2; r <= 6; ++r) {
    for (std::size_t n = r; n <= 24; n += r) {
      auto rep = find_factor_absorbing(Graph::complete(n), Pattern::clique(r), clique_config(r), n);
      ASSERT_TRUE(rep.found()) << "K_" << n << " / K_" << r;
      EXPECT_TRUE(oracle_factor(Graph::complete(n), Pattern::clique(r).graph(), *rep.tiling));
    }
    for (std::size_t part = 1; part * r <= 24; ++part) {
      const Graph g = gen_complete_multipartite(std::vector<std::size_t>(r, part));
      auto rep = find_factor_absorbing(g, Pattern::clique(r), clique_config(r), part);
      ASSERT_TRUE(rep.found()) << r << " parts of " << part;
      EXPECT_TRUE(oracle_factor(g, Pattern::clique(r).graph(), *rep.tiling));
    }
  }
}

TEST(Pipeline, RandomGraphFixture) {
  // First seed from 9 on whose G(120, 0.7) certifies both hypotheses at 0.1.
  const Graph g = gen_gnp(120, 0.7, 14);
  auto rep = find_factor_absorbing(g, Pattern::clique(3), clique_config(3), 2);
  ASSERT_TRUE(rep.hypotheses);
  EXPECT_TRUE(rep.hypotheses->certified());
  ASSERT_TRUE(rep.found()) << rep.failure_stage.value_or("");
  EXPECT_EQ(rep.route, "absorbing");
  EXPECT_TRUE(oracle_factor(g, Pattern::clique(3).graph(), *rep.tiling));
}

TEST(Pipeline, GeneralModeOnRandomGraph) {
  const Graph g = gen_gnp(120, 0.7, 14);
  PipelineConfig config;
  config.mode = PipelineMode::general;
  config.alpha_star.trials = 50;
  auto rep = find_factor_absorbing(g, Pattern::clique(3), config, 2);
  ASSERT_TRUE(rep.found()) << rep.failure_stage.value_or("");
  EXPECT_EQ(rep.route, "absorbing");
  EXPECT_EQ(rep.hypotheses->theorem, "general");
  EXPECT_TRUE(oracle_factor(g, Pattern::clique(3).graph(), *rep.tiling));
}

TEST(Pipeline, AgreementAndMonotoneSanity) {
  std::mt19937_64 rng(17);
  std::size_t successes = 0;
  for (const auto& g : corpus::random_corpus(600, 6, 24, 23)) {
    if (g.order() % 3 != 0) continue;
    auto rep = find_factor_absorbing(g, Pattern::clique(3), clique_config(3), successes);
    if (!rep.found()) continue;
    EXPECT_EQ(find_factor_exact(g, Pattern::clique(3)).status, FactorStatus::found);
    if (successes++ >= 50) continue;
    Graph denser = g;
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(g.order() - 1));
    for (int i = 0; i < 10; ++i) {
      Vertex u = pick(rng), v = pick(rng);
      if (u != v) denser.add_edge(u, v);
    }
    EXPECT_EQ(find_factor_exact(denser, Pattern::clique(3)).status, FactorStatus::found);
  }
  EXPECT_GE(successes, 50u);
}

TEST(Pipeline, ModeNames) {
  EXPECT_EQ(to_string(PipelineMode::general), "general");
  EXPECT_EQ(to_string(PipelineMode::clique), "clique");
}
