#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "support/corpus.hpp"
#include "support/oracles.hpp"
#include "tilinglab/absorbing/absorbers.hpp"
#include "tilinglab/generators.hpp"
#include "tilinglab/hypotheses.hpp"

using namespace tilinglab;

namespace {

Graph multipartite(std::vector<std::size_t> sizes) { return gen_complete_multipartite(sizes); }

bool oracle_absorber(const Graph& g, const Graph& h, const VertexSet& s, const VertexSet& a) {
  VertexSet with(a);
  with.insert(with.end(), s.begin(), s.end());
  std::sort(with.begin(), with.end());
  return oracle::has_factor_on(g, h, a) && oracle::has_factor_on(g, h, with);
}

void expect_family(const Graph& g, const Pattern& h, const VertexSet& s, const AbsorberFamily& fam,
                   std::size_t t) {
  std::vector<bool> seen(g.order(), false);
  for (Vertex v : s) seen[v] = true;
  for (const auto& a : fam.absorbers) {
    EXPECT_EQ(a.size(), h.order() * t);
    for (Vertex v : a) {
      EXPECT_FALSE(seen[v]) << "vertex " << v << " reused";
      seen[v] = true;
    }
    if (a.size() <= 12) EXPECT_TRUE(oracle_absorber(g, h.graph(), s, a));
    EXPECT_TRUE(is_st_absorber(g, h, s, a, t));
  }
}

}  // namespace

TEST(IsStAbsorber, Examples) {
  const Pattern k3 = Pattern::clique(3);
  EXPECT_TRUE(is_st_absorber(Graph::complete(9), k3, {0, 4, 8}, {1, 2, 3}, 1));
  EXPECT_FALSE(is_st_absorber(multipartite({6, 6}), k3, {0, 1, 6}, {2, 7, 8}, 1));
  // S inside one part of K_{4,4,4}: G[A ∪ S] has at most 3 + 2 vertices per part
  // usable by 2 triangles, never a factor.
  const Graph k444 = multipartite({4, 4, 4});
  for (const VertexSet& a : {VertexSet{4, 5, 6}, VertexSet{3, 4, 8}, VertexSet{4, 8, 9}}) {
    EXPECT_FALSE(is_st_absorber(k444, k3, {0, 1, 2}, a, 1));
    EXPECT_FALSE(oracle_absorber(k444, k3.graph(), {0, 1, 2}, a));
  }
}

TEST(IsStAbsorber, Guards) {
  const Pattern k3 = Pattern::clique(3);
  const Graph k9 = Graph::complete(9);
  EXPECT_THROW(is_st_absorber(k9, k3, {0, 1}, {2, 3, 4}, 1), std::invalid_argument);
  EXPECT_THROW(is_st_absorber(k9, k3, {0, 1, 2}, {2, 3, 4}, 1), std::invalid_argument);
  EXPECT_THROW(is_st_absorber(k9, k3, {0, 1, 2}, {3, 4, 5}, 2), std::invalid_argument);
  EXPECT_THROW(is_st_absorber(k9, k3, {0, 1, 2}, {3, 4, 12}, 1), std::invalid_argument);
}

TEST(IsStAbsorber, AgreesWithOracleAndIgnoresOrderOfS) {
  std::size_t positives = 0;
  std::mt19937_64 rng(3);
  for (const auto& g : corpus::random_corpus(120, 9, 9, 41)) {
    std::vector<Vertex> perm(9);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    VertexSet s(perm.begin(), perm.begin() + 3);
    VertexSet a(perm.begin() + 3, perm.end());
    std::sort(a.begin(), a.end());
    const bool expected = oracle_absorber(g, Pattern::clique(3).graph(), s, a);
    positives += expected ? 1 : 0;
    std::sort(s.begin(), s.end());
    do {
      EXPECT_EQ(is_st_absorber(g, Pattern::clique(3), s, a, 2), expected);
    } while (std::next_permutation(s.begin(), s.end()));
  }
  EXPECT_GT(positives, 5u);
}

TEST(GeneralAbsorbers, CompleteGraph) {
  const Graph k30 = Graph::complete(30);
  const Pattern k3 = Pattern::clique(3);
  // ⌊εn/(2h)⌋ = 0 at n = 30.
  auto none = disjoint_absorber_family_general(k30, k3, {0, 1, 2}, 2, GeneralBuilderOptions{});
  ASSERT_TRUE(none.failure);
  EXPECT_EQ(none.failure->rfind("neighbourhood", 0), 0u);

  GeneralBuilderOptions opts;
  opts.neighborhood_size = 6;
  auto fam = disjoint_absorber_family_general(k30, k3, {0, 1, 2}, 2, opts);
  EXPECT_FALSE(fam.failure);
  ASSERT_EQ(fam.absorbers.size(), 2u);
  expect_family(k30, k3, {0, 1, 2}, fam, 3);
}

TEST(GeneralAbsorbers, RandomGraphFixture) {
  const Graph g = gen_gnp(90, 0.6, 5);
  const Pattern k3 = Pattern::clique(3);
  GeneralBuilderOptions opts;
  opts.neighborhood_size = 18;
  const VertexSet s{3, 40, 77};
  auto fam = disjoint_absorber_family_general(g, k3, s, 5, opts, {}, 1);
  EXPECT_FALSE(fam.failure) << *fam.failure;
  ASSERT_EQ(fam.absorbers.size(), 5u);
  expect_family(g, k3, s, fam, 3);
}

TEST(GeneralAbsorbers, TriangleFreeHostFailsAtTraversal) {
  GeneralBuilderOptions opts;
  opts.neighborhood_size = 3;
  auto fam = disjoint_absorber_family_general(multipartite({9, 9}), Pattern::clique(3), {0, 1, 9}, 1, opts);
  EXPECT_TRUE(fam.absorbers.empty());
  ASSERT_TRUE(fam.failure);
  EXPECT_EQ(fam.failure->rfind("traversing-copy", 0), 0u) << *fam.failure;
}

TEST(GeneralAbsorbers, AvoidSetIsRespected) {
  const Graph k30 = Graph::complete(30);
  GeneralBuilderOptions opts;
  opts.neighborhood_size = 3;
  Bitset avoid(30);
  for (Vertex v = 3; v < 15; ++v) avoid.set(v);
  auto fam = disjoint_absorber_family_general(k30, Pattern::clique(3), {0, 1, 2}, 1, opts, avoid);
  ASSERT_EQ(fam.absorbers.size(), 1u);
  for (Vertex v : fam.absorbers[0]) EXPECT_FALSE(avoid.test(v));
}

TEST(CliqueAbsorbers, CompleteGraph) {
  const Graph k40 = Graph::complete(40);
  auto fam = disjoint_absorber_family_clique(k40, {0, 1, 2}, 3, CliqueBuilderOptions{}, 1);
  EXPECT_FALSE(fam.failure);
  ASSERT_EQ(fam.absorbers.size(), 3u);
  expect_family(k40, Pattern::clique(3), {0, 1, 2}, fam, 3);
}

TEST(CliqueAbsorbers, StaysInsideTheCliqueOfS) {
  const Graph g = gen_two_cliques(40);  // K_19 ⊔ K_21
  const VertexSet s{19, 25, 30};
  auto fam = disjoint_absorber_family_clique(g, s, 1, CliqueBuilderOptions{}, 2);
  ASSERT_EQ(fam.absorbers.size(), 1u);
  for (Vertex v : fam.absorbers[0]) EXPECT_GE(v, 19u);
  expect_family(g, Pattern::clique(3), s, fam, 3);
}

TEST(CliqueAbsorbers, LargeIndependentPartDefeatsTheBuilder) {
  const Graph g = multipartite({13, 13, 14});
  auto rep = check_clique_hypotheses(g, 3, 2, 0.1, 0.1);
  EXPECT_EQ(rep.independence, Verdict::violated);
  EXPECT_EQ(rep.alpha->value, 14u);
  CliqueBuilderOptions opts;
  opts.hypotheses = rep;
  auto fam = disjoint_absorber_family_clique(g, {0, 1, 2}, 1, opts, 3);
  EXPECT_TRUE(fam.absorbers.empty());
  ASSERT_TRUE(fam.failure);
  EXPECT_EQ(fam.failure->rfind("common-neighbourhood", 0), 0u);
  EXPECT_EQ(fam.attempts, opts.partition_attempts);
  EXPECT_TRUE(std::any_of(fam.warnings.begin(), fam.warnings.end(), [](const std::string& w) {
    return w.find("independence hypothesis violated") != std::string::npos;
  }));
}

TEST(CliqueAbsorbers, Guards) {
  const Graph k9 = Graph::complete(9);
  EXPECT_THROW(disjoint_absorber_family_clique(k9, {0, 1}, 1, CliqueBuilderOptions{}, 0), std::invalid_argument);
  CliqueBuilderOptions bad;
  bad.ell = 4;
  EXPECT_THROW(disjoint_absorber_family_clique(k9, {0, 1, 2}, 1, bad, 0), std::invalid_argument);
}
