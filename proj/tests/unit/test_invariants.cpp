#include <gtest/gtest.h>

#include <numeric>

#include "support/corpus.hpp"
#include "support/oracles.hpp"
#include "tilinglab/cliques.hpp"
#include "tilinglab/generators.hpp"
#include "tilinglab/invariants.hpp"

using namespace tilinglab;

namespace {

Graph k66() { return gen_complete_multipartite(std::vector<std::size_t>{6, 6}); }
Graph k444() { return gen_complete_multipartite(std::vector<std::size_t>{4, 4, 4}); }

AlphaStarOptions exhaustive() { return AlphaStarOptions{}; }

AlphaStarOptions sampled(std::size_t trials, std::uint64_t seed) {
  AlphaStarOptions o;
  o.mode = AlphaStarMode::sampled;
  o.trials = trials;
  o.seed = seed;
  return o;
}

VertexSet all_vertices(const Graph& g) {
  VertexSet s(g.order());
  std::iota(s.begin(), s.end(), Vertex{0});
  return s;
}

}  // namespace

TEST(Degrees, Examples) {
  EXPECT_EQ(min_degree(Graph::complete(4)), 3u);
  EXPECT_EQ(min_degree(gen_complete_multipartite(std::vector<std::size_t>{3, 4, 5})), 7u);
  EXPECT_EQ(min_degree(corpus::path(3)), 1u);
  EXPECT_EQ(max_degree(corpus::path(3)), 2u);
  EXPECT_THROW(min_degree(Graph(0)), std::invalid_argument);
}

TEST(AlphaEll, Examples) {
  for (std::size_t n : {1u, 4u, 9u}) EXPECT_EQ(alpha_ell(Graph::complete(n), 2).value, 1u);
  EXPECT_EQ(alpha_ell(k66(), 3).value, 12u);
  EXPECT_EQ(alpha_ell(k66(), 2).value, 6u);
  EXPECT_EQ(alpha_ell(corpus::cycle(5), 2).value, 2u);
  EXPECT_THROW(alpha_ell(corpus::cycle(5), 1), std::invalid_argument);
}

TEST(AlphaEll, MatchesExhaustiveEnumeration) {
  std::size_t checked = 0;
  for (const auto& g : corpus::random_corpus(200, 1, 12, 2024)) {
    for (std::size_t ell : {2u, 3u, 4u}) {
      auto res = alpha_ell(g, ell);
      ASSERT_TRUE(res.exact);
      EXPECT_EQ(res.value, oracle::alpha_ell_exhaustive(g, ell));
      EXPECT_EQ(res.witness.size(), res.value);
      EXPECT_TRUE(is_vertex_set_of(res.witness, g.order()));
      EXPECT_TRUE(oracle::is_kell_free(g, res.witness, ell));
      ++checked;
    }
  }
  EXPECT_EQ(checked, 600u);
}

TEST(AlphaEll, FullVertexSetIffCliqueNumberBelowEll) {
  for (const auto& g : corpus::random_corpus(80, 1, 14, 7)) {
    const std::size_t omega = max_clique(g);
    for (std::size_t ell = 2; ell <= 5; ++ell) {
      EXPECT_EQ(alpha_ell(g, ell).value == g.order(), omega < ell);
    }
  }
}

TEST(AlphaEll, MonotoneInEll) {
  for (const auto& g : corpus::random_corpus(60, 1, 16, 8)) {
    std::size_t last = 0;
    for (std::size_t ell = 2; ell <= 6; ++ell) {
      const std::size_t a = alpha_ell(g, ell).value;
      EXPECT_GE(a, last);
      EXPECT_LE(a, g.order());
      last = a;
    }
  }
}

TEST(AlphaEll, BudgetExhaustionGivesFlaggedLowerBound) {
  Graph g = corpus::random_graph(70, 0.5, 3);
  auto cut = alpha_ell(g, 2, 10);
  EXPECT_FALSE(cut.exact);
  EXPECT_EQ(cut.witness.size(), cut.value);
  EXPECT_TRUE(oracle::is_kell_free(g, cut.witness, 2));
  EXPECT_LE(cut.value, alpha_ell(g, 2).value);
}

TEST(AlphaStar, Examples) {
  auto k9 = alpha_star_check(Graph::complete(9), Pattern::clique(3), 1, exhaustive());
  EXPECT_TRUE(k9.holds);
  auto bip = alpha_star_check(k66(), Pattern::clique(3), 4, exhaustive());
  EXPECT_FALSE(bip.holds);
  ASSERT_EQ(bip.witness.size(), 3u);
  EXPECT_TRUE(verify_alpha_star_witness(k66(), Pattern::clique(3), 4, bip.witness));
  EXPECT_THROW(alpha_star_check(k66(), Pattern::clique(3), 5, exhaustive()), std::invalid_argument);
}

TEST(AlphaStar, SampledRegressionFixture) {
  // G(60, 1/2, seed 3), s = 6, 500 sampled families with seed 9.
  auto v = alpha_star_check(gen_gnp(60, 0.5, 3), Pattern::clique(3), 6, sampled(500, 9));
  EXPECT_TRUE(v.holds);
  EXPECT_EQ(v.families_examined, 500u);
  EXPECT_EQ(v.mode, AlphaStarMode::sampled);
}

TEST(AlphaStar, CapRefusesHugeExhaustiveRuns) {
  AlphaStarOptions o;
  o.family_cap = 1000;
  EXPECT_THROW(alpha_star_check(gen_gnp(30, 0.5, 1), Pattern::clique(3), 5, o), FamilyCapExceeded);
}

TEST(AlphaStar, UpperExamples) {
  for (std::size_t n : {3u, 5u, 8u}) {
    EXPECT_EQ(alpha_star_upper(Graph::complete(n), Pattern::clique(3), exhaustive()).value, 1u);
  }
  auto none = alpha_star_upper(k66(), Pattern::clique(3), exhaustive());
  EXPECT_FALSE(none.value.has_value());
  EXPECT_EQ(none.scan.size(), 4u);
  // K_{4,4,4}: two sets inside one part block every traversing triangle
  // while 2s <= 4; at s = 3 no part can hold two of the sets.
  auto tri = alpha_star_upper(k444(), Pattern::clique(3), exhaustive());
  ASSERT_TRUE(tri.value);
  EXPECT_EQ(*tri.value, 3u);
  EXPECT_FALSE(tri.estimate);
}

TEST(AlphaStar, MatchesBruteForceOnTinyGraphs) {
  const auto patterns = {Pattern::clique(2), Pattern::clique(3), Pattern::from_graph(corpus::path(3))};
  for (const auto& g : corpus::random_corpus(60, 4, 7, 31)) {
    for (const auto& h : patterns) {
      for (std::size_t s = 1; s * h.order() <= g.order(); ++s) {
        auto v = alpha_star_check(g, h, s, exhaustive());
        EXPECT_EQ(v.holds, oracle::alpha_star_holds_brute(g, h.graph(), s));
        if (!v.holds) EXPECT_TRUE(verify_alpha_star_witness(g, h, s, v.witness));
      }
    }
  }
}

TEST(AlphaStar, HoldingIsMonotoneInS) {
  for (const auto& g : corpus::random_corpus(40, 6, 10, 5)) {
    bool held = false;
    for (std::size_t s = 1; 3 * s <= g.order(); ++s) {
      const bool now = alpha_star_check(g, Pattern::clique(3), s, exhaustive()).holds;
      if (held) EXPECT_TRUE(now);
      held = held || now;
    }
  }
}

TEST(AlphaStar, WitnessVerifierRejectsBadFamilies) {
  const Graph g = k66();
  const Pattern k3 = Pattern::clique(3);
  EXPECT_FALSE(verify_alpha_star_witness(g, k3, 2, {{0, 1}, {1, 2}, {3, 4}}));  // overlap
  EXPECT_FALSE(verify_alpha_star_witness(g, k3, 2, {{0, 1}, {2}, {3, 4}}));     // too small
  EXPECT_FALSE(verify_alpha_star_witness(g, k3, 2, {{0, 1}, {2, 3}}));          // too few
  // K_{4,4,4} with one set per part has a traversing triangle.
  EXPECT_FALSE(verify_alpha_star_witness(k444(), k3, 1, {{0}, {4}, {8}}));
  EXPECT_TRUE(verify_alpha_star_witness(k444(), k3, 1, {{0}, {1}, {8}}));
}

TEST(DensityExponent, CliquesAndCycle) {
  for (std::int64_t r = 2; r <= 7; ++r) {
    const Rational d = density_exponent(Pattern::clique(static_cast<std::size_t>(r)));
    const auto ref = oracle::density_by_edge_subsets(Graph::complete(static_cast<std::size_t>(r)));
    EXPECT_EQ(d, make_rational(r, 2));
    EXPECT_EQ(d, make_rational(ref.first, ref.second));
  }
  const Rational c4 = density_exponent(Pattern::from_graph(corpus::cycle(4)));
  EXPECT_EQ(c4, make_rational(4, 3));
  const auto ref = oracle::density_by_edge_subsets(corpus::cycle(4));
  EXPECT_EQ(c4, make_rational(ref.first, ref.second));
  EXPECT_EQ(c4.str(), "4/3");
}

TEST(DensityExponent, MatchesEdgeSubsetEnumeration) {
  for (const auto& g : corpus::random_corpus(120, 2, 7, 99)) {
    const auto ref = oracle::density_by_edge_subsets(g);
    EXPECT_EQ(density_exponent(Pattern::from_graph(g)), make_rational(ref.first, ref.second));
  }
}

TEST(Cliques, Examples) {
  EXPECT_EQ(max_clique(Graph::complete(5)), 5u);
  EXPECT_EQ(max_clique(corpus::cycle(5)), 2u);
  EXPECT_EQ(max_clique(gen_complete_multipartite(std::vector<std::size_t>{3, 4, 5})), 3u);
  EXPECT_EQ(max_clique(Graph(0)), 0u);
  EXPECT_EQ(max_clique(Graph(3)), 1u);
}

TEST(Cliques, EnumerationIsLexicographicAndComplete) {
  for (const auto& g : corpus::random_corpus(60, 1, 11, 12)) {
    for (std::size_t r = 1; r <= 4; ++r) {
      std::vector<VertexSet> brute;
      const VertexSet all = all_vertices(g);
      // All r-subsets in lexicographic order that are cliques.
      std::vector<bool> pick(g.order(), false);
      std::fill(pick.begin(), pick.begin() + std::min(r, g.order()), true);
      if (r <= g.order()) {
        do {
          VertexSet s;
          for (Vertex v = 0; v < g.order(); ++v) {
            if (pick[v]) s.push_back(v);
          }
          if (!oracle::is_kell_free(g, s, r)) brute.push_back(s);
        } while (std::prev_permutation(pick.begin(), pick.end()));
      }
      EXPECT_EQ(enumerate_cliques(g, r), brute);
      EXPECT_EQ(count_cliques(g, r), brute.size());
    }
    auto q = maximum_clique(g);
    EXPECT_EQ(q.size(), max_clique(g));
    EXPECT_TRUE(q.size() < 2 || !oracle::is_kell_free(g, q, q.size()));
    EXPECT_TRUE(oracle::is_kell_free(g, all_vertices(g), q.size() + 1));
  }
}

TEST(ComputeParams, ReportInvariants) {
  const Pattern k3 = Pattern::clique(3);
  for (const auto& g : corpus::random_corpus(20, 3, 12, 1)) {
    ParamRequest req;
    req.ells = {2, 3, 4};
    req.pattern = &k3;
    if (g.order() >= 6) req.alpha_star_s = 2;
    auto rep = compute_params(g, req);
    EXPECT_EQ(rep.n, g.order());
    EXPECT_GE(rep.max_clique, 1u);
    EXPECT_LE(rep.alpha_ell.at(2).value, rep.alpha_ell.at(3).value);
    EXPECT_LE(rep.alpha_ell.at(3).value, rep.alpha_ell.at(4).value);
    EXPECT_EQ(rep.d_h, make_rational(3, 2));
    EXPECT_EQ(rep.alpha_star.has_value(), g.order() >= 6);
  }
}
