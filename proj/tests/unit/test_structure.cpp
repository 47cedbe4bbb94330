#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "support/oracles.hpp"
#include "tilinglab/absorbing/verify.hpp"
#include "tilinglab/generators.hpp"
#include "tilinglab/hypotheses.hpp"

using namespace tilinglab;

namespace {

AbsorbingStructure k60_fixture(const Graph& g) {
  CliqueBuilderOptions opts;
  opts.r = 2;
  opts.ell = 1;
  return build_absorbing_set(g, Pattern::clique(2), desk_config(60, 2, 2), clique_builder(g, opts), 1);
}

// Factor of G[cover] checked with the oracle's copy test, not the library verifier.
bool oracle_factor(const Graph& g, const Graph& h, const Tiling& t, VertexSet cover) {
  VertexSet seen;
  for (const auto& copy : t.copies) {
    VertexSet c(copy.begin(), copy.end());
    std::sort(c.begin(), c.end());
    if (!oracle::spans_copy(g, h, c)) return false;
    seen.insert(seen.end(), c.begin(), c.end());
  }
  std::sort(seen.begin(), seen.end());
  std::sort(cover.begin(), cover.end());
  return seen == cover;
}

VertexSet outside(const AbsorbingStructure& st) {
  VertexSet out;
  for (Vertex v = 0; v < st.n; ++v) {
    if (!std::binary_search(st.a.begin(), st.a.end(), v)) out.push_back(v);
  }
  return out;
}

bool mentions(const StructureCheck& c, const std::string& needle) {
  return std::any_of(c.violations.begin(), c.violations.end(),
                     [&](const std::string& v) { return v.find(needle) != std::string::npos; });
}

}  // namespace

TEST(Structure, CompleteGraphFixture) {
  const Graph g = Graph::complete(60);
  auto st = k60_fixture(g);
  EXPECT_EQ(st.m, 2u);
  EXPECT_EQ(st.y.size(), 4u);
  EXPECT_EQ(st.z.size(), 6u);
  EXPECT_EQ(st.edge_absorbers.size(), st.templ.edges.size());
  EXPECT_NE(std::find(st.notes.begin(), st.notes.end(), "desk-scale override constants in use"), st.notes.end());
  auto check = verify_structure(g, st);
  EXPECT_TRUE(check.ok());
  EXPECT_EQ(check.absorbers_checked, st.edge_absorbers.size());

  ASSERT_EQ(st.a.size() % 2, 0u);
  auto empty = absorb(g, st, {});
  EXPECT_TRUE(oracle_factor(g, Pattern::clique(2).graph(), empty, st.a));

  VertexSet free = outside(st);
  ASSERT_GE(st.max_remainder, 2u);
  VertexSet r{free[0], free[5]};
  auto two = absorb(g, st, r);
  VertexSet cover = st.a;
  cover.insert(cover.end(), r.begin(), r.end());
  EXPECT_TRUE(oracle_factor(g, Pattern::clique(2).graph(), two, cover));

  VertexSet too_many(free.begin(), free.begin() + static_cast<long>(st.max_remainder + 2));
  EXPECT_TRUE(remainder_violation(st, too_many));
  EXPECT_THROW(absorb(g, st, too_many), std::invalid_argument);
  EXPECT_THROW(absorb(g, st, {free[0]}), std::invalid_argument);
  EXPECT_THROW(absorb(g, st, {st.a[0], free[0]}), std::invalid_argument);
}

TEST(Structure, TriangleFreeHostFailsFirstStage) {
  const Graph g = gen_complete_multipartite(std::vector<std::size_t>{6, 6});
  try {
    build_absorbing_set(g, Pattern::clique(3), desk_config(12, 3, 3), clique_builder(g, {}), 1);
    FAIL() << "expected a stage failure";
  } catch (const StageFailure& e) {
    EXPECT_EQ(e.stage(), "copy-families");
    EXPECT_FALSE(e.blocking().empty());
  }
}

TEST(Structure, RandomGraphFixtureAbsorbsRandomRemainders) {
  const Graph g = gen_gnp(120, 0.7, 7);
  auto hyp = check_clique_hypotheses(g, 3, 2, 0.1, 0.1);
  ASSERT_TRUE(hyp.certified());
  CliqueBuilderOptions opts;
  opts.hypotheses = hyp;
  const Pattern k3 = Pattern::clique(3);
  auto st = build_absorbing_set(g, k3, desk_config(120, 3, 3), clique_builder(g, opts), 2);
  ASSERT_TRUE(verify_structure(g, st).ok());

  std::vector<std::size_t> sizes;
  for (std::size_t s = 0; s <= st.max_remainder; ++s) {
    if ((st.a.size() + s) % 3 == 0) sizes.push_back(s);
  }
  ASSERT_FALSE(sizes.empty());
  std::mt19937_64 rng(2024);
  VertexSet free = outside(st);
  for (int trial = 0; trial < 100; ++trial) {
    std::shuffle(free.begin(), free.end(), rng);
    const std::size_t size = sizes[static_cast<std::size_t>(trial) % sizes.size()];
    VertexSet r(free.begin(), free.begin() + static_cast<long>(size));
    std::sort(r.begin(), r.end());
    auto t = absorb(g, st, r);
    VertexSet cover = st.a;
    cover.insert(cover.end(), r.begin(), r.end());
    ASSERT_TRUE(oracle_factor(g, k3.graph(), t, cover)) << "trial " << trial;
  }
}

TEST(Structure, VerifierCatchesInjectedFaults) {
  const Graph g = Graph::complete(60);
  const auto st = k60_fixture(g);
  ASSERT_TRUE(verify_structure(g, st).ok());

  {
    auto bad = st;
    Vertex stray = outside(st).front();
    bad.edge_absorbers[0][0] = stray;
    std::sort(bad.edge_absorbers[0].begin(), bad.edge_absorbers[0].end());
    EXPECT_TRUE(mentions(verify_structure(g, bad), "A is not the union"));
  }
  {
    auto bad = st;
    bad.edge_absorbers[1] = bad.edge_absorbers[0];
    EXPECT_TRUE(mentions(verify_structure(g, bad), "overlaps"));
  }
  {
    auto bad = st;
    bad.templ.edges.erase(bad.templ.edges.begin());
    EXPECT_FALSE(verify_structure(g, bad).ok());
  }
  {
    auto bad = st;
    bad.phi2[1] = bad.phi2[0];
    EXPECT_TRUE(mentions(verify_structure(g, bad), "phi2"));
  }
  {
    auto bad = st;
    bad.max_remainder = st.x.size();
    EXPECT_TRUE(mentions(verify_structure(g, bad), "max remainder"));
  }
  {
    auto bad = st;
    auto it = std::find_if(bad.copy_families.begin(), bad.copy_families.end(),
                           [](const auto& f) { return !f.empty(); });
    ASSERT_NE(it, bad.copy_families.end());
    (*it)[0] = {outside(st).back()};
    EXPECT_TRUE(mentions(verify_structure(g, bad), "inside X"));
  }
  {
    // Same structure, host with A_0's edges deleted: A_0 is no longer an absorber.
    Graph holey = g;
    const auto& a0 = st.edge_absorbers[0];
    for (Vertex u : a0) {
      for (Vertex v : a0) {
        if (u < v) holey.remove_edge(u, v);
      }
    }
    EXPECT_TRUE(mentions(verify_structure(holey, st), "is not an (S, t)-absorber"));
  }
  {
    Graph other = Graph::complete(62);
    EXPECT_FALSE(verify_structure(other, st).ok());
  }
}

TEST(Structure, SizeLedgerArithmetic) {
  // n = 10^6, h = t = 3 at the default bindings.
  const auto c = AbsorberConfig::paper_defaults(0.2, 3, 3);
  EXPECT_DOUBLE_EQ(c.q, 0.2 / (500.0 * 9.0));
  EXPECT_DOUBLE_EQ(c.beta, c.q * c.q * 0.2 / 4.0);
  EXPECT_DOUBLE_EQ(c.xi, c.beta / 2.0);
  const std::size_t n = 1'000'000;
  const std::size_t m = 100;
  auto ledger = size_ledger(n, 3, 3, m, c.q, 0.2, 150'000);
  EXPECT_DOUBLE_EQ(ledger.htm_124, 124.0 * 9 * 100);
  EXPECT_DOUBLE_EQ(ledger.htnq_240, 240.0 * 9 * 1e6 * c.q);
  EXPECT_DOUBLE_EQ(ledger.gamma_n_half, 100'000.0);
  EXPECT_EQ(ledger.chain_holds, 124.0 * 900 < 240.0 * 9e6 * c.q && 240.0 * 9e6 * c.q <= 1e5);
  EXPECT_TRUE(ledger.within_gamma_n);
  EXPECT_FALSE(size_ledger(n, 3, 3, m, c.q, 0.2, 250'000).within_gamma_n);
}

TEST(Structure, ConfigValidation) {
  EXPECT_NO_THROW(AbsorberConfig::paper_defaults(0.2, 3, 3).validate());
  auto c = AbsorberConfig::paper_defaults(0.2, 3, 3);
  c.q = 0.3;  // breaks q = γ/(500ht) without overrides
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c.overrides = true;
  EXPECT_NO_THROW(c.validate());
}
