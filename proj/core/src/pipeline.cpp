#include "tilinglab/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "tilinglab/absorbing/absorbers.hpp"
#include "tilinglab/copies.hpp"
#include "tilinglab/rng.hpp"

namespace tilinglab {

std::string to_string(PipelineMode mode) {
  return mode == PipelineMode::general ? "general" : "clique";
}

namespace {

// Two disjoint copies inside `domain`, if any.
std::optional<std::pair<Embedding, Embedding>> two_copies(const CopyFinder& finder, Bitset domain) {
  const std::size_t k = finder.pattern().order();
  while (domain.count() >= 2 * k) {
    const auto u = static_cast<Vertex>(domain.find_first());
    Bitset rest = domain;
    rest.reset(u);
    for (const auto& first : finder.copies_containing(u, rest)) {
      Bitset other = domain;
      for (Vertex v : first) other.reset(v);
      if (auto second = finder.find(other)) return std::pair{first, *second};
    }
    // Every pair using u has been tried.
    domain.reset(u);
  }
  return std::nullopt;
}

}  // namespace

CoverResult cover_check(const Graph& g, const Pattern& h, const VertexSet& a, double xi,
                        std::uint64_t seed, bool local_improvement) {
  const std::size_t n = g.order();
  const std::size_t k = h.order();
  CoverResult out;
  auto greedy = greedy_max_tiling(g, h, a, derive_seed(seed, stream_tag("cover")));
  out.tiling = std::move(greedy.tiling);
  out.leftover = std::move(greedy.leftover);

  if (local_improvement && out.leftover.size() >= k) {
    CopyFinder finder(g, h);
    bool improved = true;
    while (improved && out.leftover.size() >= k) {
      improved = false;
      const Bitset left = to_bitset(out.leftover, n);
      for (std::size_t i = 0; i < out.tiling.copies.size(); ++i) {
        Bitset domain = left;
        for (Vertex v : out.tiling.copies[i]) domain.set(v);
        auto pair = two_copies(finder, domain);
        if (!pair) continue;
        out.tiling.copies[i] = std::move(pair->first);
        out.tiling.copies.push_back(std::move(pair->second));
        Bitset rest = domain;
        for (Vertex v : out.tiling.copies[i]) rest.reset(v);
        for (Vertex v : out.tiling.copies.back()) rest.reset(v);
        // The leftover may still host copies after the swap; take them greedily.
        for (auto c = finder.find(rest); c; c = finder.find(rest)) {
          for (Vertex v : *c) rest.reset(v);
          out.tiling.copies.push_back(std::move(*c));
        }
        out.leftover = to_vertex_set(rest);
        ++out.improvements;
        improved = true;
        break;
      }
    }
  }
  out.bound = static_cast<std::size_t>(std::floor(xi * static_cast<double>(n) + 1e-9));
  out.bound_met = out.leftover.size() <= out.bound;
  return out;
}

PipelineReport find_factor_absorbing(const Graph& g, const Pattern& h, const PipelineConfig& config,
                                     std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = g.order();
  const std::size_t k = h.order();
  PipelineReport rep;
  rep.pattern = h.name();
  rep.mode = config.mode;
  rep.n = n;
  rep.seed = seed;
  if (config.mode == PipelineMode::clique && (!h.is_clique() || k != config.r)) {
    throw std::invalid_argument("clique mode needs H = K_r");
  }

  auto finish = [&]() -> PipelineReport {
    rep.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
  };
  auto fail = [&](const std::string& stage) {
    if (!rep.failure_stage) rep.failure_stage = stage;
  };

  if (config.check_hypotheses && n > 0) {
    if (config.mode == PipelineMode::clique) {
      rep.hypotheses = check_clique_hypotheses(g, config.r, config.ell, config.epsilon,
                                               config.epsilon_prime, config.alpha_budget);
    } else {
      AlphaStarOptions probe = config.alpha_star;
      probe.seed = derive_seed(seed, stream_tag("alpha-star-probe"));
      rep.hypotheses = check_general_hypotheses(g, h, config.epsilon, config.epsilon_prime, probe);
    }
  }

  rep.divisible = n > 0 && n % k == 0;
  if (!rep.divisible) {
    fail("divisibility");
    rep.notes.push_back("h = " + std::to_string(k) + " does not divide n = " + std::to_string(n));
    return finish();
  }

  const AbsorberConfig ac = config.absorber ? *config.absorber : desk_config(n, k, k);
  rep.constants = ac.overrides ? "override" : "paper-defaults";
  AbsorberFamilyBuilder builder;
  if (config.mode == PipelineMode::clique) {
    CliqueBuilderOptions opts;
    opts.r = config.r;
    opts.ell = config.ell;
    opts.epsilon = config.epsilon;
    opts.epsilon_prime = config.epsilon_prime;
    opts.partition_attempts = ac.partition_attempts;
    opts.hypotheses = rep.hypotheses;
    builder = clique_builder(g, opts);
  } else {
    GeneralBuilderOptions opts;
    opts.epsilon = config.epsilon;
    opts.epsilon_prime = config.epsilon_prime;
    opts.neighborhood_size = config.neighborhood_size || config.absorber ? config.neighborhood_size : 5 * k;
    opts.hypotheses = rep.hypotheses;
    builder = general_builder(g, h, opts);
  }

  std::optional<AbsorbingStructure> st;
  try {
    st = build_absorbing_set(g, h, ac, builder, derive_seed(seed, stream_tag("absorbing-set")));
    rep.absorbing_built = true;
    rep.absorbing_size = st->a.size();
    rep.max_remainder = st->max_remainder;
  } catch (const StageFailure& e) {
    rep.absorbing_failure = e.what();
    fail("absorbing-set/" + e.stage());
  } catch (const std::invalid_argument& e) {
    rep.absorbing_failure = e.what();
    fail("absorbing-set/config");
  }

  if (st) {
    auto cover = cover_check(g, h, st->a, ac.xi, derive_seed(seed, stream_tag("cover-check")),
                             config.local_improvement);
    rep.cover_leftover = cover.leftover.size();
    rep.cover_bound = cover.bound;
    rep.leftover_bound_met = cover.bound_met;
    if (auto why = remainder_violation(*st, cover.leftover)) {
      rep.absorb_failure = *why;
      fail("cover");
    } else {
      try {
        Tiling tiling = absorb(g, *st, cover.leftover, config.budget);
        tiling.append(cover.tiling);
        if (auto check = verify_factor(g, h, tiling); !check) {
          throw std::logic_error("pipeline produced an invalid factor: " + check.violation);
        }
        rep.absorbed = true;
        rep.tiling = std::move(tiling);
        rep.route = "absorbing";
      } catch (const AbsorbError& e) {
        rep.absorb_failure = e.what();
        fail("absorb/" + e.stage());
      }
    }
  }

  if (!rep.tiling && config.fallback) {
    if (n <= config.fallback_cap) {
      rep.fallback_used = true;
      auto exact = find_factor_exact(g, h, config.budget);
      rep.fallback_status = exact.status;
      rep.nodes += exact.nodes;
      if (exact.tiling) {
        if (auto check = verify_factor(g, h, *exact.tiling); !check) {
          throw std::logic_error("exact solver produced an invalid factor: " + check.violation);
        }
        rep.tiling = std::move(exact.tiling);
        rep.route = "exact-fallback";
      }
    } else {
      rep.notes.push_back("exact fallback skipped: n = " + std::to_string(n) + " exceeds cap " +
                          std::to_string(config.fallback_cap));
    }
  }
  return finish();
}

}  // namespace tilinglab
