#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tilinglab/absorbing/config.hpp"
#include "tilinglab/absorbing/structure.hpp"
#include "tilinglab/exact_factor.hpp"
#include "tilinglab/hypotheses.hpp"
#include "tilinglab/tiling.hpp"

namespace tilinglab {

enum class PipelineMode { general, clique };

std::string to_string(PipelineMode mode);

struct PipelineConfig {
  PipelineMode mode = PipelineMode::clique;
  /// Clique mode: tile with K_r under the α_ℓ hypothesis.
  std::size_t r = 3;
  std::size_t ell = 2;
  double epsilon = 0.1;
  double epsilon_prime = 0.1;
  /// Absorbing-set constants; desk_config(n, h, h) when unset.
  std::optional<AbsorberConfig> absorber;
  bool check_hypotheses = true;
  /// Sampling used by the α* probe in general mode.
  AlphaStarOptions alpha_star{AlphaStarMode::sampled, 200, 0, kDefaultFamilyCap};
  std::uint64_t alpha_budget = kDefaultAlphaBudget;
  /// General mode: bound on |N_w| for the absorber builder. 0 means 5h with
  /// desk constants (absorber unset) and ⌊εn/(2h)⌋ otherwise.
  std::size_t neighborhood_size = 0;
  bool local_improvement = true;
  /// Run the exact solver after a failed stage when n <= fallback_cap.
  bool fallback = true;
  std::size_t fallback_cap = 30;
  std::uint64_t budget = kDefaultFactorBudget;
};

struct CoverResult {
  Tiling tiling;
  VertexSet leftover;
  /// ⌊ξn⌋.
  std::size_t bound = 0;
  bool bound_met = false;
  /// Local-improvement steps that each re-tiled one tile plus h leftovers.
  std::size_t improvements = 0;
};

/// Greedy maximal tiling of G - A, optionally followed by local improvement:
/// break one tile T and look for two disjoint copies inside T ∪ leftover,
/// repeated while it helps. Reports the leftover against ⌊ξn⌋.
CoverResult cover_check(const Graph& g, const Pattern& h, const VertexSet& a, double xi,
                        std::uint64_t seed, bool local_improvement = true);

struct PipelineReport {
  std::string pattern;
  PipelineMode mode = PipelineMode::clique;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::optional<HypothesisReport> hypotheses;
  bool divisible = false;
  /// Which absorbing constants were used: "paper-defaults" or "override".
  std::string constants;

  bool absorbing_built = false;
  std::optional<std::string> absorbing_failure;
  std::size_t absorbing_size = 0;
  std::size_t max_remainder = 0;
  std::optional<std::size_t> cover_leftover;
  std::size_t cover_bound = 0;
  bool leftover_bound_met = false;
  bool absorbed = false;
  std::optional<std::string> absorb_failure;

  bool fallback_used = false;
  std::optional<FactorStatus> fallback_status;

  std::optional<Tiling> tiling;
  /// "absorbing", "exact-fallback" or "none".
  std::string route = "none";
  /// First stage that failed on the absorbing route, if any.
  std::optional<std::string> failure_stage;
  std::uint64_t nodes = 0;
  double millis = 0.0;
  std::vector<std::string> notes;

  bool found() const noexcept { return tiling.has_value(); }
};

/// Absorbing set, greedy cover of the rest, absorption of the leftover, then
/// verification of the merged factor. Any emitted tiling has passed
/// verify_factor; a verifier rejection throws std::logic_error.
PipelineReport find_factor_absorbing(const Graph& g, const Pattern& h, const PipelineConfig& config,
                                     std::uint64_t seed);

}  // namespace tilinglab
