#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tilinglab/exact_factor.hpp"
#include "tilinglab/graph.hpp"
#include "tilinglab/hypotheses.hpp"

namespace tilinglab {

/// |S| = h, |A_S| = h*t, disjoint, and both G[A_S] and G[A_S ∪ S] have an
/// H-factor. Throws std::invalid_argument on size or overlap violations.
bool is_st_absorber(const Graph& g, const Pattern& h, const VertexSet& s, const VertexSet& a_s,
                    std::size_t t, std::uint64_t budget = kDefaultFactorBudget);

struct AbsorberFamily {
  /// Pairwise-disjoint (S, t)-absorbers, each sorted.
  std::vector<VertexSet> absorbers;
  /// Set when fewer than `target` absorbers were found: "<stage>: <detail>".
  std::optional<std::string> failure;
  std::vector<std::string> warnings;
  std::size_t attempts = 0;

  bool complete(std::size_t target) const { return absorbers.size() >= target; }
};

/// Finds up to `target` disjoint (S, t)-absorbers avoiding `avoid` (an empty
/// bitset means nothing is avoided).
using AbsorberFamilyBuilder = std::function<AbsorberFamily(
    const VertexSet& s, std::size_t target, const Bitset& avoid, std::uint64_t seed)>;

struct GeneralBuilderOptions {
  double epsilon = 0.1;
  double epsilon_prime = 0.1;
  /// Upper bound on |N_w|; 0 means ⌊εn/(2h)⌋. Smaller N_w are accepted
  /// down to h vertices when free neighbours run out.
  std::size_t neighborhood_size = 0;
  /// Re-verify every absorber with the exact oracle.
  bool verify = true;
  /// Precomputed hypothesis report; warnings are derived from it when present.
  std::optional<HypothesisReport> hypotheses;
};

/// (S, h)-absorbers: disjoint N_w ⊆ N(w) \ S for w ∈ S, a greedy tiling of
/// each G[N_w] with one designated vertex per copy (V_w), then traversing
/// copies across the V_w. A traversing copy T plus the h designated copies
/// it meets is an absorber: without S the designated copies tile it, with S
/// each w replaces its designated vertex and T is the extra copy.
AbsorberFamily disjoint_absorber_family_general(const Graph& g, const Pattern& h,
                                                const VertexSet& s, std::size_t target,
                                                const GeneralBuilderOptions& options,
                                                const Bitset& avoid = {}, std::uint64_t seed = 0);

struct CliqueBuilderOptions {
  std::size_t r = 3;
  std::size_t ell = 2;
  double epsilon = 0.1;
  double epsilon_prime = 0.1;
  std::size_t partition_attempts = 20;
  /// K_r candidates tried per absorber after the greedy descent one.
  std::size_t clique_candidates = 64;
  bool verify = true;
  std::optional<HypothesisReport> hypotheses;
};

/// (S, r)-absorbers for K_r: random partition of the free vertices into
/// V_1..V_{r+1}; a K_r w_1..w_r in V_{r+1} by common-neighbourhood descent
/// (greedy K_{r-ℓ}, then a K_ℓ by enumeration); for each i a K_{r-1} in
/// N(v_i) ∩ N(w_i) ∩ V_i. The labelling of the w's is chosen by matching.
AbsorberFamily disjoint_absorber_family_clique(const Graph& g, const VertexSet& s,
                                               std::size_t target,
                                               const CliqueBuilderOptions& options,
                                               std::uint64_t seed, const Bitset& avoid = {});

AbsorberFamilyBuilder general_builder(const Graph& g, const Pattern& h, GeneralBuilderOptions options);
AbsorberFamilyBuilder clique_builder(const Graph& g, CliqueBuilderOptions options);

}  // namespace tilinglab
