#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "tilinglab/graph.hpp"
#include "tilinglab/tiling.hpp"

namespace tilinglab {

inline constexpr std::uint64_t kDefaultFactorBudget = 20'000'000;

enum class FactorStatus { found, none, budget_exhausted };

std::string_view to_string(FactorStatus status);

struct FactorResult {
  FactorStatus status = FactorStatus::none;
  std::optional<Tiling> tiling;
  /// Search-tree nodes visited.
  std::uint64_t nodes = 0;
};

/// Exact cover search: take the lowest uncovered vertex, try every copy through
/// it (lexicographic by vertex set), recurse. Failed vertex sets are memoised;
/// for connected patterns every component of the uncovered part must have a
/// size divisible by h. Deterministic; the budget counts search nodes.
FactorResult find_factor_exact(const Graph& g, const Pattern& h,
                               std::uint64_t budget = kDefaultFactorBudget);

/// H-factor of G[domain] in host indices.
FactorResult find_factor_in(const Graph& g, const Pattern& h, const Bitset& domain,
                            std::uint64_t budget = kDefaultFactorBudget);

struct GreedyTiling {
  Tiling tiling;
  /// Vertices neither forbidden nor covered; G[leftover] contains no copy.
  VertexSet leftover;
};

/// Visits the allowed vertices in a seeded random order and takes the first
/// copy (lexicographic) through each vertex that is still unused. One pass is
/// enough for maximality: a copy inside the final leftover would have been
/// found at its first vertex.
GreedyTiling greedy_max_tiling(const Graph& g, const Pattern& h, const VertexSet& forbidden,
                               std::uint64_t seed);

/// A copy of H with exactly one vertex in each part. Throws on overlapping
/// parts or a part count different from h.
std::optional<Embedding> find_traversing_copy(const Graph& g, const Pattern& h,
                                              const std::vector<VertexSet>& parts);

}  // namespace tilinglab
