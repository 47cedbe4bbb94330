#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tilinglab/graph.hpp"
#include "tilinglab/invariants.hpp"

namespace tilinglab {

/// Each pair {u, v}, u < v in lexicographic order, is an edge with probability p.
Graph gen_gnp(std::size_t n, double p, std::uint64_t seed);

/// Vertices are assigned to parts in order: part 0 gets 0..sizes[0]-1, and so on.
Graph gen_complete_multipartite(std::span<const std::size_t> sizes);

/// K_{n/2-1} on vertices 0..n/2-2 and K_{n/2+1} on the rest.
Graph gen_two_cliques(std::size_t n);

/// Part sizes (n/3 - 1, n/3, n/3 + 1); n must be a multiple of 3, n >= 6.
std::vector<std::size_t> hs_tripartite_sizes(std::size_t n);

struct GammaGraph {
  Graph graph;
  std::size_t removed_edges = 0;
  std::size_t max_degree = 0;
  /// alpha_ell of the result; unset when the caller skipped it.
  std::optional<AlphaResult> alpha;
};

/// K_{ell+1}-free graph: samples G(n, n^(-2/(ell+1))) and then walks the
/// sample's (ell+1)-cliques in lexicographic order, deleting the smallest
/// edge of every clique that is still complete.
GammaGraph gen_gamma(std::size_t ell, std::size_t n, std::uint64_t seed,
                     bool compute_alpha = true, std::uint64_t alpha_budget = kDefaultAlphaBudget);

struct LowerBoundConstruction {
  Graph graph;
  /// Parts in vertex order; the host is complete between distinct parts.
  std::vector<VertexSet> parts;
  std::size_t x = 0;
  std::size_t y = 0;
};

/// r = x*ell + y with 1 <= y <= ell. Parts of sizes y*n/r - 1, ell*n/r + 1 and
/// x - 1 further parts of size ell*n/r, each carrying its own Gamma graph.
/// Requires 2 <= ell, 2*ell <= r and r | n.
LowerBoundConstruction gen_lower_bound_construction(std::size_t r, std::size_t ell, std::size_t n,
                                                    std::uint64_t seed);

}  // namespace tilinglab
