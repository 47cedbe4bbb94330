#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "tilinglab/graph.hpp"

namespace tilinglab {

/// Receives each clique as an ascending vertex list; return false to stop.
using CliqueVisitor = std::function<bool(std::span<const Vertex>)>;

/// Visits every r-clique of G[within] in lexicographic order.
/// Returns false if the visitor stopped the enumeration.
bool for_each_clique(const Graph& g, std::size_t r, const Bitset& within,
                     const CliqueVisitor& visit);

std::vector<VertexSet> enumerate_cliques(const Graph& g, std::size_t r);

/// Lexicographically first r-clique inside `within`.
std::optional<VertexSet> find_clique(const Graph& g, std::size_t r, const Bitset& within);

std::size_t count_cliques(const Graph& g, std::size_t r);

/// Maximum clique by colour-bounded branch and bound. Deterministic.
VertexSet maximum_clique(const Graph& g);
std::size_t max_clique(const Graph& g);

}  // namespace tilinglab
