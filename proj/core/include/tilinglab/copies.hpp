#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "tilinglab/graph.hpp"

namespace tilinglab {

/// Searches a host graph for copies of a pattern. Embeddings map pattern
/// vertex i to embedding[i]; for clique patterns the images are ascending.
class CopyFinder {
 public:
  CopyFinder(const Graph& host, const Pattern& pattern);

  const Graph& host() const noexcept { return *host_; }
  const Pattern& pattern() const noexcept { return *pattern_; }

  /// First copy inside `allowed` (lexicographic for cliques).
  std::optional<Embedding> find(const Bitset& allowed) const;

  /// First copy through v with every other vertex in `allowed`.
  std::optional<Embedding> find_containing(Vertex v, const Bitset& allowed) const;

  /// Copies through v inside allowed ∪ {v}, one per distinct vertex set,
  /// ordered lexicographically by sorted vertex set; at most `limit`.
  std::vector<Embedding> copies_containing(Vertex v, const Bitset& allowed,
                                           std::size_t limit = SIZE_MAX) const;

  /// A copy with exactly one vertex in each of the h parts (any pattern
  /// vertex may use any part). Parts must be pairwise disjoint.
  std::optional<Embedding> find_traversing(std::span<const Bitset> parts) const;

  /// Embedding of the pattern onto exactly these h vertices, if G[vertices]
  /// contains it as a spanning subgraph.
  std::optional<Embedding> embed_onto(std::span<const Vertex> vertices) const;

 private:
  using Visitor = std::function<bool(const Embedding&)>;

  // Pattern vertex orders for backtracking; orders_[p] starts at p.
  std::vector<std::vector<Vertex>> orders_;
  // back_neighbors_[p][d]: positions < d in orders_[p] adjacent to orders_[p][d].
  std::vector<std::vector<std::vector<std::size_t>>> back_neighbors_;

  bool search(std::size_t start, Embedding& image, std::vector<Vertex>& placed, std::size_t depth,
              const Bitset& allowed, Bitset& used, const Visitor& visit) const;

  const Graph* host_;
  const Pattern* pattern_;
};

}  // namespace tilinglab
