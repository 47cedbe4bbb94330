#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tilinglab/graph.hpp"

namespace tilinglab {

/// Vertex-disjoint copies of a pattern; copies[i][p] is the image of pattern vertex p.
struct Tiling {
  std::vector<Embedding> copies;

  /// Union of all images, sorted.
  VertexSet covered() const;
  std::size_t covered_count() const;
  void append(const Tiling& other);
  friend bool operator==(const Tiling&, const Tiling&) = default;
};

struct TilingCheck {
  bool ok = true;
  /// Names the first violated invariant.
  std::string violation;

  explicit operator bool() const noexcept { return ok; }
};

/// Independent checker: image sizes, vertex range, injectivity, pairwise
/// disjointness and edge preservation. With `must_cover` the tiling must also
/// cover exactly that set, i.e. be an H-factor of G[must_cover].
TilingCheck verify_tiling(const Graph& g, const Pattern& h, const Tiling& tiling,
                          const std::optional<VertexSet>& must_cover = std::nullopt);

/// verify_tiling with must_cover = V(G).
TilingCheck verify_factor(const Graph& g, const Pattern& h, const Tiling& tiling);

}  // namespace tilinglab
