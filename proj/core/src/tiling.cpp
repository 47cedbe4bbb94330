#include "tilinglab/tiling.hpp"

#include <algorithm>
#include <numeric>

namespace tilinglab {

VertexSet Tiling::covered() const {
  VertexSet out;
  for (const auto& copy : copies) out.insert(out.end(), copy.begin(), copy.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t Tiling::covered_count() const {
  return std::accumulate(copies.begin(), copies.end(), std::size_t{0},
                         [](std::size_t acc, const Embedding& e) { return acc + e.size(); });
}

void Tiling::append(const Tiling& other) {
  copies.insert(copies.end(), other.copies.begin(), other.copies.end());
}

namespace {

TilingCheck fail(std::string why) { return TilingCheck{false, std::move(why)}; }

std::string copy_label(std::size_t i) { return "copy " + std::to_string(i); }

}  // namespace

TilingCheck verify_tiling(const Graph& g, const Pattern& h, const Tiling& tiling,
                          const std::optional<VertexSet>& must_cover) {
  const std::size_t n = g.order();
  std::vector<int> owner(n, -1);
  const auto pattern_edges = h.graph().edges();
  for (std::size_t i = 0; i < tiling.copies.size(); ++i) {
    const auto& copy = tiling.copies[i];
    if (copy.size() != h.order()) {
      return fail(copy_label(i) + " has " + std::to_string(copy.size()) + " vertices, pattern has " +
                  std::to_string(h.order()));
    }
    for (Vertex v : copy) {
      if (v >= n) return fail(copy_label(i) + " uses vertex " + std::to_string(v) + " outside the graph");
      if (owner[v] == static_cast<int>(i)) {
        return fail(copy_label(i) + " is not injective: vertex " + std::to_string(v) + " repeats");
      }
      if (owner[v] >= 0) {
        return fail("copies " + std::to_string(owner[v]) + " and " + std::to_string(i) +
                    " overlap at vertex " + std::to_string(v));
      }
      owner[v] = static_cast<int>(i);
    }
    for (auto [a, b] : pattern_edges) {
      if (!g.has_edge(copy[a], copy[b])) {
        return fail(copy_label(i) + " misses edge " + std::to_string(copy[a]) + "-" +
                    std::to_string(copy[b]) + " (pattern edge " + std::to_string(a) + "-" +
                    std::to_string(b) + ")");
      }
    }
  }
  if (must_cover) {
    std::vector<bool> wanted(n, false);
    for (Vertex v : *must_cover) {
      if (v >= n) return fail("target vertex " + std::to_string(v) + " outside the graph");
      wanted[v] = true;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (wanted[v] && owner[v] < 0) return fail("vertex " + std::to_string(v) + " is not covered");
      if (!wanted[v] && owner[v] >= 0) {
        return fail("vertex " + std::to_string(v) + " is covered but lies outside the target set");
      }
    }
  }
  return {};
}

TilingCheck verify_factor(const Graph& g, const Pattern& h, const Tiling& tiling) {
  VertexSet all(g.order());
  std::iota(all.begin(), all.end(), Vertex{0});
  return verify_tiling(g, h, tiling, all);
}

}  // namespace tilinglab
