#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace tilinglab {

inline constexpr std::uint32_t kUnmatched = UINT32_MAX;

class BipartiteGraph {
 public:
  BipartiteGraph(std::size_t left, std::size_t right) : right_(right), adjacency_(left) {}

  std::size_t left_count() const noexcept { return adjacency_.size(); }
  std::size_t right_count() const noexcept { return right_; }
  std::size_t edge_count() const noexcept { return edges_; }

  void add_edge(std::uint32_t l, std::uint32_t r);
  const std::vector<std::uint32_t>& neighbors(std::uint32_t l) const { return adjacency_.at(l); }

 private:
  std::size_t right_;
  std::size_t edges_ = 0;
  std::vector<std::vector<std::uint32_t>> adjacency_;
};

struct BipartiteMatching {
  std::vector<std::uint32_t> left_to_right;
  std::vector<std::uint32_t> right_to_left;
  std::size_t size = 0;
};

/// Hopcroft-Karp. When `left_active` is given only those left vertices take part.
BipartiteMatching maximum_matching(const BipartiteGraph& g,
                                   const std::vector<bool>* left_active = nullptr);

}  // namespace tilinglab
