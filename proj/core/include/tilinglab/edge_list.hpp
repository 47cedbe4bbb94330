#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tilinglab/graph.hpp"

namespace tilinglab {

/// Raised for malformed edge-list documents; line() is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Edge-list format:
//   n m
//   u v      (m lines, 0 <= u, v < n, u != v)
// Blank lines are ignored. Duplicate edges collapse to one edge.
Graph parse_graph(std::string_view text);

/// Header plus one "u v" line per edge (u < v, lexicographic), '\n' separated.
std::string emit_graph(const Graph& g);

Graph read_graph_file(const std::filesystem::path& path);
void write_graph_file(const std::filesystem::path& path, const Graph& g);

/// Accepts "K<r>", "C<k>", "P<k>" (k vertices) or "file:<path>" / a path to
/// an edge-list file describing H.
Pattern parse_pattern_spec(std::string_view spec);

}  // namespace tilinglab
