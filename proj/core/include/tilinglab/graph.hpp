#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace tilinglab {

using Vertex = std::uint32_t;

/// Sorted, duplicate-free list of vertex indices of some host graph.
using VertexSet = std::vector<Vertex>;

using Bitset = boost::dynamic_bitset<std::uint64_t>;

using Edge = std::pair<Vertex, Vertex>;

/// Image of each pattern vertex, indexed by pattern vertex.
using Embedding = std::vector<Vertex>;

template <class F>
void for_each_bit(const Bitset& bits, F&& fn) {
  for (auto i = bits.find_first(); i != Bitset::npos; i = bits.find_next(i)) {
    fn(static_cast<Vertex>(i));
  }
}

Bitset to_bitset(std::span<const Vertex> vertices, std::size_t n);
VertexSet to_vertex_set(const Bitset& bits);

/// Sorts and checks that every entry is < n with no repeats.
VertexSet normalized_vertex_set(std::span<const Vertex> vertices, std::size_t n);
bool is_vertex_set_of(std::span<const Vertex> vertices, std::size_t n);

struct BitsetHash {
  std::size_t operator()(const Bitset& bits) const noexcept;
};

/// Undirected simple graph on vertices 0..n-1 with bitset adjacency rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  static Graph complete(std::size_t n);
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool has_edge(Vertex u, Vertex v) const;
  const Bitset& neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).count(); }

  /// Returns false if the edge was already present. Throws on loops or bad indices.
  bool add_edge(Vertex u, Vertex v);
  bool remove_edge(Vertex u, Vertex v);

  /// All edges {u, v} with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  Bitset empty_set() const { return Bitset(order()); }
  Bitset full_set() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;

  std::vector<Bitset> adjacency_;
  std::size_t edge_count_ = 0;
};

struct InducedSubgraph {
  Graph graph;
  /// to_host[i] is the host vertex that became vertex i.
  VertexSet to_host;
};

/// G[S]. Throws std::invalid_argument if S is not a vertex set of g.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s);

std::size_t edges_within(const Graph& g, const Bitset& vertices);

/// The graph H being tiled with. Cliques are tagged so that copy search can
/// use clique enumeration instead of generic embedding.
class Pattern {
 public:
  static Pattern clique(std::size_t r);
  /// Tags the pattern as a clique when g is complete.
  static Pattern from_graph(Graph g);

  const Graph& graph() const noexcept { return graph_; }
  std::size_t order() const noexcept { return graph_.order(); }
  bool is_clique() const noexcept { return clique_; }
  bool is_connected() const noexcept { return connected_; }
  std::size_t min_degree() const noexcept { return min_degree_; }

  /// "K3" for cliques, otherwise "H(h=5,e=6)".
  std::string name() const;

  friend bool operator==(const Pattern& a, const Pattern& b) {
    return a.graph_ == b.graph_;
  }

 private:
  explicit Pattern(Graph g);

  Graph graph_;
  bool clique_ = false;
  bool connected_ = false;
  std::size_t min_degree_ = 0;
};

/// Connected components of G[vertices], each as a bitset.
std::vector<Bitset> components_within(const Graph& g, const Bitset& vertices);

}  // namespace tilinglab
