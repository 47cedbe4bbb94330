#include "tilinglab/graph.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace tilinglab {

Bitset to_bitset(std::span<const Vertex> vertices, std::size_t n) {
  Bitset bits(n);
  for (Vertex v : vertices) {
    if (v >= n) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    bits.set(v);
  }
  return bits;
}

VertexSet to_vertex_set(const Bitset& bits) {
  VertexSet out;
  out.reserve(bits.count());
  for_each_bit(bits, [&](Vertex v) { out.push_back(v); });
  return out;
}

bool is_vertex_set_of(std::span<const Vertex> vertices, std::size_t n) {
  std::vector<bool> seen(n, false);
  for (Vertex v : vertices) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

VertexSet normalized_vertex_set(std::span<const Vertex> vertices, std::size_t n) {
  if (!is_vertex_set_of(vertices, n)) {
    throw std::invalid_argument("not a set of distinct vertices below " + std::to_string(n));
  }
  VertexSet out(vertices.begin(), vertices.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t BitsetHash::operator()(const Bitset& bits) const noexcept {
  std::size_t h = std::hash<std::size_t>{}(bits.size());
  std::vector<std::uint64_t> blocks;
  blocks.reserve(bits.num_blocks());
  boost::to_block_range(bits, std::back_inserter(blocks));
  for (std::uint64_t b : blocks) {
    h ^= std::hash<std::uint64_t>{}(b) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Graph::Graph(std::size_t n) : adjacency_(n, Bitset(n)) {}

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    g.adjacency_[u].set();
    g.adjacency_[u].reset(u);
  }
  g.edge_count_ = n * (n == 0 ? 0 : n - 1) / 2;
  return g;
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v >= order()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for n = " +
                            std::to_string(order()));
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return adjacency_[u].test(v);
}

bool Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  if (adjacency_[u].test(v)) return false;
  adjacency_[u].set(v);
  adjacency_[v].set(u);
  ++edge_count_;
  return true;
}

bool Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (!adjacency_[u].test(v)) return false;
  adjacency_[u].reset(v);
  adjacency_[v].reset(u);
  --edge_count_;
  return true;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    const Bitset& row = adjacency_[u];
    for (auto v = row.find_next(u); v != Bitset::npos; v = row.find_next(v)) {
      out.emplace_back(u, static_cast<Vertex>(v));
    }
  }
  return out;
}

Bitset Graph::full_set() const {
  Bitset all(order());
  all.set();
  return all;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  if (!is_vertex_set_of(s, g.order())) {
    throw std::invalid_argument("induced_subgraph: invalid vertex set");
  }
  InducedSubgraph out{Graph(s.size()), VertexSet(s.begin(), s.end())};
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (g.neighbors(s[i]).test(s[j])) {
        out.graph.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return out;
}

std::size_t edges_within(const Graph& g, const Bitset& vertices) {
  std::size_t twice = 0;
  for_each_bit(vertices, [&](Vertex v) { twice += (g.neighbors(v) & vertices).count(); });
  return twice / 2;
}

std::vector<Bitset> components_within(const Graph& g, const Bitset& vertices) {
  std::vector<Bitset> out;
  Bitset unseen = vertices;
  while (unseen.any()) {
    Bitset comp(g.order());
    Bitset frontier(g.order());
    frontier.set(unseen.find_first());
    while (frontier.any()) {
      comp |= frontier;
      unseen -= frontier;
      Bitset next(g.order());
      for_each_bit(frontier, [&](Vertex v) { next |= g.neighbors(v); });
      next &= unseen;
      frontier = std::move(next);
    }
    out.push_back(std::move(comp));
  }
  return out;
}

Pattern::Pattern(Graph g) : graph_(std::move(g)) {
  const std::size_t h = graph_.order();
  if (h < 2) throw std::invalid_argument("pattern must have at least 2 vertices");
  clique_ = graph_.edge_count() == h * (h - 1) / 2;
  connected_ = components_within(graph_, graph_.full_set()).size() == 1;
  min_degree_ = h;
  for (Vertex v = 0; v < h; ++v) min_degree_ = std::min(min_degree_, graph_.degree(v));
}

Pattern Pattern::clique(std::size_t r) { return Pattern(Graph::complete(r)); }

Pattern Pattern::from_graph(Graph g) { return Pattern(std::move(g)); }

std::string Pattern::name() const {
  if (clique_) return "K" + std::to_string(order());
  return "H(h=" + std::to_string(order()) + ",e=" + std::to_string(graph_.edge_count()) + ")";
}

}  // namespace tilinglab
