#include "tilinglab/cliques.hpp"

#include <algorithm>

namespace tilinglab {
namespace {

bool extend_clique(const Graph& g, std::size_t r, VertexSet& current, Bitset candidates,
                   const CliqueVisitor& visit) {
  if (current.size() == r) return visit(current);
  const std::size_t need = r - current.size();
  for (auto v = candidates.find_first(); v != Bitset::npos; v = candidates.find_first()) {
    if (candidates.count() < need) break;
    candidates.reset(v);
    Bitset next = candidates & g.neighbors(static_cast<Vertex>(v));
    if (need > 1 && next.count() < need - 1) continue;
    current.push_back(static_cast<Vertex>(v));
    bool keep_going = extend_clique(g, r, current, std::move(next), visit);
    current.pop_back();
    if (!keep_going) return false;
  }
  return true;
}

// Greedy sequential colouring of `candidates`; returns vertices in colour
// order together with the colour count bound at each position.
void colour_sort(const Graph& g, const Bitset& candidates, std::vector<Vertex>& order,
                 std::vector<std::size_t>& bounds) {
  order.clear();
  bounds.clear();
  Bitset uncoloured = candidates;
  std::size_t colour = 0;
  while (uncoloured.any()) {
    ++colour;
    Bitset available = uncoloured;
    while (available.any()) {
      auto v = static_cast<Vertex>(available.find_first());
      available.reset(v);
      available -= g.neighbors(v);
      uncoloured.reset(v);
      order.push_back(v);
      bounds.push_back(colour);
    }
  }
}

void expand_max(const Graph& g, VertexSet& current, Bitset candidates, VertexSet& best) {
  std::vector<Vertex> order;
  std::vector<std::size_t> bounds;
  colour_sort(g, candidates, order, bounds);
  for (std::size_t i = order.size(); i-- > 0;) {
    if (current.size() + bounds[i] <= best.size()) return;
    Vertex v = order[i];
    current.push_back(v);
    Bitset next = candidates & g.neighbors(v);
    if (next.none()) {
      if (current.size() > best.size()) best = current;
    } else {
      expand_max(g, current, std::move(next), best);
    }
    current.pop_back();
    candidates.reset(v);
  }
}

}  // namespace

bool for_each_clique(const Graph& g, std::size_t r, const Bitset& within,
                     const CliqueVisitor& visit) {
  if (r == 0) return visit({});
  VertexSet current;
  current.reserve(r);
  return extend_clique(g, r, current, within, visit);
}

std::vector<VertexSet> enumerate_cliques(const Graph& g, std::size_t r) {
  std::vector<VertexSet> out;
  for_each_clique(g, r, g.full_set(), [&](std::span<const Vertex> c) {
    out.emplace_back(c.begin(), c.end());
    return true;
  });
  return out;
}

std::optional<VertexSet> find_clique(const Graph& g, std::size_t r, const Bitset& within) {
  std::optional<VertexSet> found;
  for_each_clique(g, r, within, [&](std::span<const Vertex> c) {
    found.emplace(c.begin(), c.end());
    return false;
  });
  return found;
}

std::size_t count_cliques(const Graph& g, std::size_t r) {
  std::size_t count = 0;
  for_each_clique(g, r, g.full_set(), [&](std::span<const Vertex>) {
    ++count;
    return true;
  });
  return count;
}

VertexSet maximum_clique(const Graph& g) {
  VertexSet best;
  if (g.order() == 0) return best;
  VertexSet current;
  expand_max(g, current, g.full_set(), best);
  std::sort(best.begin(), best.end());
  return best;
}

std::size_t max_clique(const Graph& g) { return maximum_clique(g).size(); }

}  // namespace tilinglab
