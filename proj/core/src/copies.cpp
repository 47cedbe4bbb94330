#include "tilinglab/copies.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "tilinglab/cliques.hpp"

namespace tilinglab {
namespace {

std::vector<Vertex> greedy_order(const Graph& h, Vertex start) {
  const std::size_t k = h.order();
  std::vector<Vertex> order{start};
  std::vector<bool> placed(k, false);
  placed[start] = true;
  while (order.size() < k) {
    Vertex best = 0;
    long best_key = -1;
    for (Vertex v = 0; v < k; ++v) {
      if (placed[v]) continue;
      long links = 0;
      for (Vertex u : order) links += h.has_edge(u, v) ? 1 : 0;
      long key = links * static_cast<long>(k + 1) + static_cast<long>(h.degree(v));
      if (key > best_key) {
        best_key = key;
        best = v;
      }
    }
    placed[best] = true;
    order.push_back(best);
  }
  return order;
}

}  // namespace

CopyFinder::CopyFinder(const Graph& host, const Pattern& pattern)
    : host_(&host), pattern_(&pattern) {
  const Graph& h = pattern.graph();
  for (Vertex p = 0; p < h.order(); ++p) {
    auto order = greedy_order(h, p);
    std::vector<std::vector<std::size_t>> back(order.size());
    for (std::size_t d = 0; d < order.size(); ++d) {
      for (std::size_t j = 0; j < d; ++j) {
        if (h.has_edge(order[j], order[d])) back[d].push_back(j);
      }
    }
    orders_.push_back(std::move(order));
    back_neighbors_.push_back(std::move(back));
  }
}

bool CopyFinder::search(std::size_t start, Embedding& image, std::vector<Vertex>& placed,
                        std::size_t depth, const Bitset& allowed, Bitset& used,
                        const Visitor& visit) const {
  const auto& order = orders_[start];
  if (depth == order.size()) return visit(image);
  const Vertex pv = order[depth];
  const std::size_t need_degree = pattern_->graph().degree(pv);
  Bitset candidates = allowed - used;
  for (std::size_t j : back_neighbors_[start][depth]) candidates &= host_->neighbors(placed[j]);
  for (auto c = candidates.find_first(); c != Bitset::npos; c = candidates.find_next(c)) {
    const auto hv = static_cast<Vertex>(c);
    if (host_->degree(hv) < need_degree) continue;
    image[pv] = hv;
    placed[depth] = hv;
    used.set(hv);
    bool keep_going = search(start, image, placed, depth + 1, allowed, used, visit);
    used.reset(hv);
    if (!keep_going) return false;
  }
  return true;
}

std::optional<Embedding> CopyFinder::find(const Bitset& allowed) const {
  const std::size_t h = pattern_->order();
  if (pattern_->is_clique()) return find_clique(*host_, h, allowed);
  std::optional<Embedding> found;
  Embedding image(h);
  std::vector<Vertex> placed(h);
  Bitset used(host_->order());
  Vertex start = 0;
  for (Vertex p = 1; p < h; ++p) {
    if (pattern_->graph().degree(p) > pattern_->graph().degree(start)) start = p;
  }
  search(start, image, placed, 0, allowed, used, [&](const Embedding& e) {
    found = e;
    return false;
  });
  return found;
}

std::optional<Embedding> CopyFinder::find_containing(Vertex v, const Bitset& allowed) const {
  auto copies = copies_containing(v, allowed, 1);
  if (copies.empty()) return std::nullopt;
  return copies.front();
}

std::vector<Embedding> CopyFinder::copies_containing(Vertex v, const Bitset& allowed,
                                                     std::size_t limit) const {
  const std::size_t h = pattern_->order();
  std::vector<Embedding> out;
  if (limit == 0) return out;
  Bitset rest = allowed;
  rest.reset(v);

  if (pattern_->is_clique()) {
    Bitset within = rest & host_->neighbors(v);
    for_each_clique(*host_, h - 1, within, [&](std::span<const Vertex> c) {
      Embedding e(c.begin(), c.end());
      e.insert(std::upper_bound(e.begin(), e.end(), v), v);
      out.push_back(std::move(e));
      return out.size() < limit;
    });
    return out;
  }

  std::map<VertexSet, Embedding> by_set;
  Embedding image(h);
  std::vector<Vertex> placed(h);
  Bitset used(host_->order());
  for (Vertex p = 0; p < h; ++p) {
    if (host_->degree(v) < pattern_->graph().degree(p)) continue;
    image[p] = v;
    placed[0] = v;
    used.set(v);
    search(p, image, placed, 1, rest, used, [&](const Embedding& e) {
      VertexSet key(e.begin(), e.end());
      std::sort(key.begin(), key.end());
      by_set.try_emplace(std::move(key), e);
      return true;
    });
    used.reset(v);
  }
  for (auto& [key, e] : by_set) {
    if (out.size() >= limit) break;
    out.push_back(std::move(e));
  }
  return out;
}

std::optional<Embedding> CopyFinder::find_traversing(std::span<const Bitset> parts) const {
  const std::size_t h = pattern_->order();
  if (parts.size() != h) throw std::invalid_argument("find_traversing: need one part per pattern vertex");
  Bitset all(host_->order());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (all.intersects(parts[i])) throw std::invalid_argument("find_traversing: parts overlap");
    all |= parts[i];
  }

  if (pattern_->is_clique()) {
    // Pattern vertex i goes to part i; symmetric, so no loss of generality.
    Embedding chosen;
    std::function<bool(std::size_t, const Bitset&)> rec = [&](std::size_t i, const Bitset& common) {
      if (i == h) return true;
      Bitset candidates = parts[i] & common;
      for (auto c = candidates.find_first(); c != Bitset::npos; c = candidates.find_next(c)) {
        chosen.push_back(static_cast<Vertex>(c));
        if (rec(i + 1, common & host_->neighbors(static_cast<Vertex>(c)))) return true;
        chosen.pop_back();
      }
      return false;
    };
    Bitset everything(host_->order());
    everything.set();
    if (!rec(0, everything)) return std::nullopt;
    return chosen;
  }

  std::vector<int> part_of(host_->order(), -1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for_each_bit(parts[i], [&](Vertex v) { part_of[v] = static_cast<int>(i); });
  }
  Vertex start = 0;
  for (Vertex p = 1; p < h; ++p) {
    if (pattern_->graph().degree(p) > pattern_->graph().degree(start)) start = p;
  }
  const auto& order = orders_[start];
  const auto& back = back_neighbors_[start];
  Embedding image(h);
  std::vector<Vertex> placed(h);
  std::vector<bool> part_used(h, false);

  std::function<bool(std::size_t)> rec = [&](std::size_t depth) {
    if (depth == h) return true;
    Bitset candidates(host_->order());
    for (std::size_t i = 0; i < h; ++i) {
      if (!part_used[i]) candidates |= parts[i];
    }
    for (std::size_t j : back[depth]) candidates &= host_->neighbors(placed[j]);
    for (auto c = candidates.find_first(); c != Bitset::npos; c = candidates.find_next(c)) {
      const auto hv = static_cast<Vertex>(c);
      const auto part = static_cast<std::size_t>(part_of[hv]);
      image[order[depth]] = hv;
      placed[depth] = hv;
      part_used[part] = true;
      if (rec(depth + 1)) return true;
      part_used[part] = false;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return image;
}

std::optional<Embedding> CopyFinder::embed_onto(std::span<const Vertex> vertices) const {
  if (vertices.size() != pattern_->order()) return std::nullopt;
  if (!is_vertex_set_of(vertices, host_->order())) return std::nullopt;
  return find(to_bitset(vertices, host_->order()));
}

}  // namespace tilinglab
