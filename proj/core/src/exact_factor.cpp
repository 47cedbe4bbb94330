#include "tilinglab/exact_factor.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "tilinglab/copies.hpp"
#include "tilinglab/rng.hpp"

namespace tilinglab {

std::string_view to_string(FactorStatus status) {
  switch (status) {
    case FactorStatus::found: return "found";
    case FactorStatus::none: return "none";
    case FactorStatus::budget_exhausted: return "budget-exhausted";
  }
  return "?";
}

namespace {

constexpr std::size_t kMemoLimit = 1u << 20;

class FactorSearch {
 public:
  FactorSearch(const Graph& g, const Pattern& h, std::uint64_t budget)
      : g_(g), h_(h), finder_(g, h), budget_(budget) {}

  FactorResult run(const Bitset& domain) {
    FactorResult result;
    if (domain.count() % h_.order() != 0) {
      result.status = FactorStatus::none;
      return result;
    }
    bool found = search(domain);
    result.nodes = nodes_;
    if (found) {
      result.status = FactorStatus::found;
      result.tiling = Tiling{chosen_};
    } else {
      result.status = exhausted_ ? FactorStatus::budget_exhausted : FactorStatus::none;
    }
    return result;
  }

 private:
  bool hopeless(const Bitset& uncovered) const {
    const std::size_t need = h_.min_degree();
    if (need > 0) {
      for (auto v = uncovered.find_first(); v != Bitset::npos; v = uncovered.find_next(v)) {
        if ((g_.neighbors(static_cast<Vertex>(v)) & uncovered).count() < need) return true;
      }
    }
    if (h_.is_connected()) {
      for (const auto& component : components_within(g_, uncovered)) {
        if (component.count() % h_.order() != 0) return true;
      }
    }
    return false;
  }

  bool search(const Bitset& uncovered) {
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return false;
    }
    if (uncovered.none()) return true;
    if (failed_.contains(uncovered)) return false;
    if (!hopeless(uncovered)) {
      const auto first = static_cast<Vertex>(uncovered.find_first());
      for (auto& copy : finder_.copies_containing(first, uncovered)) {
        Bitset rest = uncovered;
        for (Vertex v : copy) rest.reset(v);
        chosen_.push_back(std::move(copy));
        if (search(rest)) return true;
        chosen_.pop_back();
        if (exhausted_) return false;
      }
    }
    if (failed_.size() < kMemoLimit) failed_.insert(uncovered);
    return false;
  }

  const Graph& g_;
  const Pattern& h_;
  CopyFinder finder_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<Embedding> chosen_;
  std::unordered_set<Bitset, BitsetHash> failed_;
};

}  // namespace

FactorResult find_factor_in(const Graph& g, const Pattern& h, const Bitset& domain,
                            std::uint64_t budget) {
  if (domain.size() != g.order()) throw std::invalid_argument("find_factor_in: domain size mismatch");
  return FactorSearch(g, h, budget).run(domain);
}

FactorResult find_factor_exact(const Graph& g, const Pattern& h, std::uint64_t budget) {
  return find_factor_in(g, h, g.full_set(), budget);
}

GreedyTiling greedy_max_tiling(const Graph& g, const Pattern& h, const VertexSet& forbidden,
                               std::uint64_t seed) {
  if (!is_vertex_set_of(forbidden, g.order())) {
    throw std::invalid_argument("greedy_max_tiling: forbidden is not a vertex set of G");
  }
  Bitset unused = g.full_set();
  for (Vertex v : forbidden) unused.reset(v);

  std::vector<Vertex> order;
  for_each_bit(unused, [&](Vertex v) { order.push_back(v); });
  Rng rng(derive_seed(seed, stream_tag("greedy-tiling")));
  rng.shuffle(order);

  CopyFinder finder(g, h);
  GreedyTiling out;
  for (Vertex v : order) {
    if (!unused.test(v)) continue;
    Bitset others = unused;
    others.reset(v);
    if (auto copy = finder.find_containing(v, others)) {
      for (Vertex u : *copy) unused.reset(u);
      out.tiling.copies.push_back(std::move(*copy));
    }
  }
  out.leftover = to_vertex_set(unused);
  return out;
}

std::optional<Embedding> find_traversing_copy(const Graph& g, const Pattern& h,
                                              const std::vector<VertexSet>& parts) {
  std::vector<Bitset> bits;
  for (const auto& part : parts) {
    if (!is_vertex_set_of(part, g.order())) {
      throw std::invalid_argument("find_traversing_copy: part is not a vertex set of G");
    }
    bits.push_back(to_bitset(part, g.order()));
  }
  return CopyFinder(g, h).find_traversing(bits);
}

}  // namespace tilinglab
