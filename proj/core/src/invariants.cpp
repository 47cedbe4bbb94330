#include "tilinglab/invariants.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "tilinglab/cliques.hpp"
#include "tilinglab/copies.hpp"
#include "tilinglab/rng.hpp"

namespace tilinglab {

std::size_t min_degree(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("min_degree of the empty graph");
  std::size_t best = g.order();
  for (Vertex v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

std::size_t max_degree(const Graph& g) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

namespace {

class AlphaSearch {
 public:
  AlphaSearch(const Graph& g, std::size_t ell, std::uint64_t budget)
      : g_(g), ell_(ell), budget_(budget), best_(g.order()) {}

  AlphaResult run() {
    seed_with_greedy();
    Bitset forced(g_.order());
    branch(g_.full_set(), forced);
    return AlphaResult{best_size_, to_vertex_set(best_), !exhausted_, nodes_};
  }

 private:
  // Ascending-degree greedy gives the initial incumbent.
  void seed_with_greedy() {
    std::vector<Vertex> order(g_.order());
    std::iota(order.begin(), order.end(), Vertex{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return g_.degree(a) < g_.degree(b); });
    Bitset kept(g_.order());
    for (Vertex v : order) {
      if (!creates_clique(v, kept)) kept.set(v);
    }
    best_ = kept;
    best_size_ = kept.count();
  }

  bool creates_clique(Vertex v, const Bitset& kept) const {
    return find_clique(g_, ell_ - 1, kept & g_.neighbors(v)).has_value();
  }

  std::size_t partition_bound(const Bitset& candidates) const {
    Bitset remaining = candidates;
    std::size_t bound = 0;
    while (remaining.any()) {
      auto v = static_cast<Vertex>(remaining.find_first());
      remaining.reset(v);
      Bitset extend = remaining & g_.neighbors(v);
      std::size_t size = 1;
      while (extend.any()) {
        auto u = static_cast<Vertex>(extend.find_first());
        remaining.reset(u);
        extend &= g_.neighbors(u);
        ++size;
      }
      bound += std::min(size, ell_ - 1);
    }
    return bound;
  }

  void branch(Bitset candidates, Bitset forced) {
    if (exhausted_) return;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    if (partition_bound(candidates) <= best_size_) return;

    auto copy = find_clique(g_, ell_, candidates);
    if (!copy) {
      best_size_ = candidates.count();
      best_ = candidates;
      return;
    }
    std::optional<Vertex> pick;
    std::size_t pick_degree = 0;
    for (Vertex v : *copy) {
      if (forced.test(v)) continue;
      std::size_t d = (g_.neighbors(v) & candidates).count();
      if (!pick || d > pick_degree) {
        pick = v;
        pick_degree = d;
      }
    }
    if (!pick) return;

    Bitset dropped = candidates;
    dropped.reset(*pick);
    branch(std::move(dropped), forced);

    if (!creates_clique(*pick, forced)) {
      forced.set(*pick);
      branch(std::move(candidates), std::move(forced));
    }
  }

  const Graph& g_;
  std::size_t ell_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  Bitset best_;
  std::size_t best_size_ = 0;
};

std::vector<Bitset> to_parts(const std::vector<VertexSet>& family, std::size_t n) {
  std::vector<Bitset> parts;
  parts.reserve(family.size());
  for (const auto& set : family) parts.push_back(to_bitset(set, n));
  return parts;
}

// Enumerates unordered families of `parts` disjoint `size`-sets, canonically
// ordered by their minimum element.
class FamilyEnumerator {
 public:
  using Visit = std::function<bool(const std::vector<VertexSet>&)>;

  FamilyEnumerator(std::size_t n, std::size_t size, std::size_t parts)
      : n_(n), size_(size), parts_(parts), used_(n, false) {}

  bool run(const Visit& visit) {
    family_.clear();
    return next_set(0, visit);
  }

 private:
  bool next_set(Vertex min_floor, const Visit& visit) {
    if (family_.size() == parts_) return visit(family_);
    const std::size_t still_needed = (parts_ - family_.size()) * size_;
    for (Vertex first = min_floor; first < n_; ++first) {
      if (used_[first]) continue;
      std::size_t free_from_first = 0;
      for (Vertex v = first; v < n_; ++v) free_from_first += used_[v] ? 0 : 1;
      if (free_from_first < still_needed) break;
      VertexSet set{first};
      used_[first] = true;
      bool keep_going = fill(set, first + 1, first, visit);
      used_[first] = false;
      if (!keep_going) return false;
    }
    return true;
  }

  bool fill(VertexSet& set, Vertex from, Vertex first, const Visit& visit) {
    if (set.size() == size_) {
      family_.push_back(set);
      bool keep_going = next_set(first + 1, visit);
      family_.pop_back();
      return keep_going;
    }
    for (Vertex v = from; v < n_; ++v) {
      if (used_[v]) continue;
      used_[v] = true;
      set.push_back(v);
      bool keep_going = fill(set, v + 1, first, visit);
      set.pop_back();
      used_[v] = false;
      if (!keep_going) return false;
    }
    return true;
  }

  std::size_t n_;
  std::size_t size_;
  std::size_t parts_;
  std::vector<bool> used_;
  std::vector<VertexSet> family_;
};

}  // namespace

std::string to_string(AlphaStarMode mode) {
  switch (mode) {
    case AlphaStarMode::exhaustive: return "exhaustive";
    case AlphaStarMode::sampled: return "sampled";
    case AlphaStarMode::witness: return "witness";
  }
  return "?";
}

AlphaResult alpha_ell(const Graph& g, std::size_t ell, std::uint64_t budget) {
  if (ell < 2) throw std::invalid_argument("alpha_ell requires ell >= 2");
  if (g.order() == 0) return AlphaResult{};
  return AlphaSearch(g, ell, budget).run();
}

FamilyCapExceeded::FamilyCapExceeded(long double families, std::uint64_t cap)
    : std::runtime_error("exhaustive alpha* check would examine " +
                         std::to_string(static_cast<double>(families)) +
                         " families (cap " + std::to_string(cap) + ")") {}

long double count_disjoint_families(std::size_t n, std::size_t size, std::size_t parts) {
  if (parts * size > n) return 0;
  long double total = 1;
  std::size_t left = n;
  for (std::size_t i = 0; i < parts; ++i) {
    // C(left, size)
    long double c = 1;
    for (std::size_t j = 0; j < size; ++j) c = c * static_cast<long double>(left - j) / (j + 1);
    total *= c;
    left -= size;
  }
  for (std::size_t i = 2; i <= parts; ++i) total /= static_cast<long double>(i);
  return total;
}

AlphaStarVerdict alpha_star_check(const Graph& g, const Pattern& h, std::size_t s,
                                  const AlphaStarOptions& options) {
  const std::size_t k = h.order();
  if (s == 0 || k * s > g.order()) {
    throw std::invalid_argument("alpha_star_check requires 1 <= s and h * s <= n");
  }
  CopyFinder finder(g, h);
  AlphaStarVerdict verdict;
  verdict.s = s;
  verdict.mode = options.mode;

  auto check_family = [&](const std::vector<VertexSet>& family) {
    ++verdict.families_examined;
    auto parts = to_parts(family, g.order());
    if (finder.find_traversing(parts)) return true;
    verdict.holds = false;
    verdict.witness = family;
    return false;
  };

  switch (options.mode) {
    case AlphaStarMode::exhaustive: {
      long double families = count_disjoint_families(g.order(), s, k);
      if (families > static_cast<long double>(options.family_cap)) {
        throw FamilyCapExceeded(families, options.family_cap);
      }
      FamilyEnumerator(g.order(), s, k).run(check_family);
      verdict.trials = verdict.families_examined;
      verdict.note = verdict.holds ? "all families examined" : "failing family found";
      break;
    }
    case AlphaStarMode::sampled: {
      std::vector<Vertex> vertices(g.order());
      for (std::size_t t = 0; t < options.trials; ++t) {
        std::iota(vertices.begin(), vertices.end(), Vertex{0});
        Rng rng(derive_seed(options.seed, stream_tag("alpha-star"), t));
        rng.shuffle(vertices);
        std::vector<VertexSet> family(k);
        for (std::size_t i = 0; i < k; ++i) {
          family[i].assign(vertices.begin() + static_cast<std::ptrdiff_t>(i * s),
                           vertices.begin() + static_cast<std::ptrdiff_t>((i + 1) * s));
          std::sort(family[i].begin(), family[i].end());
        }
        if (!check_family(family)) break;
      }
      verdict.trials = options.trials;
      std::ostringstream note;
      note << (verdict.holds ? "no failing family among " : "failing family found within ")
           << verdict.families_examined << " random families; a pass is an estimate only";
      verdict.note = note.str();
      break;
    }
    case AlphaStarMode::witness:
      throw std::invalid_argument("witness mode is checked with verify_alpha_star_witness");
  }
  return verdict;
}

bool verify_alpha_star_witness(const Graph& g, const Pattern& h, std::size_t s,
                               const std::vector<VertexSet>& family) {
  if (family.size() != h.order()) return false;
  std::vector<bool> seen(g.order(), false);
  for (const auto& set : family) {
    if (set.size() < s) return false;
    for (Vertex v : set) {
      if (v >= g.order() || seen[v]) return false;
      seen[v] = true;
    }
  }
  return !CopyFinder(g, h).find_traversing(to_parts(family, g.order())).has_value();
}

AlphaStarUpper alpha_star_upper(const Graph& g, const Pattern& h, const AlphaStarOptions& options) {
  AlphaStarUpper out;
  out.estimate = options.mode == AlphaStarMode::sampled;
  for (std::size_t s = 1; s * h.order() <= g.order(); ++s) {
    out.scan.push_back(alpha_star_check(g, h, s, options));
    if (out.scan.back().holds) {
      out.value = s;
      break;
    }
  }
  return out;
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g == 0) g = 1;
  return Rational{num / g, den / g};
}

bool operator<(const Rational& a, const Rational& b) { return a.num * b.den < b.num * a.den; }

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Rational density_exponent(const Pattern& h) {
  const std::size_t k = h.order();
  if (k > 24) throw std::invalid_argument("density_exponent enumerates 2^h subsets; h too large");
  const Graph& hg = h.graph();
  std::vector<std::uint32_t> nbr_mask(k, 0);
  for (auto [u, v] : hg.edges()) {
    nbr_mask[u] |= 1u << v;
    nbr_mask[v] |= 1u << u;
  }
  Rational best{0, 1};
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    const int size = std::popcount(mask);
    if (size < 2) continue;
    std::int64_t twice_edges = 0;
    for (std::size_t v = 0; v < k; ++v) {
      if (mask & (1u << v)) twice_edges += std::popcount(nbr_mask[v] & mask);
    }
    Rational candidate = make_rational(twice_edges / 2, size - 1);
    if (best < candidate) best = candidate;
  }
  return best;
}

ParamReport compute_params(const Graph& g, const ParamRequest& request) {
  ParamReport report;
  report.n = g.order();
  report.edges = g.edge_count();
  report.min_degree = min_degree(g);
  report.max_degree = max_degree(g);
  report.max_clique = max_clique(g);
  for (std::size_t ell : request.ells) {
    report.alpha_ell[ell] = alpha_ell(g, ell, request.alpha_budget);
  }
  if (request.pattern) {
    report.pattern = request.pattern->name();
    report.d_h = density_exponent(*request.pattern);
    if (request.alpha_star_s) {
      report.alpha_star =
          alpha_star_check(g, *request.pattern, *request.alpha_star_s, request.alpha_star);
    }
  }
  return report;
}

}  // namespace tilinglab
