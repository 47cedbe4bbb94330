#include "tilinglab/absorbing/absorbers.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "tilinglab/cliques.hpp"
#include "tilinglab/copies.hpp"
#include "tilinglab/matching.hpp"
#include "tilinglab/rng.hpp"

namespace tilinglab {

bool is_st_absorber(const Graph& g, const Pattern& h, const VertexSet& s, const VertexSet& a_s,
                    std::size_t t, std::uint64_t budget) {
  if (s.size() != h.order()) throw std::invalid_argument("is_st_absorber: |S| must equal h");
  if (a_s.size() != h.order() * t) throw std::invalid_argument("is_st_absorber: |A_S| must equal h*t");
  if (!is_vertex_set_of(s, g.order()) || !is_vertex_set_of(a_s, g.order())) {
    throw std::invalid_argument("is_st_absorber: not vertex sets of G");
  }
  Bitset a = to_bitset(a_s, g.order());
  Bitset with_s = a;
  for (Vertex v : s) {
    if (a.test(v)) throw std::invalid_argument("is_st_absorber: S and A_S intersect");
    with_s.set(v);
  }
  return find_factor_in(g, h, a, budget).status == FactorStatus::found &&
         find_factor_in(g, h, with_s, budget).status == FactorStatus::found;
}

namespace {

Bitset avoid_or_empty(const Bitset& avoid, std::size_t n) {
  if (avoid.size() == 0) return Bitset(n);
  if (avoid.size() != n) throw std::invalid_argument("absorber family: avoid set has the wrong size");
  return avoid;
}

void add_hypothesis_warnings(const std::optional<HypothesisReport>& rep, AbsorberFamily& fam) {
  if (!rep) return;
  if (!rep->degree_held) {
    fam.warnings.push_back("minimum degree " + std::to_string(rep->min_degree) + " below " +
                           std::to_string(rep->degree_threshold));
  }
  if (rep->independence == Verdict::violated) {
    fam.warnings.push_back("independence hypothesis violated (threshold " +
                           std::to_string(rep->independence_threshold) + ")");
  } else if (rep->independence == Verdict::unverified) {
    fam.warnings.push_back("independence hypothesis not certified");
  }
}

}  // namespace

AbsorberFamily disjoint_absorber_family_general(const Graph& g, const Pattern& h,
                                                const VertexSet& s, std::size_t target,
                                                const GeneralBuilderOptions& options,
                                                const Bitset& avoid, std::uint64_t seed) {
  const std::size_t k = h.order();
  if (s.size() != k || !is_vertex_set_of(s, g.order())) {
    throw std::invalid_argument("general absorber family: S must be h distinct vertices");
  }
  AbsorberFamily fam;
  add_hypothesis_warnings(options.hypotheses, fam);
  fam.attempts = 1;

  const std::size_t n = g.order();
  const std::size_t size =
      options.neighborhood_size
          ? options.neighborhood_size
          : static_cast<std::size_t>(std::floor(options.epsilon * static_cast<double>(n) / (2.0 * k)));
  if (size == 0) {
    fam.failure = "neighbourhood: |N_w| rounds to 0 at this n";
    return fam;
  }

  Bitset taken = avoid_or_empty(avoid, n);
  for (Vertex w : s) taken.set(w);

  // Round-robin choice of disjoint N_w of up to `size` vertices; prefer
  // vertices fewer other S members could still use.
  std::vector<Bitset> nw(k, Bitset(n));
  std::vector<bool> exhausted(k, false);
  for (std::size_t round = 0; round < size; ++round) {
    for (std::size_t i = 0; i < k; ++i) {
      if (exhausted[i]) continue;
      Bitset cand = g.neighbors(s[i]) - taken;
      std::optional<Vertex> pick;
      std::size_t pick_score = 0;
      for_each_bit(cand, [&](Vertex v) {
        std::size_t score = 0;
        for (std::size_t j = i + 1; j < k; ++j) score += g.has_edge(s[j], v) ? 1 : 0;
        if (!pick || score < pick_score) {
          pick = v;
          pick_score = score;
        }
      });
      if (!pick) {
        exhausted[i] = true;
        continue;
      }
      nw[i].set(*pick);
      taken.set(*pick);
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (nw[i].count() < k) {
      fam.failure = "neighbourhood: only " + std::to_string(nw[i].count()) +
                    " private neighbours left for w = " + std::to_string(s[i]);
      return fam;
    }
  }

  // Designated vertex per copy -> that copy.
  std::map<Vertex, Embedding> copy_of;
  std::vector<Bitset> designated(k, Bitset(n));
  for (std::size_t i = 0; i < k; ++i) {
    VertexSet outside = to_vertex_set(~nw[i]);
    auto tiling = greedy_max_tiling(g, h, outside, derive_seed(seed, stream_tag("nw-tiling"), i));
    for (auto& copy : tiling.tiling.copies) {
      Vertex d = *std::min_element(copy.begin(), copy.end());
      designated[i].set(d);
      copy_of.emplace(d, std::move(copy));
    }
  }

  CopyFinder finder(g, h);
  while (fam.absorbers.size() < target) {
    auto traversing = finder.find_traversing(designated);
    if (!traversing) {
      std::size_t smallest = n;
      for (const auto& d : designated) smallest = std::min(smallest, d.count());
      fam.failure = "traversing-copy: no copy of H across the V_w (smallest |V_w| = " +
                    std::to_string(smallest) + ") after " + std::to_string(fam.absorbers.size()) +
                    " absorbers";
      break;
    }
    VertexSet absorber;
    for (Vertex u : *traversing) {
      const auto& copy = copy_of.at(u);
      absorber.insert(absorber.end(), copy.begin(), copy.end());
      for (auto& d : designated) d.reset(u);
    }
    std::sort(absorber.begin(), absorber.end());
    if (options.verify && !is_st_absorber(g, h, s, absorber, k)) {
      fam.failure = "verification: assembled set is not an (S,h)-absorber";
      break;
    }
    fam.absorbers.push_back(std::move(absorber));
  }
  return fam;
}

namespace {

struct CliqueAttempt {
  const Graph& g;
  const CliqueBuilderOptions& options;
  const VertexSet& s;

  // Greedy K_{r-ell} by common-neighbourhood descent, then a K_ell by enumeration.
  std::optional<VertexSet> descent_clique(const Bitset& part) const {
    Bitset common = part;
    VertexSet w;
    for (std::size_t j = 0; j + options.ell < options.r; ++j) {
      std::optional<Vertex> best;
      std::size_t best_degree = 0;
      for_each_bit(common, [&](Vertex v) {
        std::size_t d = (g.neighbors(v) & common).count();
        if (!best || d > best_degree) {
          best = v;
          best_degree = d;
        }
      });
      if (!best) return std::nullopt;
      w.push_back(*best);
      common &= g.neighbors(*best);
    }
    auto tail = find_clique(g, options.ell, common);
    if (!tail) return std::nullopt;
    w.insert(w.end(), tail->begin(), tail->end());
    return w;
  }

  // For a K_r w, pick K_{r-1}'s in N(v_i) ∩ N(w_σ(i)) ∩ V_i for a bijection σ.
  std::optional<VertexSet> complete(const VertexSet& w, const std::vector<Bitset>& parts) const {
    const std::size_t r = options.r;
    BipartiteGraph b(r, r);
    std::vector<std::vector<std::optional<VertexSet>>> found(r, std::vector<std::optional<VertexSet>>(r));
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        Bitset common = parts[i] & g.neighbors(s[i]) & g.neighbors(w[j]);
        found[i][j] = find_clique(g, r - 1, common);
        if (found[i][j]) b.add_edge(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
      }
    }
    auto m = maximum_matching(b);
    if (m.size != r) return std::nullopt;
    VertexSet absorber(w.begin(), w.end());
    for (std::size_t i = 0; i < r; ++i) {
      const auto& c = *found[i][m.left_to_right[i]];
      absorber.insert(absorber.end(), c.begin(), c.end());
    }
    std::sort(absorber.begin(), absorber.end());
    return absorber;
  }

  std::optional<VertexSet> next_absorber(const std::vector<Bitset>& parts) const {
    const Bitset& top = parts[options.r];
    if (auto w = descent_clique(top)) {
      if (auto a = complete(*w, parts)) return a;
    }
    std::optional<VertexSet> out;
    std::size_t tried = 0;
    for_each_clique(g, options.r, top, [&](std::span<const Vertex> c) {
      VertexSet w(c.begin(), c.end());
      out = complete(w, parts);
      return !out && ++tried < options.clique_candidates;
    });
    return out;
  }
};

}  // namespace

AbsorberFamily disjoint_absorber_family_clique(const Graph& g, const VertexSet& s,
                                               std::size_t target,
                                               const CliqueBuilderOptions& options,
                                               std::uint64_t seed, const Bitset& avoid) {
  const std::size_t r = options.r;
  if (r < 2 || options.ell < 1 || options.ell > r) {
    throw std::invalid_argument("clique absorber family: need r >= 2 and 1 <= ell <= r");
  }
  if (s.size() != r || !is_vertex_set_of(s, g.order())) {
    throw std::invalid_argument("clique absorber family: S must be r distinct vertices");
  }
  const std::size_t n = g.order();
  AbsorberFamily fam;
  add_hypothesis_warnings(options.hypotheses, fam);
  const Pattern kr = Pattern::clique(r);

  Bitset used = avoid_or_empty(avoid, n);
  for (Vertex v : s) used.set(v);
  CliqueAttempt builder{g, options, s};

  while (fam.absorbers.size() < target && fam.attempts < options.partition_attempts) {
    const std::size_t attempt = fam.attempts++;
    std::vector<Vertex> pool = to_vertex_set(~used);
    if (pool.size() < r * r) {
      fam.failure = "partition: only " + std::to_string(pool.size()) + " free vertices left";
      return fam;
    }
    Rng rng(derive_seed(seed, stream_tag("partition"), attempt));
    rng.shuffle(pool);
    std::vector<Bitset> parts(r + 1, Bitset(n));
    for (std::size_t i = 0; i < pool.size(); ++i) parts[i % (r + 1)].set(pool[i]);

    while (fam.absorbers.size() < target) {
      auto absorber = builder.next_absorber(parts);
      if (!absorber) break;
      if (options.verify && !is_st_absorber(g, kr, s, *absorber, r)) {
        fam.failure = "verification: assembled set is not an (S,r)-absorber";
        return fam;
      }
      for (Vertex v : *absorber) {
        used.set(v);
        for (auto& p : parts) p.reset(v);
      }
      fam.absorbers.push_back(std::move(*absorber));
    }
  }
  if (fam.absorbers.size() < target) {
    fam.failure = "common-neighbourhood: found " + std::to_string(fam.absorbers.size()) + " of " +
                  std::to_string(target) + " absorbers in " + std::to_string(fam.attempts) +
                  " partitions";
  }
  return fam;
}

AbsorberFamilyBuilder general_builder(const Graph& g, const Pattern& h, GeneralBuilderOptions options) {
  return [&g, h, options](const VertexSet& s, std::size_t target, const Bitset& avoid,
                          std::uint64_t seed) {
    return disjoint_absorber_family_general(g, h, s, target, options, avoid, seed);
  };
}

AbsorberFamilyBuilder clique_builder(const Graph& g, CliqueBuilderOptions options) {
  return [&g, options](const VertexSet& s, std::size_t target, const Bitset& avoid,
                       std::uint64_t seed) {
    return disjoint_absorber_family_clique(g, s, target, options, seed, avoid);
  };
}

}  // namespace tilinglab
