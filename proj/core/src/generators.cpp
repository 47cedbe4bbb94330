#include "tilinglab/generators.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "tilinglab/cliques.hpp"
#include "tilinglab/rng.hpp"

namespace tilinglab {
namespace {

// Sample-then-repair without the n >= ell + 1 guard; parts of the lower-bound
// construction can be smaller than that.
GammaGraph repaired_sample(std::size_t ell, std::size_t n, std::uint64_t seed) {
  GammaGraph out;
  const double p = n < 2 ? 0.0 : std::pow(static_cast<double>(n), -2.0 / static_cast<double>(ell + 1));
  const Graph sample = gen_gnp(n, p, seed);
  out.graph = sample;
  for_each_clique(sample, ell + 1, sample.full_set(), [&](std::span<const Vertex> c) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        if (!out.graph.has_edge(c[i], c[j])) return true;
      }
    }
    out.graph.remove_edge(c[0], c[1]);
    ++out.removed_edges;
    return true;
  });
  out.max_degree = max_degree(out.graph);
  return out;
}

}  // namespace

Graph gen_gnp(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gen_gnp: p must lie in [0, 1]");
  Graph g(n);
  Rng rng(derive_seed(seed, stream_tag("gnp")));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) g.add_edge(u, v);
    }
  }
  return g;
}

Graph gen_complete_multipartite(std::span<const std::size_t> sizes) {
  if (sizes.empty()) throw std::invalid_argument("gen_complete_multipartite: no parts");
  std::vector<std::size_t> part_of;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] == 0) throw std::invalid_argument("gen_complete_multipartite: empty part");
    part_of.insert(part_of.end(), sizes[i], i);
  }
  Graph g(part_of.size());
  for (Vertex u = 0; u < part_of.size(); ++u) {
    for (Vertex v = u + 1; v < part_of.size(); ++v) {
      if (part_of[u] != part_of[v]) g.add_edge(u, v);
    }
  }
  return g;
}

Graph gen_two_cliques(std::size_t n) {
  if (n % 2 != 0 || n < 4) throw std::invalid_argument("gen_two_cliques: n must be even and >= 4");
  const std::size_t small = n / 2 - 1;
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if ((u < small) == (v < small)) g.add_edge(u, v);
    }
  }
  return g;
}

std::vector<std::size_t> hs_tripartite_sizes(std::size_t n) {
  if (n % 3 != 0 || n < 6) throw std::invalid_argument("hs_tripartite_sizes: n must be a multiple of 3, >= 6");
  return {n / 3 - 1, n / 3, n / 3 + 1};
}

GammaGraph gen_gamma(std::size_t ell, std::size_t n, std::uint64_t seed, bool compute_alpha,
                     std::uint64_t alpha_budget) {
  if (ell < 2) throw std::invalid_argument("gen_gamma: ell must be >= 2");
  if (n < ell + 1) throw std::invalid_argument("gen_gamma: n must be >= ell + 1");
  GammaGraph out = repaired_sample(ell, n, seed);
  if (compute_alpha) out.alpha = alpha_ell(out.graph, ell, alpha_budget);
  return out;
}

LowerBoundConstruction gen_lower_bound_construction(std::size_t r, std::size_t ell, std::size_t n,
                                                    std::uint64_t seed) {
  if (ell < 2) throw std::invalid_argument("lower-bound construction: ell must be >= 2");
  if (r <= ell || 2 * ell > r) {
    throw std::invalid_argument("lower-bound construction: requires 2 <= ell <= r/2 (r = " +
                                std::to_string(r) + ", ell = " + std::to_string(ell) + ")");
  }
  if (n % r != 0) throw std::invalid_argument("lower-bound construction: r must divide n");

  LowerBoundConstruction out;
  out.x = (r - 1) / ell;
  out.y = r - out.x * ell;
  const std::size_t unit = n / r;
  std::vector<std::size_t> sizes;
  sizes.push_back(out.y * unit - 1);
  sizes.push_back(ell * unit + 1);
  for (std::size_t i = 1; i < out.x; ++i) sizes.push_back(ell * unit);
  for (std::size_t s : sizes) {
    if (s == 0) throw std::invalid_argument("lower-bound construction: n too small, a part is empty");
  }

  out.graph = gen_complete_multipartite(sizes);
  Vertex offset = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    VertexSet part(sizes[i]);
    std::iota(part.begin(), part.end(), offset);
    // Inside a part the complete multipartite host has no edges yet.
    GammaGraph inner = repaired_sample(ell, sizes[i], derive_seed(seed, stream_tag("part"), i));
    for (auto [u, v] : inner.graph.edges()) out.graph.add_edge(offset + u, offset + v);
    out.parts.push_back(std::move(part));
    offset += static_cast<Vertex>(sizes[i]);
  }
  return out;
}

}  // namespace tilinglab
