#include "tilinglab/absorbing/template_graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "tilinglab/rng.hpp"

namespace tilinglab {

std::size_t TemplateGraph::max_degree() const {
  std::vector<std::size_t> left(left_count(), 0), right(z_count(), 0);
  for (auto [l, r] : edges) {
    ++left[l];
    ++right[r];
  }
  std::size_t best = 0;
  for (auto d : left) best = std::max(best, d);
  for (auto d : right) best = std::max(best, d);
  return best;
}

BipartiteGraph TemplateGraph::bipartite() const {
  BipartiteGraph b(left_count(), z_count());
  for (auto [l, r] : edges) b.add_edge(l, r);
  return b;
}

std::optional<BipartiteMatching> robust_matching(const TemplateGraph& t,
                                                 const std::vector<std::uint32_t>& x_prime) {
  if (x_prime.size() != t.m) throw std::invalid_argument("robust_matching: |X'| must equal m");
  std::vector<bool> active(t.left_count(), false);
  for (auto x : x_prime) {
    if (x >= t.x_count) throw std::invalid_argument("robust_matching: X' index outside X_m");
    active[x] = true;
  }
  for (std::size_t y = t.x_count; y < t.left_count(); ++y) active[y] = true;
  const auto b = t.bipartite();
  auto matching = maximum_matching(b, &active);
  if (matching.size != t.z_count()) return std::nullopt;
  return matching;
}

bool has_robust_matching(const TemplateGraph& t, const std::vector<std::uint32_t>& x_prime) {
  return robust_matching(t, x_prime).has_value();
}

namespace {

double binomial(std::size_t n, std::size_t k) {
  double c = 1.0;
  for (std::size_t i = 0; i < k; ++i) c = c * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return c;
}

// Next m-combination of 0..n-1 in lexicographic order.
bool next_combination(std::vector<std::uint32_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

void add_complete(TemplateGraph& t) {
  for (std::uint32_t l = 0; l < t.left_count(); ++l) {
    for (std::uint32_t r = 0; r < t.z_count(); ++r) t.edges.emplace_back(l, r);
  }
}

void add_banded(TemplateGraph& t) {
  const std::size_t m = t.m;
  const std::size_t k = t.x_count - m;
  // y_j -- z_j for the 2m Y vertices.
  for (std::uint32_t j = 0; j < 2 * m; ++j) {
    t.edges.emplace_back(static_cast<std::uint32_t>(t.x_count + j), j);
  }
  // x_i -- z_{2m+j} for j in [i-k, i] ∩ [0, m-1]. Sorted X' = (i_1 < ... < i_m)
  // matches i_s to j = s - 1, since s - 1 <= i_s <= s - 1 + k.
  for (std::uint32_t i = 0; i < t.x_count; ++i) {
    const std::size_t lo = i > k ? i - k : 0;
    const std::size_t hi = std::min<std::size_t>(i, m - 1);
    for (std::size_t j = lo; j <= hi; ++j) {
      t.edges.emplace_back(i, static_cast<std::uint32_t>(2 * m + j));
    }
  }
}

// Left vertices get degree 8; right stubs are spread evenly, then multi-edges
// are removed by random endpoint swaps.
void add_random_regular(TemplateGraph& t, Rng& rng) {
  const std::size_t left = t.left_count();
  const std::size_t right = t.z_count();
  const std::size_t left_degree = std::min<std::size_t>(8, right);
  std::vector<std::uint32_t> right_stubs;
  right_stubs.reserve(left * left_degree);
  for (std::size_t i = 0; i < left * left_degree; ++i) {
    right_stubs.push_back(static_cast<std::uint32_t>(i % right));
  }
  rng.shuffle(right_stubs);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::size_t i = 0; i < right_stubs.size(); ++i) {
    pairs.emplace_back(static_cast<std::uint32_t>(i / left_degree), right_stubs[i]);
  }
  std::multiset<std::pair<std::uint32_t, std::uint32_t>> present(pairs.begin(), pairs.end());
  for (std::size_t round = 0; round < 100000; ++round) {
    std::size_t bad = pairs.size();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (present.count(pairs[i]) > 1) {
        bad = i;
        break;
      }
    }
    if (bad == pairs.size()) break;
    auto j = static_cast<std::size_t>(rng.below(pairs.size()));
    auto a = pairs[bad];
    auto b = pairs[j];
    std::pair<std::uint32_t, std::uint32_t> a2{a.first, b.second}, b2{b.first, a.second};
    if (present.count(a2) || present.count(b2) || a.first == b.first) continue;
    present.erase(present.find(a));
    present.erase(present.find(b));
    pairs[bad] = a2;
    pairs[j] = b2;
    present.insert(a2);
    present.insert(b2);
  }
  t.edges = std::move(pairs);
}

std::string describe(const std::vector<std::uint32_t>& subset) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < subset.size(); ++i) out << (i ? "," : "") << subset[i];
  out << "}";
  return out.str();
}

}  // namespace

std::optional<std::vector<std::uint32_t>> find_falsifying_subset(const TemplateGraph& t,
                                                                 const TemplateVerify& verify) {
  switch (verify.kind) {
    case TemplateVerify::Kind::none:
      return std::nullopt;
    case TemplateVerify::Kind::exhaustive: {
      if (binomial(t.x_count, t.m) > kExhaustiveTemplateCap) {
        throw std::invalid_argument("exhaustive template verification: too many subsets");
      }
      std::vector<std::uint32_t> subset(t.m);
      std::iota(subset.begin(), subset.end(), 0u);
      do {
        if (!has_robust_matching(t, subset)) return subset;
      } while (next_combination(subset, t.x_count));
      return std::nullopt;
    }
    case TemplateVerify::Kind::sampled: {
      Rng rng(derive_seed(verify.seed, stream_tag("template-verify")));
      std::vector<std::uint32_t> all(t.x_count);
      std::iota(all.begin(), all.end(), 0u);
      for (std::size_t s = 0; s < verify.samples; ++s) {
        rng.shuffle(all);
        std::vector<std::uint32_t> subset(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(t.m));
        std::sort(subset.begin(), subset.end());
        if (!has_robust_matching(t, subset)) return subset;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

TemplateGraph build_template(std::size_t m, double beta, TemplateMode mode, std::uint64_t seed,
                             const TemplateVerify& verify, std::size_t attempts) {
  if (m < 1) throw std::invalid_argument("build_template: m must be >= 1");
  if (!(beta > 0.0)) throw std::invalid_argument("build_template: beta must be positive");
  TemplateGraph t;
  t.m = m;
  t.beta = beta;
  t.x_count = m + template_surplus(m, beta);
  t.seed = seed;
  if (mode == TemplateMode::automatic) {
    mode = t.left_count() <= kTemplateMaxDegree ? TemplateMode::complete_bipartite
                                                : TemplateMode::random_regular;
  }
  t.mode = mode;

  auto certify = [&](const std::string& analytic) {
    if (auto bad = find_falsifying_subset(t, verify)) {
      throw TemplateError("template fails for X' = " + describe(*bad), *bad);
    }
    t.certificate = analytic;
    if (verify.kind == TemplateVerify::Kind::exhaustive) {
      t.certificate += "; exhaustive over " + std::to_string(static_cast<long long>(binomial(t.x_count, m))) +
                       " subsets";
    } else if (verify.kind == TemplateVerify::Kind::sampled) {
      t.certificate += "; sampled " + std::to_string(verify.samples) + " subsets (seed " +
                       std::to_string(verify.seed) + ")";
    }
  };

  switch (mode) {
    case TemplateMode::complete_bipartite:
      if (t.left_count() > kTemplateMaxDegree) {
        throw std::invalid_argument("complete-bipartite template needs 3m + ceil(beta m) <= 40");
      }
      add_complete(t);
      std::sort(t.edges.begin(), t.edges.end());
      certify("Hall's condition holds in a complete bipartite graph");
      return t;
    case TemplateMode::banded:
      if (t.x_count - m + 1 > kTemplateMaxDegree) {
        throw std::invalid_argument("banded template needs ceil(beta m) + 1 <= 40");
      }
      add_banded(t);
      std::sort(t.edges.begin(), t.edges.end());
      certify("banded: the i-th smallest vertex of X' matches the i-th X block vertex of Z_m");
      return t;
    case TemplateMode::random_regular: {
      std::vector<std::uint32_t> last;
      for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
        Rng rng(derive_seed(seed, stream_tag("template"), attempt));
        t.edges.clear();
        add_random_regular(t, rng);
        std::sort(t.edges.begin(), t.edges.end());
        if (std::adjacent_find(t.edges.begin(), t.edges.end()) != t.edges.end()) continue;
        if (t.max_degree() > kTemplateMaxDegree) continue;
        try {
          certify("random bounded-degree pairing, attempt " + std::to_string(attempt));
          return t;
        } catch (const TemplateError& e) {
          last = e.falsifying();
        }
      }
      throw TemplateError("random-regular template failed verification after " +
                              std::to_string(attempts) + " attempts",
                          last);
    }
    case TemplateMode::automatic:
      break;
  }
  throw std::logic_error("unreachable template mode");
}

}  // namespace tilinglab
