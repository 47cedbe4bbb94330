#include "tilinglab/absorbing/structure.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "tilinglab/copies.hpp"
#include "tilinglab/rng.hpp"

namespace tilinglab {

SizeLedger size_ledger(std::size_t n, std::size_t h, std::size_t t, std::size_t m, double q,
                       double gamma, std::size_t a_size) {
  SizeLedger l;
  l.a_size = a_size;
  const double ht = static_cast<double>(h * t);
  l.htm_124 = 124.0 * ht * static_cast<double>(m);
  l.htnq_240 = 240.0 * ht * static_cast<double>(n) * q;
  l.gamma_n = gamma * static_cast<double>(n);
  l.gamma_n_half = l.gamma_n / 2.0;
  l.chain_holds = l.htm_124 < l.htnq_240 && l.htnq_240 <= l.gamma_n_half;
  l.within_gamma_n = static_cast<double>(a_size) <= l.gamma_n;
  return l;
}

namespace {

VertexSet without(const Embedding& copy, Vertex v) {
  VertexSet out;
  for (Vertex u : copy) {
    if (u != v) out.push_back(u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool inside(const VertexSet& set, const Bitset& bits) {
  return std::all_of(set.begin(), set.end(), [&](Vertex v) { return bits.test(v); });
}

double binomial(std::size_t n, std::size_t k) {
  double c = 1.0;
  for (std::size_t i = 0; i < k; ++i) c = c * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return c;
}


struct XCover {
  Tiling tiling;
  /// X minus the vertices the tiling used; exactly m vertices.
  Bitset rest;
};

// Copies covering R (one stored copy set per vertex of R), then further
// copies inside X until m vertices of X remain. Backtracks over both steps.
std::optional<XCover> cover_inside_x(const CopyFinder& finder, const VertexSet& x,
                                     const std::vector<std::vector<VertexSet>>& families,
                                     const VertexSet& r, std::size_t m, std::uint64_t budget) {
  const std::size_t k = finder.pattern().order();
  const std::size_t n = finder.host().order();
  if (x.size() < m + r.size() * (k - 1)) return std::nullopt;
  const std::size_t surplus = x.size() - m - r.size() * (k - 1);
  if (surplus % k != 0) return std::nullopt;

  XCover out{{}, to_bitset(x, n)};
  std::uint64_t nodes = 0;
  // Copies with increasing lowest vertex, so each set of copies is tried once.
  std::function<bool(std::size_t, std::size_t)> extra = [&](std::size_t left, std::size_t from) {
    if (left == 0) return true;
    if (++nodes > budget) return false;
    for (auto v = out.rest.find_first(); v != Bitset::npos; v = out.rest.find_next(v)) {
      if (v < from) continue;
      Bitset later = out.rest;
      for (std::size_t u = 0; u <= v; ++u) later.reset(u);
      for (const auto& copy : finder.copies_containing(static_cast<Vertex>(v), later)) {
        for (Vertex u : copy) out.rest.reset(u);
        out.tiling.copies.push_back(copy);
        if (extra(left - 1, v + 1)) return true;
        out.tiling.copies.pop_back();
        for (Vertex u : copy) out.rest.set(u);
      }
    }
    return false;
  };
  std::function<bool(std::size_t)> choose = [&](std::size_t i) {
    if (i == r.size()) return extra(surplus / k, 0);
    if (++nodes > budget) return false;
    for (const auto& set : families[r[i]]) {
      if (!inside(set, out.rest)) continue;
      VertexSet vs = set;
      vs.push_back(r[i]);
      auto copy = finder.embed_onto(vs);
      if (!copy) continue;
      for (Vertex u : set) out.rest.reset(u);
      out.tiling.copies.push_back(std::move(*copy));
      if (choose(i + 1)) return true;
      out.tiling.copies.pop_back();
      for (Vertex u : set) out.rest.set(u);
    }
    return false;
  };
  if (!choose(0)) return std::nullopt;
  return out;
}

}  // namespace

AbsorbingStructure build_absorbing_set(const Graph& g, const Pattern& h,
                                       const AbsorberConfig& config,
                                       const AbsorberFamilyBuilder& builder, std::uint64_t seed) {
  config.validate();
  const std::size_t k = h.order();
  const std::size_t n = g.order();
  if (config.h != k) throw std::invalid_argument("build_absorbing_set: config.h differs from v(H)");
  if (n < k) throw StageFailure("copy-families", "graph has fewer than h vertices");

  AbsorbingStructure st;
  st.pattern = h;
  st.config = config;
  st.n = n;
  st.seed = seed;
  CopyFinder finder(g, h);

  // copy-families: the copy through v inside each absorber of an S ∋ v.
  const std::size_t per_vertex =
      config.overrides && config.copies_per_vertex
          ? config.copies_per_vertex
          : static_cast<std::size_t>(std::ceil(config.gamma * static_cast<double>(n)));
  std::vector<std::vector<VertexSet>> families(n);
  std::size_t short_families = 0;
  for (Vertex v = 0; v < n; ++v) {
    VertexSet s;
    for (std::size_t i = 0; i < k; ++i) s.push_back(static_cast<Vertex>((v + i) % n));
    auto fam = builder(s, per_vertex, Bitset(), derive_seed(seed, stream_tag("copy-families"), v));
    for (const auto& absorber : fam.absorbers) {
      Bitset allowed = to_bitset(absorber, n);
      if (auto copy = finder.find_containing(v, allowed)) families[v].push_back(without(*copy, v));
    }
    if (families[v].empty()) {
      throw StageFailure("copy-families",
                         "no copy of H through vertex " + std::to_string(v) +
                             (fam.failure ? " (" + *fam.failure + ")" : ""),
                         {v});
    }
    if (families[v].size() < per_vertex) {
      if (!config.overrides) {
        throw StageFailure("copy-families",
                           "vertex " + std::to_string(v) + " has " + std::to_string(families[v].size()) +
                               " disjoint copies, " + std::to_string(per_vertex) + " required",
                           {v});
      }
      ++short_families;
    }
    st.harvested.push_back(families[v].size());
  }
  if (short_families) {
    st.notes.push_back(std::to_string(short_families) + " vertices harvested fewer than " +
                       std::to_string(per_vertex) + " copies");
  }

  std::string last_stage = "sample-x";
  std::string last_detail = "no attempt made";
  VertexSet last_blocking;
  auto fail_attempt = [&](std::string stage, std::string detail, VertexSet blocking = {}) {
    last_stage = std::move(stage);
    last_detail = std::move(detail);
    last_blocking = std::move(blocking);
  };

  for (std::size_t attempt = 0; attempt < config.x_attempts; ++attempt) {
    // sample-x
    Rng rng(derive_seed(seed, stream_tag("sample-x"), attempt));
    VertexSet x;
    for (Vertex v = 0; v < n; ++v) {
      if (rng.bernoulli(config.q)) x.push_back(v);
    }
    if (static_cast<double>(x.size()) > 2.0 * static_cast<double>(n) * config.q) {
      fail_attempt("sample-x", "|X| = " + std::to_string(x.size()) + " exceeds 2nq");
      continue;
    }
    const std::size_t fixed_surplus = config.overrides ? config.x_surplus : 0;
    std::size_t m = fixed_surplus
                        ? (x.size() > fixed_surplus ? x.size() - fixed_surplus : 0)
                        : static_cast<std::size_t>(std::floor(static_cast<double>(x.size()) / (1.0 + config.beta) + 1e-9));
    if (config.overrides && config.max_template_scale) m = std::min(m, config.max_template_scale);
    if (m == 0) {
      fail_attempt("sample-x", "|X| = " + std::to_string(x.size()) + " gives template scale m = 0");
      continue;
    }
    const std::size_t surplus = fixed_surplus ? fixed_surplus : template_surplus(m, config.beta);
    const double template_beta = fixed_surplus ? static_cast<double>(surplus) / static_cast<double>(m) : config.beta;
    const std::size_t x_size = m + surplus;
    rng.shuffle(x);
    x.resize(x_size);
    std::sort(x.begin(), x.end());
    const Bitset x_bits = to_bitset(x, n);

    std::vector<std::vector<VertexSet>> prime(n);
    for (Vertex v = 0; v < n; ++v) {
      std::set<VertexSet> sets;
      for (const auto& set : families[v]) {
        if (inside(set, x_bits)) sets.insert(set);
      }
      if (config.overrides && config.direct_copy_families) {
        Bitset allowed = x_bits;
        allowed.reset(v);
        for (const auto& copy : finder.copies_containing(v, allowed)) sets.insert(without(copy, v));
      }
      prime[v].assign(sets.begin(), sets.end());
    }

    // template
    TemplateGraph templ;
    try {
      const auto verify = binomial(x_size, m) <= 20000.0
                              ? TemplateVerify::exhaustive()
                              : TemplateVerify::sampled(1000, derive_seed(seed, stream_tag("template-verify")));
      templ = build_template(m, template_beta, config.template_mode,
                             derive_seed(seed, stream_tag("template"), attempt), verify,
                             config.template_attempts);
    } catch (const TemplateError& e) {
      fail_attempt("template", e.what());
      continue;
    } catch (const std::invalid_argument& e) {
      fail_attempt("template", e.what());
      continue;
    }
    const std::size_t need = x_size + 2 * m + 3 * m * (k - 1) + k * config.t * templ.edges.size();
    if (need > n) {
      fail_attempt("template", "structure needs " + std::to_string(need) + " vertices, graph has " +
                                   std::to_string(n));
      continue;
    }

    // reserve: Y and Z are an arbitrary choice; vertices without copy
    // families go first since Y and Z never need them.
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v) {
      if (!x_bits.test(v)) rest.push_back(v);
    }
    std::stable_partition(rest.begin(), rest.end(), [&](Vertex v) { return prime[v].empty(); });
    VertexSet y(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(2 * m));
    VertexSet z(rest.begin() + static_cast<std::ptrdiff_t>(2 * m),
                rest.begin() + static_cast<std::ptrdiff_t>(2 * m + 3 * m * (k - 1)));
    std::vector<VertexSet> z_parts;
    for (std::size_t i = 0; i < 3 * m; ++i) {
      VertexSet part(z.begin() + static_cast<std::ptrdiff_t>(i * (k - 1)),
                     z.begin() + static_cast<std::ptrdiff_t>((i + 1) * (k - 1)));
      std::sort(part.begin(), part.end());
      z_parts.push_back(std::move(part));
    }
    std::sort(y.begin(), y.end());
    std::sort(z.begin(), z.end());

    std::vector<Vertex> phi1(x.begin(), x.end());
    phi1.insert(phi1.end(), y.begin(), y.end());
    std::vector<std::uint32_t> phi2(3 * m);
    for (std::uint32_t j = 0; j < 3 * m; ++j) phi2[j] = j;

    // edge-absorbers
    Bitset used = x_bits;
    for (Vertex v : y) used.set(v);
    for (Vertex v : z) used.set(v);
    std::vector<VertexSet> edge_absorbers;
    bool ok = true;
    for (std::size_t e = 0; e < templ.edges.size(); ++e) {
      auto [l, rz] = templ.edges[e];
      VertexSet s{phi1[l]};
      const auto& part = z_parts[phi2[rz]];
      s.insert(s.end(), part.begin(), part.end());
      std::sort(s.begin(), s.end());
      auto fam = builder(s, 1, used, derive_seed(seed, stream_tag("edge-absorber"), attempt, e));
      if (fam.absorbers.empty()) {
        fail_attempt("edge-absorbers",
                     "no absorber for template edge " + std::to_string(e) +
                         (fam.failure ? " (" + *fam.failure + ")" : ""),
                     s);
        ok = false;
        break;
      }
      if (fam.absorbers.front().size() != k * config.t) {
        throw StageFailure("edge-absorbers", "builder returned an absorber of size " +
                                                 std::to_string(fam.absorbers.front().size()) +
                                                 ", expected h*t = " + std::to_string(k * config.t));
      }
      for (Vertex v : fam.absorbers.front()) used.set(v);
      edge_absorbers.push_back(std::move(fam.absorbers.front()));
    }
    if (!ok) continue;

    // event
    const double needed_fraction = std::pow(config.q, static_cast<double>(k - 1)) / 2.0;
    std::optional<Vertex> lacking;
    for (Vertex v = 0; v < n && !lacking; ++v) {
      if (used.test(v)) continue;
      const double bound = std::max(1.0, needed_fraction * static_cast<double>(families[v].size()));
      if (static_cast<double>(prime[v].size()) < bound) lacking = v;
    }
    if (lacking) {
      fail_attempt("event", "vertex " + std::to_string(*lacking) + " outside A has too few copy sets inside X",
                   {*lacking});
      continue;
    }

    // remainders: every admissible R must be coverable inside X. At desk
    // scale V \ A is small, so this is checked outright (or sampled).
    const auto xi_n = static_cast<std::size_t>(std::floor(config.xi * static_cast<double>(n) + 1e-9));
    const std::size_t max_remainder = std::min(xi_n, (x.size() - m) / (k - 1));
    const VertexSet free = to_vertex_set(~used);
    const std::size_t a_size = n - free.size();
    std::vector<std::size_t> sizes;
    double subsets = 0.0;
    for (std::size_t rs = 0; rs <= std::min(max_remainder, free.size()); ++rs) {
      if ((a_size + rs) % k != 0) continue;
      sizes.push_back(rs);
      subsets += binomial(free.size(), rs);
    }
    std::optional<VertexSet> stuck;
    auto try_remainder = [&](const VertexSet& r) {
      if (!cover_inside_x(finder, x, prime, r, m, kDefaultFactorBudget)) stuck = r;
    };
    const bool sampled = subsets > static_cast<double>(kRemainderCheckCap);
    if (!sampled) {
      for (std::size_t rs : sizes) {
        std::vector<std::size_t> idx(rs);
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        while (!stuck) {
          VertexSet r;
          for (std::size_t i : idx) r.push_back(free[i]);
          try_remainder(r);
          std::size_t i = rs;
          while (i > 0 && idx[i - 1] == free.size() - rs + i - 1) --i;
          if (i == 0) break;
          ++idx[i - 1];
          for (std::size_t j = i; j < rs; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (stuck) break;
      }
    } else {
      Rng pick(derive_seed(seed, stream_tag("remainder-check"), attempt));
      for (std::size_t i = 0; i < kRemainderCheckCap && !stuck; ++i) {
        VertexSet r = free;
        pick.shuffle(r);
        r.resize(sizes[i % sizes.size()]);
        std::sort(r.begin(), r.end());
        try_remainder(r);
      }
    }
    if (stuck) {
      std::string list;
      for (Vertex v : *stuck) list += (list.empty() ? "" : ",") + std::to_string(v);
      fail_attempt("remainders", "R = {" + list + "} cannot be covered inside X", *stuck);
      continue;
    }

    st.m = m;
    st.attempts = attempt + 1;
    st.a = to_vertex_set(used);
    st.x = std::move(x);
    st.y = std::move(y);
    st.z = std::move(z);
    st.z_parts = std::move(z_parts);
    st.templ = std::move(templ);
    st.phi1 = std::move(phi1);
    st.phi2 = std::move(phi2);
    st.edge_absorbers = std::move(edge_absorbers);
    st.copy_families = std::move(prime);
    st.max_remainder = max_remainder;
    std::size_t absorber_total = 0;
    for (const auto& a : st.edge_absorbers) absorber_total += a.size();
    st.ledger = size_ledger(n, k, config.t, m, config.q, config.gamma, st.a.size());
    st.ledger.x_size = st.x.size();
    st.ledger.y_size = st.y.size();
    st.ledger.z_size = st.z.size();
    st.ledger.edge_absorber_total = absorber_total;
    if (config.overrides) st.notes.push_back("desk-scale override constants in use");
    if (sampled) {
      st.notes.push_back("remainder check sampled " + std::to_string(kRemainderCheckCap) + " of " +
                         std::to_string(static_cast<long long>(subsets)) + " admissible R");
    }
    return st;
  }
  throw StageFailure(last_stage, last_detail + " (after " + std::to_string(config.x_attempts) + " attempts)",
                     last_blocking);
}

std::optional<std::string> remainder_violation(const AbsorbingStructure& st, const VertexSet& r) {
  const std::size_t k = st.pattern.order();
  if (!is_vertex_set_of(r, st.n)) return "R is not a set of distinct vertices of G";
  Bitset a = to_bitset(st.a, st.n);
  for (Vertex v : r) {
    if (a.test(v)) return "R meets A at vertex " + std::to_string(v);
  }
  if ((st.a.size() + r.size()) % k != 0) {
    return "h = " + std::to_string(k) + " does not divide |A| + |R| = " + std::to_string(st.a.size() + r.size());
  }
  if (r.size() > st.max_remainder) {
    return "|R| = " + std::to_string(r.size()) + " exceeds the admissible maximum " +
           std::to_string(st.max_remainder) + " (min of floor(xi n) and (|X| - m)/(h - 1))";
  }
  return std::nullopt;
}

Tiling absorb(const Graph& g, const AbsorbingStructure& st, const VertexSet& r, std::uint64_t budget) {
  if (auto why = remainder_violation(st, r)) throw std::invalid_argument("absorb: " + *why);
  const Pattern& h = st.pattern;
  const std::size_t n = st.n;
  if (g.order() != n) throw std::invalid_argument("absorb: graph does not match the structure");
  CopyFinder finder(g, h);
  auto cover = cover_inside_x(finder, st.x, st.copy_families, r, st.m, budget);
  if (!cover) {
    throw AbsorbError("copy-families", "no disjoint choice of copy sets covers R and the surplus of X");
  }
  Tiling out = std::move(cover->tiling);
  const Bitset& free_x = cover->rest;

  // Perfect matching of the template on (X' ∪ Y_m, Z_m).
  std::vector<std::uint32_t> x_prime;
  for (std::uint32_t i = 0; i < st.x.size(); ++i) {
    if (free_x.test(st.phi1[i])) x_prime.push_back(i);
  }
  auto matching = robust_matching(st.templ, x_prime);
  if (!matching) {
    throw AbsorbError("template-matching", "no perfect matching for X'; the template certificate is wrong");
  }
  std::map<std::pair<std::uint32_t, std::uint32_t>, bool> matched;
  for (std::uint32_t rz = 0; rz < st.templ.z_count(); ++rz) matched[{matching->right_to_left[rz], rz}] = true;

  for (std::size_t e = 0; e < st.templ.edges.size(); ++e) {
    Bitset domain = to_bitset(st.edge_absorbers[e], n);
    if (matched.contains(st.templ.edges[e])) {
      auto [l, rz] = st.templ.edges[e];
      domain.set(st.phi1[l]);
      for (Vertex v : st.z_parts[st.phi2[rz]]) domain.set(v);
    }
    auto factor = find_factor_in(g, h, domain, budget);
    if (factor.status != FactorStatus::found) {
      throw AbsorbError("edge-factor", "no H-factor inside the absorber of template edge " + std::to_string(e) +
                                           " (" + std::string(to_string(factor.status)) + ")");
    }
    out.append(*factor.tiling);
  }
  return out;
}

}  // namespace tilinglab
