#include "tilinglab/absorbing/verify.hpp"

#include <algorithm>
#include <set>

#include "tilinglab/absorbing/absorbers.hpp"
#include "tilinglab/copies.hpp"

namespace tilinglab {

namespace {

std::string set_name(const std::string& name, std::size_t index) {
  return name + "[" + std::to_string(index) + "]";
}

}  // namespace

StructureCheck verify_structure(const Graph& g, const AbsorbingStructure& st, std::uint64_t budget) {
  StructureCheck out;
  auto& bad = out.violations;
  const std::size_t n = g.order();
  const std::size_t k = st.pattern.order();
  const std::size_t m = st.m;

  if (st.n != n) {
    bad.push_back("structure built for n = " + std::to_string(st.n) + ", graph has " + std::to_string(n));
    return out;
  }
  if (k < 2) {
    bad.push_back("pattern has fewer than 2 vertices");
    return out;
  }
  for (const auto* part : {&st.a, &st.x, &st.y, &st.z}) {
    if (!std::is_sorted(part->begin(), part->end()) || !is_vertex_set_of(*part, n)) {
      bad.push_back("A, X, Y and Z must be sorted vertex sets of G");
      return out;
    }
  }
  if (m == 0) bad.push_back("template scale m is 0");
  if (st.templ.m != m) bad.push_back("template scale differs from m");
  if (st.x.size() != st.templ.x_count) bad.push_back("|X| differs from |X_m|");
  if (st.x.size() != m + template_surplus(m, st.templ.beta)) bad.push_back("|X| != m + ceil(beta m)");
  if (st.y.size() != 2 * m) bad.push_back("|Y| != 2m");
  if (st.z.size() != 3 * m * (k - 1)) bad.push_back("|Z| != 3m(h-1)");

  // Disjointness and A as the union.
  std::vector<int> owner(n, -1);
  Bitset uni(n);
  auto claim = [&](const VertexSet& set, int id, const std::string& name) {
    for (Vertex v : set) {
      if (v >= n) {
        bad.push_back(name + " contains out-of-range vertex " + std::to_string(v));
        return;
      }
      if (owner[v] != -1) bad.push_back(name + " overlaps an earlier part at vertex " + std::to_string(v));
      owner[v] = id;
      uni.set(v);
    }
  };
  claim(st.x, 0, "X");
  claim(st.y, 1, "Y");
  claim(st.z, 2, "Z");
  for (std::size_t e = 0; e < st.edge_absorbers.size(); ++e) {
    claim(st.edge_absorbers[e], static_cast<int>(3 + e), set_name("A_e", e));
  }
  if (to_bitset(st.a, n) != uni) bad.push_back("A is not the union of X, Y, Z and the edge absorbers");

  // Z partition.
  if (st.z_parts.size() != 3 * m) bad.push_back("Z is not split into 3m parts");
  {
    VertexSet joined;
    for (const auto& part : st.z_parts) {
      if (part.size() != k - 1) bad.push_back("a part of Z does not have h-1 vertices");
      joined.insert(joined.end(), part.begin(), part.end());
    }
    std::sort(joined.begin(), joined.end());
    if (joined != st.z) bad.push_back("the parts of Z do not partition Z");
  }

  // Index maps.
  if (st.phi1.size() != st.templ.left_count()) {
    bad.push_back("phi1 does not cover the left side of the template");
  } else {
    VertexSet img_x(st.phi1.begin(), st.phi1.begin() + static_cast<std::ptrdiff_t>(st.templ.x_count));
    VertexSet img_y(st.phi1.begin() + static_cast<std::ptrdiff_t>(st.templ.x_count), st.phi1.end());
    std::sort(img_x.begin(), img_x.end());
    std::sort(img_y.begin(), img_y.end());
    if (img_x != st.x) bad.push_back("phi1 does not map X_m onto X");
    if (img_y != st.y) bad.push_back("phi1 does not map Y_m onto Y");
  }
  if (st.phi2.size() != st.templ.z_count()) {
    bad.push_back("phi2 does not cover Z_m");
  } else {
    std::set<std::uint32_t> seen(st.phi2.begin(), st.phi2.end());
    if (seen.size() != st.phi2.size() || (!seen.empty() && *seen.rbegin() >= st.z_parts.size())) {
      bad.push_back("phi2 is not an injection into the parts of Z");
    }
  }
  if (!bad.empty()) return out;

  // Template shape and robustness.
  for (auto [l, r] : st.templ.edges) {
    if (l >= st.templ.left_count() || r >= st.templ.z_count()) {
      bad.push_back("template edge out of range");
      return out;
    }
  }
  if (std::adjacent_find(st.templ.edges.begin(), st.templ.edges.end()) != st.templ.edges.end()) {
    bad.push_back("template has a repeated edge");
  }
  if (st.templ.max_degree() > kTemplateMaxDegree) bad.push_back("template degree exceeds 40");
  const double subsets = [&] {
    double c = 1.0;
    for (std::size_t i = 0; i < m; ++i) c = c * static_cast<double>(st.templ.x_count - i) / static_cast<double>(i + 1);
    return c;
  }();
  const auto how = subsets <= kExhaustiveTemplateCap ? TemplateVerify::exhaustive()
                                                     : TemplateVerify::sampled(1000, st.templ.seed);
  if (auto x_prime = find_falsifying_subset(st.templ, how)) {
    std::string list;
    for (auto i : *x_prime) list += (list.empty() ? "" : ",") + std::to_string(i);
    bad.push_back("template has no perfect matching for X' = {" + list + "}");
  }

  // Edge absorbers.
  if (st.edge_absorbers.size() != st.templ.edges.size()) {
    bad.push_back("number of edge absorbers differs from the number of template edges");
    return out;
  }
  const std::size_t t = st.config.t;
  for (std::size_t e = 0; e < st.edge_absorbers.size(); ++e) {
    auto [l, r] = st.templ.edges[e];
    VertexSet s{st.phi1[l]};
    const auto& part = st.z_parts[st.phi2[r]];
    s.insert(s.end(), part.begin(), part.end());
    std::sort(s.begin(), s.end());
    const auto& a_e = st.edge_absorbers[e];
    if (a_e.size() != k * t) {
      bad.push_back(set_name("A_e", e) + " has size " + std::to_string(a_e.size()) + ", expected h*t");
      continue;
    }
    ++out.absorbers_checked;
    if (!is_st_absorber(g, st.pattern, s, a_e, t, budget)) {
      bad.push_back(set_name("A_e", e) + " is not an (S, t)-absorber for its template edge");
    }
  }

  // Copy families.
  if (st.copy_families.size() != n) {
    bad.push_back("copy families are not indexed by vertex");
    return out;
  }
  const Bitset x_bits = to_bitset(st.x, n);
  CopyFinder finder(g, st.pattern);
  for (Vertex v = 0; v < n; ++v) {
    for (const auto& set : st.copy_families[v]) {
      ++out.copy_sets_checked;
      const std::string name = "copy set of vertex " + std::to_string(v);
      if (set.size() != k - 1) {
        bad.push_back(name + " does not have h-1 vertices");
        continue;
      }
      if (std::any_of(set.begin(), set.end(), [&](Vertex u) { return u >= n || !x_bits.test(u) || u == v; })) {
        bad.push_back(name + " is not inside X \\ {v}");
        continue;
      }
      VertexSet all = set;
      all.push_back(v);
      if (!is_vertex_set_of(all, n) || !finder.embed_onto(all)) {
        bad.push_back(name + " does not span a copy of H with v");
      }
    }
  }

  // Admissible remainders.
  const std::size_t capacity = (st.x.size() - m) / (k - 1);
  if (st.max_remainder > capacity) bad.push_back("max remainder exceeds what X can absorb");
  return out;
}

}  // namespace tilinglab
