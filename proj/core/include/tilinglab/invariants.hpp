#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tilinglab/graph.hpp"

namespace tilinglab {

inline constexpr std::uint64_t kDefaultAlphaBudget = 50'000'000;
inline constexpr std::uint64_t kDefaultFamilyCap = 2'000'000;

/// Throws std::invalid_argument on the empty graph.
std::size_t min_degree(const Graph& g);
std::size_t max_degree(const Graph& g);

struct AlphaResult {
  std::size_t value = 0;
  /// A vertex set of size `value` inducing no K_ell.
  VertexSet witness;
  /// False when the node budget ran out; `value` is then a lower bound.
  bool exact = true;
  std::uint64_t nodes = 0;
};

/// Largest induced K_ell-free subgraph (ell = 2: independence number).
///
/// Branch and bound over "which vertices to drop": find the first K_ell copy
/// among the remaining vertices, take its member of largest remaining degree
/// (ties to the smallest index), and branch on dropping it or keeping it.
/// The bound partitions the remaining vertices greedily into cliques; a
/// clique of size k keeps at most min(k, ell - 1) vertices.
AlphaResult alpha_ell(const Graph& g, std::size_t ell, std::uint64_t budget = kDefaultAlphaBudget);

enum class AlphaStarMode { exhaustive, sampled, witness };

std::string to_string(AlphaStarMode mode);

struct AlphaStarOptions {
  AlphaStarMode mode = AlphaStarMode::exhaustive;
  /// Sampled mode: number of random families and their seed.
  std::size_t trials = 500;
  std::uint64_t seed = 0;
  /// Exhaustive mode refuses when the number of families exceeds this.
  std::uint64_t family_cap = kDefaultFamilyCap;
};

struct AlphaStarVerdict {
  std::size_t s = 0;
  AlphaStarMode mode = AlphaStarMode::exhaustive;
  std::size_t trials = 0;
  bool holds = true;
  /// h pairwise-disjoint sets with no traversing copy; empty when holds.
  std::vector<VertexSet> witness;
  std::uint64_t families_examined = 0;
  std::string note;
};

class FamilyCapExceeded : public std::runtime_error {
 public:
  FamilyCapExceeded(long double families, std::uint64_t cap);
};

/// Number of unordered families of `parts` pairwise-disjoint `size`-subsets of an n-set.
long double count_disjoint_families(std::size_t n, std::size_t size, std::size_t parts);

/// Does every family of h disjoint s-sets induce a traversing copy of H?
/// Requires h * s <= n.
AlphaStarVerdict alpha_star_check(const Graph& g, const Pattern& h, std::size_t s,
                                  const AlphaStarOptions& options);

/// Re-verifies a claimed failing family: true iff the sets are pairwise
/// disjoint, each has size >= s, and no traversing copy exists.
bool verify_alpha_star_witness(const Graph& g, const Pattern& h, std::size_t s,
                               const std::vector<VertexSet>& family);

struct AlphaStarUpper {
  /// Smallest passing s; nullopt stands for the infinity sentinel.
  std::optional<std::size_t> value;
  /// True in sampled mode: the scan is an empirical estimate.
  bool estimate = false;
  std::vector<AlphaStarVerdict> scan;
};

AlphaStarUpper alpha_star_upper(const Graph& g, const Pattern& h, const AlphaStarOptions& options);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  std::string str() const;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

Rational make_rational(std::int64_t num, std::int64_t den);
bool operator<(const Rational& a, const Rational& b);

/// max over vertex subsets U of H with |U| >= 2 of e(H[U]) / (|U| - 1).
Rational density_exponent(const Pattern& h);

struct ParamReport {
  std::size_t n = 0;
  std::size_t edges = 0;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  std::size_t max_clique = 0;
  std::map<std::size_t, AlphaResult> alpha_ell;
  std::optional<AlphaStarVerdict> alpha_star;
  std::optional<Rational> d_h;
  std::string pattern;
};

struct ParamRequest {
  std::vector<std::size_t> ells;
  std::uint64_t alpha_budget = kDefaultAlphaBudget;
  const Pattern* pattern = nullptr;
  std::optional<std::size_t> alpha_star_s;
  AlphaStarOptions alpha_star;
};

ParamReport compute_params(const Graph& g, const ParamRequest& request);

}  // namespace tilinglab
