#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tilinglab/graph.hpp"
#include "tilinglab/invariants.hpp"

namespace tilinglab {

enum class Verdict { held, violated, unverified };

std::string to_string(Verdict v);

/// Minimum-degree and independence-type hypotheses of the two factor
/// theorems, evaluated on a concrete graph at chosen ε and ε'.
struct HypothesisReport {
  /// "clique" (δ and α_ℓ) or "general" (δ and α*_H).
  std::string theorem;
  double epsilon = 0.0;
  double epsilon_prime = 0.0;
  std::size_t n = 0;
  std::size_t min_degree = 0;
  double degree_threshold = 0.0;
  bool degree_held = false;
  double independence_threshold = 0.0;
  Verdict independence = Verdict::unverified;
  std::optional<std::size_t> r;
  std::optional<std::size_t> ell;
  std::optional<AlphaResult> alpha;
  std::optional<AlphaStarVerdict> alpha_star;
  std::vector<std::string> notes;

  /// Degree bound met and the independence bound not refuted.
  bool held() const noexcept { return degree_held && independence != Verdict::violated; }
  /// Both bounds certified.
  bool certified() const noexcept { return degree_held && independence == Verdict::held; }
};

/// δ(G) >= ((r-ℓ)/(r-ℓ+1) + ε)n and α_ℓ(G) <= ε'n. α_ℓ comes from branch and
/// bound under `alpha_budget`; a non-exact value only refutes, never certifies.
HypothesisReport check_clique_hypotheses(const Graph& g, std::size_t r, std::size_t ell,
                                         double epsilon, double epsilon_prime,
                                         std::uint64_t alpha_budget = kDefaultAlphaBudget);

/// δ(G) >= εn and α*_H(G) <= ε'n, the latter probed at s = ⌊ε'n⌋: exhaustively
/// when the family count is under the cap, otherwise by sampling.
HypothesisReport check_general_hypotheses(const Graph& g, const Pattern& h, double epsilon,
                                          double epsilon_prime, const AlphaStarOptions& sampling);

}  // namespace tilinglab
