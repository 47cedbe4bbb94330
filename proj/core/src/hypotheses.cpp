#include "tilinglab/hypotheses.hpp"

#include <cmath>
#include <sstream>

namespace tilinglab {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::held: return "held";
    case Verdict::violated: return "violated";
    case Verdict::unverified: return "unverified";
  }
  return "?";
}

HypothesisReport check_clique_hypotheses(const Graph& g, std::size_t r, std::size_t ell,
                                         double epsilon, double epsilon_prime,
                                         std::uint64_t alpha_budget) {
  if (r <= ell || ell < 2) throw std::invalid_argument("clique hypotheses need r > ell >= 2");
  HypothesisReport rep;
  rep.theorem = "clique";
  rep.epsilon = epsilon;
  rep.epsilon_prime = epsilon_prime;
  rep.n = g.order();
  rep.r = r;
  rep.ell = ell;
  const double n = static_cast<double>(g.order());
  const double ratio = static_cast<double>(r - ell) / static_cast<double>(r - ell + 1);
  rep.min_degree = min_degree(g);
  rep.degree_threshold = (ratio + epsilon) * n;
  rep.degree_held = static_cast<double>(rep.min_degree) >= rep.degree_threshold;
  rep.independence_threshold = epsilon_prime * n;
  rep.alpha = alpha_ell(g, ell, alpha_budget);
  const bool below = static_cast<double>(rep.alpha->value) <= rep.independence_threshold;
  if (rep.alpha->exact) {
    rep.independence = below ? Verdict::held : Verdict::violated;
  } else {
    rep.independence = below ? Verdict::unverified : Verdict::violated;
    rep.notes.push_back("alpha_" + std::to_string(ell) + " budget exhausted after " +
                        std::to_string(rep.alpha->nodes) + " nodes; value is a lower bound");
  }
  return rep;
}

HypothesisReport check_general_hypotheses(const Graph& g, const Pattern& h, double epsilon,
                                          double epsilon_prime, const AlphaStarOptions& sampling) {
  HypothesisReport rep;
  rep.theorem = "general";
  rep.epsilon = epsilon;
  rep.epsilon_prime = epsilon_prime;
  rep.n = g.order();
  const double n = static_cast<double>(g.order());
  rep.min_degree = min_degree(g);
  rep.degree_threshold = epsilon * n;
  rep.degree_held = static_cast<double>(rep.min_degree) >= rep.degree_threshold;
  rep.independence_threshold = epsilon_prime * n;
  const auto s = static_cast<std::size_t>(std::floor(epsilon_prime * n + 1e-9));
  if (s < 1 || s * h.order() > g.order()) {
    rep.independence = Verdict::unverified;
    rep.notes.push_back("alpha* probe size s = " + std::to_string(s) + " is outside 1..n/h");
    return rep;
  }
  AlphaStarOptions options = sampling;
  const bool small = count_disjoint_families(g.order(), s, h.order()) <=
                     static_cast<long double>(options.family_cap);
  options.mode = small ? AlphaStarMode::exhaustive : AlphaStarMode::sampled;
  rep.alpha_star = alpha_star_check(g, h, s, options);
  if (!rep.alpha_star->holds) {
    rep.independence = Verdict::violated;
  } else if (small) {
    rep.independence = Verdict::held;
  } else {
    rep.independence = Verdict::unverified;
    rep.notes.push_back("alpha* <= " + std::to_string(s) + " supported by " +
                        std::to_string(rep.alpha_star->families_examined) +
                        " sampled families only");
  }
  return rep;
}

}  // namespace tilinglab
