#pragma once

#include <cstddef>
#include <string>

namespace tilinglab {

enum class TemplateMode {
  /// Every X_m ∪ Y_m vertex joined to every Z_m vertex; needs 3m + ⌈βm⌉ <= 40.
  complete_bipartite,
  /// Y_m matched to its own block of Z_m, X_m joined to the remaining m
  /// vertices by a band of width k + 1. Robust by a sorting argument, with
  /// only m(k + 3) edges, which is what makes desk-scale structures fit.
  banded,
  /// Seeded configuration pairing with all degrees in [8, 40], then verified.
  random_regular,
  /// complete_bipartite when the degree bound allows it, else random_regular.
  automatic,
};

std::string to_string(TemplateMode mode);
TemplateMode template_mode_from_string(const std::string& name);

/// ⌈βm⌉ computed so that β·m values that are integers up to rounding stay exact.
std::size_t template_surplus(std::size_t m, double beta);

struct AbsorberConfig {
  double gamma = 0.2;
  std::size_t t = 3;
  double q = 0.0;
  double beta = 0.0;
  double xi = 0.0;
  std::size_t h = 3;
  /// False: q, β and ξ follow the default bindings exactly.
  bool overrides = false;

  // Desk-scale knobs. Only honoured when `overrides` is set.
  /// Target |H_v| per vertex; 0 means ⌈γn⌉.
  std::size_t copies_per_vertex = 0;
  /// Cap on the template scale m; 0 means no cap.
  std::size_t max_template_scale = 0;
  /// |X| - m; 0 means ⌈βm⌉. The template then uses β' = surplus/m.
  std::size_t x_surplus = 0;
  /// Also collect copy families directly inside the sampled X.
  bool direct_copy_families = false;
  TemplateMode template_mode = TemplateMode::automatic;

  std::size_t x_attempts = 50;
  std::size_t template_attempts = 20;
  std::size_t partition_attempts = 20;

  /// q = γ/(500ht), β = q^(h-1)γ/4, ξ = β/(h-1).
  static AbsorberConfig paper_defaults(double gamma, std::size_t h, std::size_t t);
  /// Explicit q and β; ξ is still β/(h-1).
  static AbsorberConfig desk(double gamma, std::size_t h, std::size_t t, double q, double beta);

  /// Throws std::invalid_argument when a binding or range is violated.
  void validate() const;
};

/// A desk configuration sized for an n-vertex host: the largest template
/// scale m <= 2, then the largest X-surplus k, whose banded structure fits in
/// about 0.95n vertices and still admits some remainder. Since
/// |A| ≡ k (mod h), a remainder R must have |R| ≡ -k (mod h) and
/// |R| <= ⌊k/(h-1)⌋; k = 1 with h >= 3 admits nothing.
AbsorberConfig desk_config(std::size_t n, std::size_t h, std::size_t t);

/// Vertices a structure with template scale m and X-surplus k occupies when
/// the template is banded.
std::size_t banded_structure_size(std::size_t m, std::size_t surplus, std::size_t h, std::size_t t);

/// Does some |R| <= ⌊k/(h-1)⌋ satisfy |R| ≡ -k (mod h)?
bool surplus_admits_remainder(std::size_t surplus, std::size_t h);

}  // namespace tilinglab
