#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tilinglab/absorbing/config.hpp"
#include "tilinglab/matching.hpp"

namespace tilinglab {

inline constexpr std::size_t kTemplateMaxDegree = 40;

/// Bipartite template B_m. Left side: X_m (indices 0..x_count-1) followed by
/// Y_m (2m vertices); right side: Z_m (3m vertices).
struct TemplateGraph {
  std::size_t m = 0;
  double beta = 0.0;
  std::size_t x_count = 0;
  TemplateMode mode = TemplateMode::banded;
  std::uint64_t seed = 0;
  /// (left, right) pairs, sorted.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  /// How the robust-matching property was certified.
  std::string certificate;

  std::size_t y_count() const noexcept { return 2 * m; }
  std::size_t z_count() const noexcept { return 3 * m; }
  std::size_t left_count() const noexcept { return x_count + y_count(); }
  std::size_t max_degree() const;
  BipartiteGraph bipartite() const;
};

struct TemplateVerify {
  enum class Kind { exhaustive, sampled, none };
  Kind kind = Kind::exhaustive;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;

  static TemplateVerify exhaustive() { return {Kind::exhaustive, 0, 0}; }
  static TemplateVerify sampled(std::size_t k, std::uint64_t seed) { return {Kind::sampled, k, seed}; }
  static TemplateVerify none() { return {Kind::none, 0, 0}; }
};

class TemplateError : public std::runtime_error {
 public:
  TemplateError(const std::string& what, std::vector<std::uint32_t> falsifying)
      : std::runtime_error(what), falsifying_(std::move(falsifying)) {}
  /// An m-subset X' of X_m (template indices) without a perfect matching.
  const std::vector<std::uint32_t>& falsifying() const noexcept { return falsifying_; }

 private:
  std::vector<std::uint32_t> falsifying_;
};

/// Does (X' ∪ Y_m, Z_m) have a perfect matching? X' holds X_m indices.
bool has_robust_matching(const TemplateGraph& t, const std::vector<std::uint32_t>& x_prime);

/// The matching itself: right_to_left[z] is the matched left vertex.
std::optional<BipartiteMatching> robust_matching(const TemplateGraph& t,
                                                 const std::vector<std::uint32_t>& x_prime);

/// Checks every (or k random) m-subsets X'; returns the first falsifying X'.
std::optional<std::vector<std::uint32_t>> find_falsifying_subset(const TemplateGraph& t,
                                                                 const TemplateVerify& verify);

/// Number of m-subsets of X_m; exhaustive verification refuses above this.
inline constexpr double kExhaustiveTemplateCap = 2e6;

/// Builds and certifies B_m. Random-regular templates are resampled up to
/// `attempts` times; TemplateError carries the last falsifying subset.
TemplateGraph build_template(std::size_t m, double beta, TemplateMode mode, std::uint64_t seed,
                             const TemplateVerify& verify, std::size_t attempts = 20);

}  // namespace tilinglab
