#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tilinglab/absorbing/absorbers.hpp"
#include "tilinglab/absorbing/config.hpp"
#include "tilinglab/absorbing/template_graph.hpp"
#include "tilinglab/exact_factor.hpp"
#include "tilinglab/graph.hpp"
#include "tilinglab/tiling.hpp"

namespace tilinglab {

/// The construction's size bookkeeping: 124htm < 240htnq <= γn/2, and |A| <= γn.
struct SizeLedger {
  std::size_t a_size = 0;
  std::size_t x_size = 0;
  std::size_t y_size = 0;
  std::size_t z_size = 0;
  std::size_t edge_absorber_total = 0;
  double htm_124 = 0.0;
  double htnq_240 = 0.0;
  double gamma_n_half = 0.0;
  double gamma_n = 0.0;
  bool chain_holds = false;
  bool within_gamma_n = false;
};

SizeLedger size_ledger(std::size_t n, std::size_t h, std::size_t t, std::size_t m, double q,
                       double gamma, std::size_t a_size);

struct AbsorbingStructure {
  Pattern pattern = Pattern::clique(2);
  AbsorberConfig config;
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  /// X-sampling rounds used.
  std::size_t attempts = 0;

  VertexSet a;
  VertexSet x;
  VertexSet y;
  VertexSet z;
  /// Partition of Z into (h-1)-sets.
  std::vector<VertexSet> z_parts;
  TemplateGraph templ;
  /// Template left index -> host vertex; X_m maps onto X (sorted), Y_m onto Y.
  std::vector<Vertex> phi1;
  /// Template right index -> index into z_parts.
  std::vector<std::uint32_t> phi2;
  /// A_e for the template edge with the same index.
  std::vector<VertexSet> edge_absorbers;
  /// H'_v: (h-1)-subsets of X that form a copy of H together with v.
  std::vector<std::vector<VertexSet>> copy_families;
  /// |H_v| as harvested from absorber runs.
  std::vector<std::size_t> harvested;
  /// Largest |R| absorb() accepts: min(⌊ξn⌋, ⌊(|X| - m)/(h - 1)⌋).
  std::size_t max_remainder = 0;
  SizeLedger ledger;
  std::vector<std::string> notes;
};

/// Admissible remainders checked one by one during the build; above this many
/// the check samples this many instead and says so in the notes.
inline constexpr std::size_t kRemainderCheckCap = 20000;

class StageFailure : public std::runtime_error {
 public:
  StageFailure(std::string stage, const std::string& detail, VertexSet blocking = {})
      : std::runtime_error(stage + ": " + detail), stage_(std::move(stage)), blocking_(std::move(blocking)) {}
  const std::string& stage() const noexcept { return stage_; }
  /// The S (or vertex) that could not be served, when there is one.
  const VertexSet& blocking() const noexcept { return blocking_; }

 private:
  std::string stage_;
  VertexSet blocking_;
};

/// Assembles A = X ∪ Y ∪ Z ∪ ⋃A_e:
///   copy-families  H_v from absorber runs with v ∈ S
///   sample-x       X by q-sampling, |X| <= 2nq, trimmed to m + ⌈βm⌉
///   template       B_m, certified
///   reserve        Y (2m) and Z (3m(h-1)) from V \ X
///   edge-absorbers one A_e per template edge, greedily disjoint
///   event          every vertex outside A keeps max(1, q^(h-1)|H_v|/2) sets in H'_v
///   remainders     every admissible R ⊆ V \ A can be covered inside X with
///                  m vertices of X left over (sampled above kRemainderCheckCap)
/// Stages from sample-x on are retried with a fresh X up to config.x_attempts.
AbsorbingStructure build_absorbing_set(const Graph& g, const Pattern& h,
                                       const AbsorberConfig& config,
                                       const AbsorberFamilyBuilder& builder, std::uint64_t seed);

/// Why R is not an admissible remainder, or nullopt.
std::optional<std::string> remainder_violation(const AbsorbingStructure& st, const VertexSet& r);

class AbsorbError : public std::runtime_error {
 public:
  AbsorbError(std::string stage, const std::string& detail)
      : std::runtime_error(stage + ": " + detail), stage_(std::move(stage)) {}
  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

/// H-factor of G[A ∪ R]: cover R from the copy families, trim X to m vertices
/// with copies inside X, match the template on (X' ∪ Y_m, Z_m), and tile each
/// A_e with or without its matched S. Throws std::invalid_argument when R is
/// not admissible and AbsorbError if a step fails.
Tiling absorb(const Graph& g, const AbsorbingStructure& st, const VertexSet& r,
              std::uint64_t budget = kDefaultFactorBudget);

}  // namespace tilinglab
