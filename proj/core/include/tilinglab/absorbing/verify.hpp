#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tilinglab/absorbing/structure.hpp"

namespace tilinglab {

struct StructureCheck {
  /// One line per violated invariant; empty when the structure is sound.
  std::vector<std::string> violations;
  std::size_t absorbers_checked = 0;
  std::size_t copy_sets_checked = 0;

  bool ok() const noexcept { return violations.empty(); }
  explicit operator bool() const noexcept { return ok(); }
};

/// Re-checks a structure from scratch without trusting any of its
/// bookkeeping: sizes, disjointness of X, Y, Z and the A_e, A as their union,
/// the index maps, the template's shape and robust-matching property, every
/// A_e as an (S, t)-absorber for its edge's S, and every stored copy set.
StructureCheck verify_structure(const Graph& g, const AbsorbingStructure& st,
                                std::uint64_t budget = kDefaultFactorBudget);

}  // namespace tilinglab
