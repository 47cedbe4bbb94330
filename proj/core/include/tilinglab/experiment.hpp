#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "tilinglab/pipeline.hpp"

namespace tilinglab {

inline constexpr const char* kSweepSchema = "tilinglab.sweep/1";

/// A grid of generator parameters, each cell run for `trials` seeds.
struct ExperimentSpec {
  /// gnp(n, p), complete(n), two-cliques(n), hs-tripartite(n), gamma(ell, n),
  /// lower-bound(r, ell, n).
  std::string generator = "gnp";
  /// Parameter name -> values; cells enumerate the product with the last
  /// parameter varying fastest. Read from JSON, the names come sorted.
  std::vector<std::pair<std::string, std::vector<double>>> grid;
  /// K_r by default; any pattern spec otherwise.
  std::string pattern;
  PipelineMode mode = PipelineMode::clique;
  std::size_t r = 3;
  std::size_t ell = 2;
  double epsilon = 0.1;
  double epsilon_prime = 0.1;
  /// General mode: bound on |N_w|; 0 keeps the pipeline default.
  std::size_t neighborhood_size = 0;
  std::size_t trials = 1;
  std::uint64_t seed_base = 0;
  std::uint64_t budget = kDefaultFactorBudget;
  bool fallback = true;
  std::size_t fallback_cap = 30;
  std::size_t threads = 1;
  /// Adds a wall-clock column; the CSV is then no longer reproducible.
  bool timing = false;

  std::size_t cell_count() const;
  /// Parameter values of cell `index`, in grid order.
  std::vector<std::pair<std::string, double>> cell(std::size_t index) const;
  void validate() const;
};

ExperimentSpec experiment_from_json(const nlohmann::json& doc);
nlohmann::json experiment_to_json(const ExperimentSpec& spec);

/// Trial seed = derive_seed(seed_base, cell, trial).
std::uint64_t trial_seed(const ExperimentSpec& spec, std::size_t cell, std::size_t trial);

/// Builds the host graph of one cell for a given trial seed.
Graph generate_cell_graph(const ExperimentSpec& spec, std::size_t cell, std::uint64_t seed);

struct SweepRow {
  std::size_t cell = 0;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  PipelineReport report;
};

/// Runs every (cell, trial) on a pool of spec.threads workers; rows come back
/// ordered by cell, then trial.
std::vector<SweepRow> run_sweep(const ExperimentSpec& spec);

std::string sweep_csv_header(const ExperimentSpec& spec);
std::string sweep_csv_row(const ExperimentSpec& spec, const SweepRow& row);
void write_sweep_csv(std::ostream& out, const ExperimentSpec& spec, const std::vector<SweepRow>& rows);

}  // namespace tilinglab
