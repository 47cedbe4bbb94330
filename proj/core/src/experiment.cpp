#include "tilinglab/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "tilinglab/edge_list.hpp"
#include "tilinglab/generators.hpp"
#include "tilinglab/rng.hpp"

namespace tilinglab {

namespace {

const std::map<std::string, std::vector<std::string>>& generator_params() {
  static const std::map<std::string, std::vector<std::string>> params{
      {"gnp", {"n", "p"}},
      {"complete", {"n"}},
      {"two-cliques", {"n"}},
      {"hs-tripartite", {"n"}},
      {"gamma", {"ell", "n"}},
      {"lower-bound", {"r", "ell", "n"}},
  };
  return params;
}

std::size_t as_count(double x, const std::string& name) {
  if (x < 0 || std::floor(x) != x) throw std::invalid_argument("parameter " + name + " must be a non-negative integer");
  return static_cast<std::size_t>(x);
}

// Shortest decimal that reads back as the same double.
std::string number(double x) {
  std::ostringstream os;
  os.precision(15);
  os << x;
  return os.str();
}

Pattern spec_pattern(const ExperimentSpec& spec) {
  return spec.pattern.empty() ? Pattern::clique(spec.r) : parse_pattern_spec(spec.pattern);
}

}  // namespace

std::size_t ExperimentSpec::cell_count() const {
  std::size_t count = 1;
  for (const auto& [name, values] : grid) count *= values.size();
  return count;
}

std::vector<std::pair<std::string, double>> ExperimentSpec::cell(std::size_t index) const {
  std::vector<std::pair<std::string, double>> out(grid.size());
  for (std::size_t i = grid.size(); i-- > 0;) {
    const auto& [name, values] = grid[i];
    out[i] = {name, values[index % values.size()]};
    index /= values.size();
  }
  return out;
}

void ExperimentSpec::validate() const {
  auto it = generator_params().find(generator);
  if (it == generator_params().end()) throw std::invalid_argument("unknown generator '" + generator + "'");
  for (const auto& name : it->second) {
    bool present = false;
    for (const auto& [key, values] : grid) {
      if (key == name) present = !values.empty();
    }
    if (!present) throw std::invalid_argument("generator " + generator + " needs grid values for '" + name + "'");
  }
  for (const auto& [key, values] : grid) {
    if (std::find(it->second.begin(), it->second.end(), key) == it->second.end()) {
      throw std::invalid_argument("generator " + generator + " has no parameter '" + key + "'");
    }
  }
  if (trials == 0) throw std::invalid_argument("trials must be positive");
  if (threads == 0) throw std::invalid_argument("threads must be positive");
}

ExperimentSpec experiment_from_json(const nlohmann::json& doc) {
  ExperimentSpec s;
  try {
    s.generator = doc.at("generator").get<std::string>();
    for (const auto& [key, values] : doc.at("grid").items()) {
      s.grid.emplace_back(key, values.get<std::vector<double>>());
    }
    s.pattern = doc.value("pattern", "");
    s.mode = doc.value("mode", "clique") == "general" ? PipelineMode::general : PipelineMode::clique;
    s.r = doc.value("r", s.r);
    s.ell = doc.value("ell", s.ell);
    s.epsilon = doc.value("epsilon", s.epsilon);
    s.epsilon_prime = doc.value("epsilon_prime", s.epsilon_prime);
    s.neighborhood_size = doc.value("neighborhood_size", s.neighborhood_size);
    s.trials = doc.value("trials", s.trials);
    s.seed_base = doc.value("seed", s.seed_base);
    s.budget = doc.value("budget", s.budget);
    s.fallback = doc.value("fallback", s.fallback);
    s.fallback_cap = doc.value("fallback_cap", s.fallback_cap);
    s.threads = doc.value("threads", s.threads);
    s.timing = doc.value("timing", s.timing);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed experiment spec: ") + e.what());
  }
  s.validate();
  return s;
}

nlohmann::json experiment_to_json(const ExperimentSpec& s) {
  nlohmann::json grid = nlohmann::json::object();
  for (const auto& [key, values] : s.grid) grid[key] = values;
  return {{"generator", s.generator}, {"grid", grid},         {"pattern", s.pattern},
          {"mode", to_string(s.mode)}, {"r", s.r},             {"ell", s.ell},
          {"epsilon", s.epsilon},      {"epsilon_prime", s.epsilon_prime},
          {"neighborhood_size", s.neighborhood_size},
          {"trials", s.trials},        {"seed", s.seed_base},  {"budget", s.budget},
          {"fallback", s.fallback},    {"fallback_cap", s.fallback_cap},
          {"threads", s.threads},      {"timing", s.timing}};
}

std::uint64_t trial_seed(const ExperimentSpec& spec, std::size_t cell, std::size_t trial) {
  return derive_seed(spec.seed_base, cell, trial);
}

Graph generate_cell_graph(const ExperimentSpec& spec, std::size_t cell, std::uint64_t seed) {
  std::map<std::string, double> p;
  for (const auto& [k, v] : spec.cell(cell)) p[k] = v;
  const std::uint64_t gseed = derive_seed(seed, stream_tag("graph"));
  const std::size_t n = as_count(p.at("n"), "n");
  if (spec.generator == "gnp") return gen_gnp(n, p.at("p"), gseed);
  if (spec.generator == "complete") return Graph::complete(n);
  if (spec.generator == "two-cliques") return gen_two_cliques(n);
  if (spec.generator == "hs-tripartite") {
    auto sizes = hs_tripartite_sizes(n);
    return gen_complete_multipartite(sizes);
  }
  if (spec.generator == "gamma") return gen_gamma(as_count(p.at("ell"), "ell"), n, gseed, false).graph;
  if (spec.generator == "lower-bound") {
    return gen_lower_bound_construction(as_count(p.at("r"), "r"), as_count(p.at("ell"), "ell"), n, gseed).graph;
  }
  throw std::invalid_argument("unknown generator '" + spec.generator + "'");
}

std::vector<SweepRow> run_sweep(const ExperimentSpec& spec) {
  spec.validate();
  const Pattern h = spec_pattern(spec);
  PipelineConfig config;
  config.mode = spec.mode;
  config.r = spec.r;
  config.ell = spec.ell;
  config.epsilon = spec.epsilon;
  config.epsilon_prime = spec.epsilon_prime;
  config.neighborhood_size = spec.neighborhood_size;
  config.budget = spec.budget;
  config.fallback = spec.fallback;
  config.fallback_cap = spec.fallback_cap;

  const std::size_t total = spec.cell_count() * spec.trials;
  std::vector<SweepRow> rows(total);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      try {
        SweepRow& row = rows[i];
        row.cell = i / spec.trials;
        row.trial = i % spec.trials;
        row.seed = trial_seed(spec, row.cell, row.trial);
        Graph g = generate_cell_graph(spec, row.cell, row.seed);
        row.report = find_factor_absorbing(g, h, config, derive_seed(row.seed, stream_tag("pipeline")));
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::min(spec.threads, std::max<std::size_t>(total, 1));
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
  }
  if (error) std::rethrow_exception(error);
  return rows;
}

std::string sweep_csv_header(const ExperimentSpec& spec) {
  std::string out = "schema,generator,cell";
  for (const auto& [name, values] : spec.grid) out += "," + name;
  out += ",trial,seed,pattern,mode,hypothesis_held,hypothesis_certified,absorbing_built,"
         "absorbing_size,cover_leftover,leftover_bound_met,absorbed,fallback_used,factor_found,"
         "route,failure_stage,nodes";
  if (spec.timing) out += ",millis";
  return out;
}

std::string sweep_csv_row(const ExperimentSpec& spec, const SweepRow& row) {
  const auto& r = row.report;
  auto b = [](bool x) { return x ? "1" : "0"; };
  std::ostringstream os;
  os << kSweepSchema << ',' << spec.generator << ',' << row.cell;
  for (const auto& [name, value] : spec.cell(row.cell)) os << ',' << number(value);
  os << ',' << row.trial << ',' << row.seed << ',' << r.pattern << ',' << to_string(r.mode) << ','
     << (r.hypotheses ? b(r.hypotheses->held()) : "") << ','
     << (r.hypotheses ? b(r.hypotheses->certified()) : "") << ',' << b(r.absorbing_built) << ','
     << r.absorbing_size << ',' << (r.cover_leftover ? std::to_string(*r.cover_leftover) : "") << ','
     << b(r.leftover_bound_met) << ',' << b(r.absorbed) << ',' << b(r.fallback_used) << ','
     << b(r.found()) << ',' << r.route << ',' << r.failure_stage.value_or("") << ',' << r.nodes;
  if (spec.timing) os << ',' << number(std::round(r.millis * 1000.0) / 1000.0);
  return os.str();
}

void write_sweep_csv(std::ostream& out, const ExperimentSpec& spec, const std::vector<SweepRow>& rows) {
  out << sweep_csv_header(spec) << '\n';
  for (const auto& row : rows) out << sweep_csv_row(spec, row) << '\n';
}

}  // namespace tilinglab
