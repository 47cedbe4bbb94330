#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "tilinglab/absorbing/absorbers.hpp"
#include "tilinglab/absorbing/structure.hpp"
#include "tilinglab/absorbing/verify.hpp"
#include "tilinglab/edge_list.hpp"
#include "tilinglab/exact_factor.hpp"
#include "tilinglab/experiment.hpp"
#include "tilinglab/generators.hpp"
#include "tilinglab/hypotheses.hpp"
#include "tilinglab/invariants.hpp"
#include "tilinglab/pipeline.hpp"
#include "tilinglab/rng.hpp"
#include "tilinglab/serialize.hpp"

namespace tilinglab::cli {

namespace {

// Bad flag combinations found after parsing; exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Anything that makes the run itself fail; exit code 1.
class RunFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::uint64_t seed = 0;
  std::string out;
  std::string format;
  std::uint64_t budget = kDefaultFactorBudget;
  std::size_t threads = 1;
};

void add_common(CLI::App* sub, Common& c, std::vector<std::string> formats) {
  c.format = formats.front();
  sub->add_option("--seed", c.seed, "Root seed")->envname("TILINGLAB_SEED");
  sub->add_option("--out", c.out, "Write the main artifact here instead of stdout");
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember(formats));
  sub->add_option("--budget-nodes", c.budget, "Search-node budget for exact solvers");
  sub->add_option("--threads", c.threads, "Worker threads")->check(CLI::PositiveNumber);
}

void emit(const Common& c, const std::string& text, std::ostream& out) {
  if (c.out.empty() || c.out == "-") {
    out << text;
    return;
  }
  std::ofstream file(c.out, std::ios::binary);
  if (!file) throw RunFailure("cannot write " + c.out);
  file << text;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw RunFailure(path + ": not a JSON document (" + e.what() + ")");
  }
}

Graph load_graph(const std::string& path) {
  if (!std::ifstream(path)) throw UsageError("cannot read graph " + path);
  return read_graph_file(path);
}

// ---- gen ------------------------------------------------------------------

struct GenArgs {
  Common common;
  std::string construction;
  std::size_t n = 0;
  double p = 0.5;
  std::vector<std::size_t> sizes;
  std::size_t ell = 2;
  std::size_t r = 0;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  const auto& c = a.common;
  Graph g;
  Json extra = Json::object();
  if (a.construction == "gnp") {
    g = gen_gnp(a.n, a.p, c.seed);
  } else if (a.construction == "complete") {
    g = Graph::complete(a.n);
  } else if (a.construction == "multipartite") {
    if (a.sizes.empty()) throw UsageError("multipartite needs --sizes");
    g = gen_complete_multipartite(a.sizes);
  } else if (a.construction == "hs-tripartite") {
    auto sizes = hs_tripartite_sizes(a.n);
    g = gen_complete_multipartite(sizes);
    extra["parts"] = sizes;
  } else if (a.construction == "two-cliques") {
    g = gen_two_cliques(a.n);
  } else if (a.construction == "gamma") {
    auto gamma = gen_gamma(a.ell, a.n, c.seed, true, c.budget);
    g = std::move(gamma.graph);
    extra["removed_edges"] = gamma.removed_edges;
    extra["max_degree"] = gamma.max_degree;
    if (gamma.alpha) {
      extra["alpha_" + std::to_string(a.ell)] = gamma.alpha->value;
      extra["alpha_exact"] = gamma.alpha->exact;
    }
  } else if (a.construction == "lower-bound") {
    auto lb = gen_lower_bound_construction(a.r, a.ell, a.n, c.seed);
    g = std::move(lb.graph);
    extra["parts"] = lb.parts;
    extra["x"] = lb.x;
    extra["y"] = lb.y;
  }
  if (c.format == "json") {
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    Json doc{{"schema", "tilinglab.graph/1"},
             {"construction", a.construction},
             {"seed", c.seed},
             {"n", g.order()},
             {"edges", edges}};
    if (!extra.empty()) doc["details"] = extra;
    emit(c, dump(doc), out);
  } else {
    emit(c, emit_graph(g), out);
  }
  return kOk;
}

// ---- params ---------------------------------------------------------------

struct ParamsArgs {
  Common common;
  std::string graph;
  std::vector<std::size_t> ells{2};
  std::string pattern;
  std::optional<std::size_t> alpha_star_s;
  std::string alpha_star_mode = "exhaustive";
  std::size_t trials = 500;
  std::string witness_out;
};

int cmd_params(const ParamsArgs& a, std::ostream& out) {
  const Graph g = load_graph(a.graph);
  std::optional<Pattern> h;
  if (!a.pattern.empty()) h = parse_pattern_spec(a.pattern);
  if (a.alpha_star_s && !h) throw UsageError("--alpha-star-s needs --pattern");
  ParamRequest req;
  req.ells = a.ells;
  req.alpha_budget = a.common.budget;
  req.pattern = h ? &*h : nullptr;
  req.alpha_star_s = a.alpha_star_s;
  req.alpha_star.mode = a.alpha_star_mode == "sampled" ? AlphaStarMode::sampled : AlphaStarMode::exhaustive;
  req.alpha_star.trials = a.trials;
  req.alpha_star.seed = a.common.seed;
  ParamReport rep;
  try {
    rep = compute_params(g, req);
  } catch (const FamilyCapExceeded& e) {
    throw UsageError(std::string(e.what()) + "; use --alpha-star-mode sampled");
  }
  emit(a.common, dump(params_to_json(rep)), out);
  if (!a.witness_out.empty() && rep.alpha_star && !rep.alpha_star->holds) {
    std::ofstream file(a.witness_out, std::ios::binary);
    file << dump(alpha_star_witness_to_json({*h, rep.alpha_star->s, rep.alpha_star->witness}));
  }
  return kOk;
}

// ---- factor ---------------------------------------------------------------

struct SolverArgs {
  std::string pattern = "K3";
  std::string mode;
  std::size_t ell = 2;
  double epsilon = 0.1;
  double epsilon_prime = 0.1;
  std::size_t neighborhood_size = 0;
};

PipelineMode pick_mode(const SolverArgs& s, const Pattern& h) {
  if (s.mode.empty()) return h.is_clique() ? PipelineMode::clique : PipelineMode::general;
  if (s.mode == "clique" && !h.is_clique()) throw UsageError("--mode clique needs a clique pattern");
  return s.mode == "clique" ? PipelineMode::clique : PipelineMode::general;
}

void add_solver_options(CLI::App* sub, SolverArgs& s) {
  sub->add_option("--pattern", s.pattern, "Pattern H: K<r>, C<k>, P<k> or an edge-list file");
  sub->add_option("--mode", s.mode, "Absorber construction (default: clique for K_r)")
      ->check(CLI::IsMember({"clique", "general"}));
  sub->add_option("--ell", s.ell, "Clique mode: the ell of alpha_ell");
  sub->add_option("--epsilon", s.epsilon, "Minimum-degree slack");
  sub->add_option("--epsilon-prime", s.epsilon_prime, "Independence-type bound as a fraction of n");
  sub->add_option("--neighborhood-size", s.neighborhood_size,
                  "General mode: bound on |N_w| (default 5h at desk scale)");
}

struct FactorArgs {
  Common common;
  SolverArgs solver;
  std::string graph;
  std::string method = "pipeline";
  std::size_t fallback_cap = 30;
  bool no_fallback = false;
  std::string tiling_out;
};

int cmd_factor(const FactorArgs& a, std::ostream& out) {
  const auto& c = a.common;
  const Graph g = load_graph(a.graph);
  const Pattern h = parse_pattern_spec(a.solver.pattern);
  std::optional<Tiling> tiling;
  if (a.method == "exact") {
    auto res = find_factor_exact(g, h, c.budget);
    if (res.tiling) {
      if (auto check = verify_factor(g, h, *res.tiling); !check) {
        throw std::logic_error("exact solver emitted an invalid factor: " + check.violation);
      }
    }
    Json doc{{"schema", "tilinglab.factor/1"},
             {"pattern", pattern_to_json(h)},
             {"n", g.order()},
             {"status", std::string(to_string(res.status))},
             {"nodes", res.nodes},
             {"copies", res.tiling ? Json(res.tiling->copies) : Json(nullptr)}};
    if (c.format == "csv") {
      emit(c, "pattern,n,status,nodes\n" + h.name() + "," + std::to_string(g.order()) + "," +
                  std::string(to_string(res.status)) + "," + std::to_string(res.nodes) + "\n",
           out);
    } else {
      emit(c, dump(doc), out);
    }
    tiling = res.tiling;
  } else {
    const PipelineMode mode = pick_mode(a.solver, h);
    PipelineConfig config;
    config.mode = mode;
    config.r = h.order();
    config.ell = a.solver.ell;
    config.epsilon = a.solver.epsilon;
    config.epsilon_prime = a.solver.epsilon_prime;
    config.neighborhood_size = a.solver.neighborhood_size;
    config.fallback = !a.no_fallback;
    config.fallback_cap = a.fallback_cap;
    config.budget = c.budget;
    auto rep = find_factor_absorbing(g, h, config, c.seed);
    if (c.format == "csv") {
      emit(c, pipeline_csv_header() + "\n" + pipeline_csv_row(rep) + "\n", out);
    } else {
      auto doc = pipeline_to_json(rep);
      doc["pattern_graph"] = pattern_to_json(h);
      emit(c, dump(doc), out);
    }
    tiling = rep.tiling;
  }
  if (tiling && !a.tiling_out.empty()) {
    std::ofstream file(a.tiling_out, std::ios::binary);
    if (!file) throw RunFailure("cannot write " + a.tiling_out);
    file << dump(tiling_to_json(*tiling, h));
  }
  return tiling ? kOk : kFailure;
}

// ---- absorb ---------------------------------------------------------------

struct AbsorbArgs {
  Common common;
  SolverArgs solver;
  std::string graph;
  std::size_t trials = 10;
  bool paper_defaults = false;
  double gamma = 0.2;
  std::string report_out;
};

int cmd_absorb(const AbsorbArgs& a, std::ostream& out, std::ostream& err) {
  const auto& c = a.common;
  const Graph g = load_graph(a.graph);
  const Pattern h = parse_pattern_spec(a.solver.pattern);
  const std::size_t k = h.order();
  const PipelineMode mode = pick_mode(a.solver, h);
  const AbsorberConfig config =
      a.paper_defaults ? AbsorberConfig::paper_defaults(a.gamma, k, k) : desk_config(g.order(), k, k);

  AbsorberFamilyBuilder builder;
  if (mode == PipelineMode::clique) {
    CliqueBuilderOptions o;
    o.r = k;
    o.ell = a.solver.ell;
    o.epsilon = a.solver.epsilon;
    o.epsilon_prime = a.solver.epsilon_prime;
    o.partition_attempts = config.partition_attempts;
    builder = clique_builder(g, o);
  } else {
    GeneralBuilderOptions o;
    o.epsilon = a.solver.epsilon;
    o.epsilon_prime = a.solver.epsilon_prime;
    o.neighborhood_size = a.solver.neighborhood_size || a.paper_defaults ? a.solver.neighborhood_size : 5 * k;
    builder = general_builder(g, h, o);
  }

  Json report{{"schema", "tilinglab.absorb-run/1"},
              {"pattern", h.name()},
              {"mode", to_string(mode)},
              {"seed", c.seed},
              {"constants", config.overrides ? "override" : "paper-defaults"}};
  AbsorbingStructure st;
  try {
    st = build_absorbing_set(g, h, config, builder, c.seed);
  } catch (const StageFailure& e) {
    report["built"] = false;
    report["stage"] = e.stage();
    report["detail"] = e.what();
    report["blocking"] = e.blocking();
    err << "absorbing set: " << e.what() << "\n";
    if (!a.report_out.empty()) std::ofstream(a.report_out, std::ios::binary) << dump(report);
    return kFailure;
  }
  emit(c, dump(structure_to_json(st)), out);

  // Trials: random admissible remainders of every feasible size.
  std::vector<std::size_t> sizes;
  for (std::size_t s = 0; s <= st.max_remainder; ++s) {
    if ((st.a.size() + s) % k == 0) sizes.push_back(s);
  }
  const Bitset in_a = to_bitset(st.a, g.order());
  VertexSet outside;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!in_a.test(v)) outside.push_back(v);
  }
  std::size_t passed = 0;
  Json failures = Json::array();
  for (std::size_t i = 0; i < a.trials && !sizes.empty(); ++i) {
    Rng rng(derive_seed(c.seed, stream_tag("absorb-trial"), i));
    const std::size_t size = std::min(sizes[rng.below(sizes.size())], outside.size());
    VertexSet pool = outside;
    rng.shuffle(pool);
    VertexSet r(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
    std::sort(r.begin(), r.end());
    try {
      Tiling t = absorb(g, st, r, c.budget);
      VertexSet target = st.a;
      target.insert(target.end(), r.begin(), r.end());
      std::sort(target.begin(), target.end());
      if (auto check = verify_tiling(g, h, t, target)) {
        ++passed;
      } else {
        failures.push_back({{"trial", i}, {"r", r}, {"violation", check.violation}});
      }
    } catch (const std::exception& e) {
      failures.push_back({{"trial", i}, {"r", r}, {"error", e.what()}});
    }
  }
  report["built"] = true;
  report["a_size"] = st.a.size();
  report["m"] = st.m;
  report["max_remainder"] = st.max_remainder;
  report["trials"] = a.trials;
  report["remainder_sizes"] = sizes;
  report["passed"] = passed;
  report["failures"] = failures;
  if (!a.report_out.empty()) {
    std::ofstream(a.report_out, std::ios::binary) << dump(report);
  } else {
    err << "absorption trials: " << passed << "/" << a.trials << " verified\n";
  }
  if (sizes.empty()) {
    err << "no admissible remainder size for this structure\n";
    return kFailure;
  }
  return passed == a.trials ? kOk : kFailure;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  Common common;
  std::string graph;
  std::string certificate;
  std::string pattern;
  bool factor = false;
  bool confirm_none = false;
};

int report_check(std::ostream& out, const std::string& kind, const std::vector<std::string>& violations) {
  if (violations.empty()) {
    out << "valid " << kind << "\n";
    return kOk;
  }
  for (const auto& v : violations) out << "invalid " << kind << ": " << v << "\n";
  return kFailure;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const Graph g = load_graph(a.graph);
  const Json doc = read_json_file(a.certificate);
  const std::string kind = doc.is_array() ? "tiling" : schema_kind(doc);
  auto pattern_of = [&]() -> Pattern {
    if (!a.pattern.empty()) return parse_pattern_spec(a.pattern);
    if (doc.is_object() && doc.contains("pattern_graph")) return pattern_from_json(doc.at("pattern_graph"));
    if (doc.is_object() && doc.contains("pattern") && doc.at("pattern").is_object()) {
      return pattern_from_json(doc.at("pattern"));
    }
    throw UsageError("the certificate does not name its pattern; pass --pattern");
  };
  auto check_factor_claim = [&](const Pattern& h, const Json& copies, const std::string& what) {
    if (copies.is_null()) {
      if (!a.confirm_none) {
        out << what << " claims no factor; nothing to verify (use --confirm-none to re-solve)\n";
        return static_cast<int>(kOk);
      }
      auto res = find_factor_exact(g, h, a.common.budget);
      if (res.status == FactorStatus::none) return report_check(out, what, {});
      return report_check(out, what, {res.status == FactorStatus::found
                                          ? "a factor exists, the report claims none"
                                          : "exact solver ran out of budget; claim not confirmed"});
    }
    Tiling t = tiling_from_json(copies);
    auto check = verify_factor(g, h, t);
    return report_check(out, what, check ? std::vector<std::string>{} : std::vector{check.violation});
  };

  if (kind == "tiling") {
    const Pattern h = pattern_of();
    const Tiling t = tiling_from_json(doc);
    auto check = a.factor ? verify_factor(g, h, t) : verify_tiling(g, h, t);
    return report_check(out, a.factor ? "factor" : "tiling",
                        check ? std::vector<std::string>{} : std::vector{check.violation});
  }
  if (kind == "factor") return check_factor_claim(pattern_of(), doc.at("copies"), "factor report");
  if (kind == "pipeline") return check_factor_claim(pattern_of(), doc.at("tiling"), "pipeline report");
  if (kind == "absorber") {
    const auto cert = absorber_from_json(doc);
    std::vector<std::string> bad;
    try {
      if (!is_st_absorber(g, cert.pattern, cert.s, cert.absorber, cert.t, a.common.budget)) {
        bad.push_back("G[A_S] or G[A_S + S] has no H-factor");
      }
    } catch (const std::invalid_argument& e) {
      bad.push_back(e.what());
    }
    return report_check(out, "absorber", bad);
  }
  if (kind == "structure") {
    const auto st = structure_from_json(doc);
    return report_check(out, "structure", verify_structure(g, st, a.common.budget).violations);
  }
  if (kind == "alpha-star-witness") {
    const auto w = alpha_star_witness_from_json(doc);
    std::vector<std::string> bad;
    if (!verify_alpha_star_witness(g, w.pattern, w.s, w.family)) {
      bad.push_back("family is not h disjoint sets of size >= s without a traversing copy");
    }
    return report_check(out, "alpha-star witness", bad);
  }
  throw RunFailure("unrecognised certificate (schema '" + kind + "')");
}

// ---- sweep ----------------------------------------------------------------

struct SweepArgs {
  Common common;
  SolverArgs solver;
  std::string spec;
  std::string generator = "gnp";
  std::vector<std::string> grid;
  std::size_t r = 3;
  std::size_t trials = 1;
  std::size_t fallback_cap = 30;
  bool timing = false;
};

ExperimentSpec sweep_spec(const SweepArgs& a, const CLI::App& sub) {
  ExperimentSpec s;
  if (!a.spec.empty()) {
    s = experiment_from_json(read_json_file(a.spec));
    // Flags given explicitly override the file.
    if (sub.count("--seed") || std::getenv("TILINGLAB_SEED")) s.seed_base = a.common.seed;
    if (sub.count("--threads")) s.threads = a.common.threads;
    if (sub.count("--budget-nodes")) s.budget = a.common.budget;
    if (sub.count("--timing")) s.timing = a.timing;
    return s;
  }
  s.generator = a.generator;
  for (const auto& item : a.grid) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--grid expects name=v1,v2,...: " + item);
    std::vector<double> values;
    std::stringstream list(item.substr(eq + 1));
    for (std::string v; std::getline(list, v, ',');) {
      try {
        std::size_t used = 0;
        values.push_back(std::stod(v, &used));
        if (used != v.size()) throw std::invalid_argument(v);
      } catch (const std::exception&) {
        throw UsageError("--grid value '" + v + "' is not a number");
      }
    }
    s.grid.emplace_back(item.substr(0, eq), values);
  }
  s.r = a.r;
  if (sub.count("--pattern")) {
    s.pattern = a.solver.pattern;
    s.r = parse_pattern_spec(s.pattern).order();
  }
  s.mode = a.solver.mode == "general" ? PipelineMode::general : PipelineMode::clique;
  s.ell = a.solver.ell;
  s.epsilon = a.solver.epsilon;
  s.epsilon_prime = a.solver.epsilon_prime;
  s.neighborhood_size = a.solver.neighborhood_size;
  s.trials = a.trials;
  s.seed_base = a.common.seed;
  s.budget = a.common.budget;
  s.fallback_cap = a.fallback_cap;
  s.threads = a.common.threads;
  s.timing = a.timing;
  return s;
}

int cmd_sweep(const SweepArgs& a, const CLI::App& sub, std::ostream& out) {
  ExperimentSpec spec = sweep_spec(a, sub);
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  auto rows = run_sweep(spec);
  std::ostringstream csv;
  write_sweep_csv(csv, spec, rows);
  emit(a.common, csv.str(), out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph tiling laboratory: generators, invariants, exact and absorbing factor search"};
  app.name("tilinglab");
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph as an edge list");
  add_common(gen_cmd, gen.common, {"edgelist", "json"});
  gen_cmd->add_option("--construction,--generator", gen.construction, "Which graph")
      ->required()
      ->check(CLI::IsMember(
          {"gnp", "complete", "multipartite", "hs-tripartite", "two-cliques", "gamma", "lower-bound"}));
  gen_cmd->add_option("--n", gen.n, "Number of vertices");
  gen_cmd->add_option("--p", gen.p, "Edge probability")->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--sizes", gen.sizes, "Part sizes")->delimiter(',');
  gen_cmd->add_option("--ell", gen.ell, "ell for gamma and lower-bound");
  gen_cmd->add_option("--r", gen.r, "r for lower-bound");

  ParamsArgs params;
  auto* params_cmd = app.add_subcommand("params", "Compute graph parameters as JSON");
  add_common(params_cmd, params.common, {"json"});
  params.common.budget = kDefaultAlphaBudget;
  params_cmd->add_option("--graph", params.graph, "Edge-list file")->required();
  params_cmd->add_option("--ell", params.ells, "Values of ell for alpha_ell")->delimiter(',');
  params_cmd->add_option("--pattern", params.pattern, "Pattern H for d(H) and alpha*");
  params_cmd->add_option("--alpha-star-s", params.alpha_star_s, "Probe alpha*_H at this s");
  params_cmd->add_option("--alpha-star-mode", params.alpha_star_mode, "exhaustive or sampled")
      ->check(CLI::IsMember({"exhaustive", "sampled"}));
  params_cmd->add_option("--trials", params.trials, "Sampled families");
  params_cmd->add_option("--witness-out", params.witness_out, "Write a failing family here");

  FactorArgs factor;
  auto* factor_cmd = app.add_subcommand("factor", "Search for an H-factor");
  add_common(factor_cmd, factor.common, {"json", "csv"});
  factor_cmd->add_option("--graph", factor.graph, "Edge-list file")->required();
  add_solver_options(factor_cmd, factor.solver);
  factor_cmd->add_option("--solver", factor.method, "exact or pipeline")
      ->check(CLI::IsMember({"exact", "pipeline"}));
  factor_cmd->add_option("--fallback-cap", factor.fallback_cap, "Largest n for the exact fallback");
  factor_cmd->add_flag("--no-fallback", factor.no_fallback, "Never run the exact fallback");
  factor_cmd->add_option("--tiling-out", factor.tiling_out, "Write the factor as a tiling certificate");

  AbsorbArgs absorb_args;
  auto* absorb_cmd = app.add_subcommand("absorb", "Build an absorbing structure and test absorption");
  add_common(absorb_cmd, absorb_args.common, {"json"});
  absorb_cmd->add_option("--graph", absorb_args.graph, "Edge-list file")->required();
  add_solver_options(absorb_cmd, absorb_args.solver);
  absorb_cmd->add_option("--trials", absorb_args.trials, "Random remainders to absorb");
  absorb_cmd->add_flag("--paper-defaults", absorb_args.paper_defaults, "Use the unscaled constants");
  absorb_cmd->add_option("--gamma", absorb_args.gamma, "gamma for --paper-defaults");
  absorb_cmd->add_option("--report-out", absorb_args.report_out, "Write the trial report here");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a certificate against a graph");
  add_common(verify_cmd, verify.common, {"json"});
  verify_cmd->add_option("--graph", verify.graph, "Edge-list file")->required();
  verify_cmd->add_option("certificate,--certificate", verify.certificate, "JSON certificate")->required();
  verify_cmd->add_option("--pattern", verify.pattern, "Pattern for bare tiling lists");
  verify_cmd->add_flag("--factor", verify.factor, "A tiling must cover every vertex");
  verify_cmd->add_flag("--confirm-none", verify.confirm_none, "Re-solve reports that claim no factor");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run a seeded experiment grid and write CSV");
  add_common(sweep_cmd, sweep.common, {"csv"});
  add_solver_options(sweep_cmd, sweep.solver);
  sweep_cmd->add_option("--spec", sweep.spec, "Experiment spec (JSON)");
  sweep_cmd->add_option("--generator", sweep.generator, "Graph generator");
  sweep_cmd->add_option("--grid", sweep.grid, "name=v1,v2,... (repeatable)");
  sweep_cmd->add_option("--r", sweep.r, "Clique size when no pattern is given");
  sweep_cmd->add_option("--trials", sweep.trials, "Trials per cell");
  sweep_cmd->add_option("--fallback-cap", sweep.fallback_cap, "Largest n for the exact fallback");
  sweep_cmd->add_flag("--timing", sweep.timing, "Add a millis column (breaks byte-identity)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*params_cmd) return cmd_params(params, out);
    if (*factor_cmd) return cmd_factor(factor, out);
    if (*absorb_cmd) return cmd_absorb(absorb_args, out, err);
    if (*verify_cmd) return cmd_verify(verify, out);
    if (*sweep_cmd) return cmd_sweep(sweep, *sweep_cmd, out);
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return kFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

}  // namespace tilinglab::cli
