#include "tilinglab/serialize.hpp"

#include <iomanip>
#include <sstream>

namespace tilinglab {

namespace {

void expect_schema(const Json& doc, const char* schema) {
  if (!doc.is_object() || !doc.contains("schema") || doc.at("schema") != schema) {
    throw SchemaError(std::string("expected a document with schema ") + schema);
  }
}

std::vector<VertexSet> sets_from(const Json& list) {
  if (!list.is_array()) throw SchemaError("expected a list of vertex lists");
  std::vector<VertexSet> out;
  for (const auto& item : list) out.push_back(item.get<VertexSet>());
  return out;
}

std::string fixed(double x, int digits = 6) {
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return os.str();
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

std::string schema_kind(const Json& doc) {
  if (!doc.is_object() || !doc.contains("schema") || !doc.at("schema").is_string()) return {};
  const auto tag = doc.at("schema").get<std::string>();
  const std::string prefix = "tilinglab.";
  if (!tag.starts_with(prefix)) return {};
  return tag.substr(prefix.size(), tag.find('/') - prefix.size());
}

Json pattern_to_json(const Pattern& h) {
  Json edges = Json::array();
  for (auto [u, v] : h.graph().edges()) edges.push_back({u, v});
  return {{"name", h.name()}, {"order", h.order()}, {"edges", edges}};
}

Pattern pattern_from_json(const Json& doc) {
  const auto order = doc.at("order").get<std::size_t>();
  std::vector<Edge> edges;
  for (const auto& e : doc.at("edges")) edges.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
  if (order < 2) throw SchemaError("pattern needs at least 2 vertices");
  return Pattern::from_graph(Graph::from_edges(order, edges));
}

Json params_to_json(const ParamReport& r) {
  Json doc{{"schema", kParamsSchema},
           {"n", r.n},
           {"edges", r.edges},
           {"min_degree", r.min_degree},
           {"max_degree", r.max_degree},
           {"max_clique", r.max_clique}};
  for (const auto& [ell, a] : r.alpha_ell) {
    const auto key = "alpha_" + std::to_string(ell);
    doc[key] = a.value;
    doc[key + "_exact"] = a.exact;
    doc[key + "_nodes"] = a.nodes;
    doc[key + "_witness"] = a.witness;
  }
  if (!r.pattern.empty()) doc["pattern"] = r.pattern;
  if (r.d_h) doc["d_h"] = r.d_h->str();
  if (r.alpha_star) {
    const auto& v = *r.alpha_star;
    doc["alpha_star_s"] = v.s;
    doc["alpha_star_mode"] = to_string(v.mode);
    doc["alpha_star_holds"] = v.holds;
    doc["alpha_star_families"] = v.families_examined;
    doc["alpha_star_witness"] = v.witness;
    if (!v.note.empty()) doc["alpha_star_note"] = v.note;
  }
  return doc;
}

Json tiling_to_json(const Tiling& tiling, const Pattern& h) {
  return {{"schema", kTilingSchema}, {"pattern", pattern_to_json(h)}, {"copies", tiling.copies}};
}

Tiling tiling_from_json(const Json& doc) {
  Tiling t;
  const Json& list = doc.is_array() ? doc : (expect_schema(doc, kTilingSchema), doc.at("copies"));
  for (const auto& copy : sets_from(list)) t.copies.push_back(copy);
  return t;
}

Json absorber_to_json(const AbsorberCertificate& c) {
  return {{"schema", kAbsorberSchema},
          {"pattern", pattern_to_json(c.pattern)},
          {"s", c.s},
          {"t", c.t},
          {"absorber", c.absorber}};
}

AbsorberCertificate absorber_from_json(const Json& doc) {
  expect_schema(doc, kAbsorberSchema);
  AbsorberCertificate c;
  c.pattern = pattern_from_json(doc.at("pattern"));
  c.s = doc.at("s").get<VertexSet>();
  c.t = doc.at("t").get<std::size_t>();
  c.absorber = doc.at("absorber").get<VertexSet>();
  return c;
}

Json structure_to_json(const AbsorbingStructure& st) {
  const auto& c = st.config;
  Json config{{"gamma", c.gamma},
              {"t", c.t},
              {"q", c.q},
              {"beta", c.beta},
              {"xi", c.xi},
              {"h", c.h},
              {"overrides", c.overrides},
              {"copies_per_vertex", c.copies_per_vertex},
              {"max_template_scale", c.max_template_scale},
              {"x_surplus", c.x_surplus},
              {"direct_copy_families", c.direct_copy_families},
              {"template_mode", to_string(c.template_mode)},
              {"x_attempts", c.x_attempts},
              {"template_attempts", c.template_attempts},
              {"partition_attempts", c.partition_attempts}};
  Json edges = Json::array();
  for (auto [l, r] : st.templ.edges) edges.push_back({l, r});
  Json templ{{"m", st.templ.m},
             {"beta", st.templ.beta},
             {"x_count", st.templ.x_count},
             {"mode", to_string(st.templ.mode)},
             {"seed", st.templ.seed},
             {"certificate", st.templ.certificate},
             {"edges", edges}};
  const auto& l = st.ledger;
  Json ledger{{"a_size", l.a_size},
              {"x_size", l.x_size},
              {"y_size", l.y_size},
              {"z_size", l.z_size},
              {"edge_absorber_total", l.edge_absorber_total},
              {"htm_124", l.htm_124},
              {"htnq_240", l.htnq_240},
              {"gamma_n_half", l.gamma_n_half},
              {"gamma_n", l.gamma_n},
              {"chain_holds", l.chain_holds},
              {"within_gamma_n", l.within_gamma_n}};
  return {{"schema", kStructureSchema},
          {"pattern", pattern_to_json(st.pattern)},
          {"constants", c.overrides ? "override" : "paper-defaults"},
          {"config", config},
          {"n", st.n},
          {"m", st.m},
          {"seed", st.seed},
          {"attempts", st.attempts},
          {"a", st.a},
          {"x", st.x},
          {"y", st.y},
          {"z", st.z},
          {"z_parts", st.z_parts},
          {"template", templ},
          {"phi1", st.phi1},
          {"phi2", st.phi2},
          {"edge_absorbers", st.edge_absorbers},
          {"copy_families", st.copy_families},
          {"harvested", st.harvested},
          {"max_remainder", st.max_remainder},
          {"ledger", ledger},
          {"notes", st.notes}};
}

AbsorbingStructure structure_from_json(const Json& doc) {
  expect_schema(doc, kStructureSchema);
  AbsorbingStructure st;
  try {
    st.pattern = pattern_from_json(doc.at("pattern"));
    const auto& c = doc.at("config");
    auto& cfg = st.config;
    cfg.gamma = c.at("gamma");
    cfg.t = c.at("t");
    cfg.q = c.at("q");
    cfg.beta = c.at("beta");
    cfg.xi = c.at("xi");
    cfg.h = c.at("h");
    cfg.overrides = c.at("overrides");
    cfg.copies_per_vertex = c.at("copies_per_vertex");
    cfg.max_template_scale = c.at("max_template_scale");
    cfg.x_surplus = c.value("x_surplus", std::size_t{0});
    cfg.direct_copy_families = c.at("direct_copy_families");
    cfg.template_mode = template_mode_from_string(c.at("template_mode"));
    cfg.x_attempts = c.at("x_attempts");
    cfg.template_attempts = c.at("template_attempts");
    cfg.partition_attempts = c.at("partition_attempts");
    st.n = doc.at("n");
    st.m = doc.at("m");
    st.seed = doc.at("seed");
    st.attempts = doc.at("attempts");
    st.a = doc.at("a").get<VertexSet>();
    st.x = doc.at("x").get<VertexSet>();
    st.y = doc.at("y").get<VertexSet>();
    st.z = doc.at("z").get<VertexSet>();
    st.z_parts = sets_from(doc.at("z_parts"));
    const auto& t = doc.at("template");
    st.templ.m = t.at("m");
    st.templ.beta = t.at("beta");
    st.templ.x_count = t.at("x_count");
    st.templ.mode = template_mode_from_string(t.at("mode"));
    st.templ.seed = t.at("seed");
    st.templ.certificate = t.at("certificate");
    for (const auto& e : t.at("edges")) st.templ.edges.emplace_back(e.at(0).get<std::uint32_t>(), e.at(1).get<std::uint32_t>());
    st.phi1 = doc.at("phi1").get<std::vector<Vertex>>();
    st.phi2 = doc.at("phi2").get<std::vector<std::uint32_t>>();
    st.edge_absorbers = sets_from(doc.at("edge_absorbers"));
    for (const auto& fam : doc.at("copy_families")) st.copy_families.push_back(sets_from(fam));
    st.harvested = doc.at("harvested").get<std::vector<std::size_t>>();
    st.max_remainder = doc.at("max_remainder");
    const auto& l = doc.at("ledger");
    st.ledger.a_size = l.at("a_size");
    st.ledger.x_size = l.at("x_size");
    st.ledger.y_size = l.at("y_size");
    st.ledger.z_size = l.at("z_size");
    st.ledger.edge_absorber_total = l.at("edge_absorber_total");
    st.ledger.htm_124 = l.at("htm_124");
    st.ledger.htnq_240 = l.at("htnq_240");
    st.ledger.gamma_n_half = l.at("gamma_n_half");
    st.ledger.gamma_n = l.at("gamma_n");
    st.ledger.chain_holds = l.at("chain_holds");
    st.ledger.within_gamma_n = l.at("within_gamma_n");
    st.notes = doc.at("notes").get<std::vector<std::string>>();
  } catch (const Json::exception& e) {
    throw SchemaError(std::string("malformed structure document: ") + e.what());
  }
  return st;
}

Json alpha_star_witness_to_json(const AlphaStarWitness& w) {
  return {{"schema", kAlphaStarWitnessSchema},
          {"pattern", pattern_to_json(w.pattern)},
          {"s", w.s},
          {"family", w.family}};
}

AlphaStarWitness alpha_star_witness_from_json(const Json& doc) {
  expect_schema(doc, kAlphaStarWitnessSchema);
  AlphaStarWitness w;
  w.pattern = pattern_from_json(doc.at("pattern"));
  w.s = doc.at("s");
  w.family = sets_from(doc.at("family"));
  return w;
}

Json hypotheses_to_json(const HypothesisReport& r) {
  Json doc{{"theorem", r.theorem},
           {"epsilon", r.epsilon},
           {"epsilon_prime", r.epsilon_prime},
           {"n", r.n},
           {"min_degree", r.min_degree},
           {"degree_threshold", r.degree_threshold},
           {"degree_held", r.degree_held},
           {"independence_threshold", r.independence_threshold},
           {"independence", to_string(r.independence)},
           {"held", r.held()},
           {"certified", r.certified()},
           {"notes", r.notes}};
  if (r.r) doc["r"] = *r.r;
  if (r.ell) doc["ell"] = *r.ell;
  if (r.alpha) {
    doc["alpha"] = r.alpha->value;
    doc["alpha_exact"] = r.alpha->exact;
  }
  if (r.alpha_star) {
    doc["alpha_star_s"] = r.alpha_star->s;
    doc["alpha_star_mode"] = to_string(r.alpha_star->mode);
    doc["alpha_star_holds"] = r.alpha_star->holds;
    doc["alpha_star_witness"] = r.alpha_star->witness;
  }
  return doc;
}

Json pipeline_to_json(const PipelineReport& r) {
  Json doc{{"schema", kPipelineSchema},
           {"pattern", r.pattern},
           {"mode", to_string(r.mode)},
           {"n", r.n},
           {"seed", r.seed},
           {"divisible", r.divisible},
           {"constants", r.constants},
           {"absorbing_built", r.absorbing_built},
           {"absorbing_failure", optional_json(r.absorbing_failure)},
           {"absorbing_size", r.absorbing_size},
           {"max_remainder", r.max_remainder},
           {"cover_leftover", optional_json(r.cover_leftover)},
           {"cover_bound", r.cover_bound},
           {"leftover_bound_met", r.leftover_bound_met},
           {"absorbed", r.absorbed},
           {"absorb_failure", optional_json(r.absorb_failure)},
           {"fallback_used", r.fallback_used},
           {"fallback_status", r.fallback_status ? Json(std::string(to_string(*r.fallback_status))) : Json(nullptr)},
           {"factor_found", r.found()},
           {"route", r.route},
           {"failure_stage", optional_json(r.failure_stage)},
           {"nodes", r.nodes},
           {"millis", r.millis},
           {"notes", r.notes}};
  doc["hypotheses"] = r.hypotheses ? hypotheses_to_json(*r.hypotheses) : Json(nullptr);
  doc["tiling"] = r.tiling ? Json(r.tiling->copies) : Json(nullptr);
  return doc;
}

std::string pipeline_csv_header() {
  return "pattern,mode,n,seed,hypothesis_held,hypothesis_certified,absorbing_built,absorbing_size,"
         "cover_leftover,cover_bound,leftover_bound_met,absorbed,fallback_used,factor_found,route,"
         "failure_stage,nodes,millis";
}

std::string pipeline_csv_row(const PipelineReport& r) {
  auto b = [](bool x) { return x ? "1" : "0"; };
  std::ostringstream os;
  os << r.pattern << ',' << to_string(r.mode) << ',' << r.n << ',' << r.seed << ','
     << (r.hypotheses ? b(r.hypotheses->held()) : "") << ','
     << (r.hypotheses ? b(r.hypotheses->certified()) : "") << ',' << b(r.absorbing_built) << ','
     << r.absorbing_size << ',' << (r.cover_leftover ? std::to_string(*r.cover_leftover) : "") << ','
     << r.cover_bound << ',' << b(r.leftover_bound_met) << ',' << b(r.absorbed) << ','
     << b(r.fallback_used) << ',' << b(r.found()) << ',' << r.route << ','
     << r.failure_stage.value_or("") << ',' << r.nodes << ',' << fixed(r.millis);
  return os.str();
}

}  // namespace tilinglab
