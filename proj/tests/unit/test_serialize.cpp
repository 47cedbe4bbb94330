#include <gtest/gtest.h>

#include <algorithm>

#include "support/corpus.hpp"
#include "tilinglab/absorbing/verify.hpp"
#include "tilinglab/generators.hpp"
#include "tilinglab/serialize.hpp"

using namespace tilinglab;

namespace {

std::size_t columns(const std::string& line) { return static_cast<std::size_t>(std::count(line.begin(), line.end(), ',')) + 1; }

}  // namespace

TEST(Serialize, SchemaKind) {
  EXPECT_EQ(schema_kind(Json{{"schema", "tilinglab.tiling/1"}}), "tiling");
  EXPECT_EQ(schema_kind(Json{{"schema", "tilinglab.alpha-star-witness/1"}}), "alpha-star-witness");
  EXPECT_EQ(schema_kind(Json::object()), "");
  EXPECT_EQ(schema_kind(Json::array()), "");
}

TEST(Serialize, PatternRoundTrip) {
  for (const Pattern& h : {Pattern::clique(3), Pattern::from_graph(corpus::cycle(4)), Pattern::from_graph(corpus::path(5))}) {
    const Pattern back = pattern_from_json(pattern_to_json(h));
    EXPECT_EQ(back.graph(), h.graph());
    EXPECT_EQ(back.is_clique(), h.is_clique());
  }
  EXPECT_THROW(pattern_from_json(Json{{"order", 1}, {"edges", Json::array()}}), SchemaError);
}

TEST(Serialize, TilingRoundTrip) {
  Tiling t{{{0, 1, 2}, {5, 3, 4}}};
  Json doc = tiling_to_json(t, Pattern::clique(3));
  EXPECT_EQ(doc.at("schema"), kTilingSchema);
  EXPECT_EQ(tiling_from_json(doc), t);
  EXPECT_EQ(tiling_from_json(Json::parse(doc.dump())), t);
  EXPECT_EQ(tiling_from_json(Json::parse("[[0,1,2],[5,3,4]]")), t);
  EXPECT_THROW(tiling_from_json(Json{{"schema", kAbsorberSchema}}), SchemaError);
  EXPECT_THROW(tiling_from_json(Json{{"copies", Json::array()}}), SchemaError);
}

TEST(Serialize, AbsorberRoundTrip) {
  AbsorberCertificate cert{Pattern::clique(3), {0, 4, 8}, {1, 2, 3}, 1};
  auto back = absorber_from_json(Json::parse(absorber_to_json(cert).dump()));
  EXPECT_EQ(back.s, cert.s);
  EXPECT_EQ(back.absorber, cert.absorber);
  EXPECT_EQ(back.t, 1u);
  EXPECT_EQ(back.pattern.graph(), cert.pattern.graph());
  EXPECT_TRUE(is_st_absorber(Graph::complete(9), back.pattern, back.s, back.absorber, back.t));
}

TEST(Serialize, StructureRoundTripStillVerifies) {
  const Graph g = Graph::complete(60);
  CliqueBuilderOptions opts;
  opts.r = 2;
  opts.ell = 1;
  auto st = build_absorbing_set(g, Pattern::clique(2), desk_config(60, 2, 2), clique_builder(g, opts), 1);
  Json doc = structure_to_json(st);
  EXPECT_EQ(doc.at("schema"), kStructureSchema);
  auto back = structure_from_json(Json::parse(doc.dump()));
  EXPECT_EQ(back.a, st.a);
  EXPECT_EQ(back.x, st.x);
  EXPECT_EQ(back.y, st.y);
  EXPECT_EQ(back.z, st.z);
  EXPECT_EQ(back.z_parts, st.z_parts);
  EXPECT_EQ(back.templ.edges, st.templ.edges);
  EXPECT_EQ(back.templ.x_count, st.templ.x_count);
  EXPECT_EQ(back.phi1, st.phi1);
  EXPECT_EQ(back.phi2, st.phi2);
  EXPECT_EQ(back.edge_absorbers, st.edge_absorbers);
  EXPECT_EQ(back.copy_families, st.copy_families);
  EXPECT_EQ(back.max_remainder, st.max_remainder);
  EXPECT_EQ(back.config.x_surplus, st.config.x_surplus);
  EXPECT_EQ(back.notes, st.notes);
  EXPECT_TRUE(verify_structure(g, back).ok());
  EXPECT_EQ(structure_to_json(back), doc);

  Json broken = doc;
  broken.erase("x");
  EXPECT_THROW(structure_from_json(broken), SchemaError);
}

TEST(Serialize, AlphaStarWitnessRoundTrip) {
  AlphaStarWitness w{Pattern::clique(3), 2, {{0, 1}, {2, 3}, {4, 5}}};
  auto back = alpha_star_witness_from_json(Json::parse(alpha_star_witness_to_json(w).dump()));
  EXPECT_EQ(back.s, 2u);
  EXPECT_EQ(back.family, w.family);
  EXPECT_TRUE(verify_alpha_star_witness(gen_complete_multipartite(std::vector<std::size_t>{6, 6}), back.pattern,
                                        back.s, back.family));
}

TEST(Serialize, ParamsDocument) {
  ParamRequest req;
  req.ells = {2, 3};
  const Pattern k3 = Pattern::clique(3);
  req.pattern = &k3;
  auto doc = params_to_json(compute_params(corpus::cycle(5), req));
  EXPECT_EQ(doc.at("schema"), kParamsSchema);
  EXPECT_EQ(doc.at("alpha_2"), 2);
  EXPECT_EQ(doc.at("alpha_3"), 5);
  EXPECT_EQ(doc.at("alpha_2_exact"), true);
  EXPECT_EQ(doc.at("d_h"), "3/2");
  EXPECT_EQ(doc.at("max_clique"), 2);
}

TEST(Serialize, PipelineDocumentAndCsvRow) {
  PipelineConfig config;
  auto rep = find_factor_absorbing(Graph::complete(12), Pattern::clique(3), config, 4);
  Json doc = pipeline_to_json(rep);
  EXPECT_EQ(doc.at("schema"), kPipelineSchema);
  EXPECT_EQ(doc.at("route"), rep.route);
  ASSERT_TRUE(rep.tiling);
  EXPECT_EQ(tiling_from_json(doc.at("tiling")), *rep.tiling);
  const std::string header = pipeline_csv_header();
  const std::string row = pipeline_csv_row(rep);
  EXPECT_EQ(columns(row), columns(header));
  EXPECT_EQ(row.find('\n'), std::string::npos);
}
