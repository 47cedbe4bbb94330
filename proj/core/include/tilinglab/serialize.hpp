#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tilinglab/absorbing/structure.hpp"
#include "tilinglab/invariants.hpp"
#include "tilinglab/pipeline.hpp"
#include "tilinglab/tiling.hpp"

namespace tilinglab {

using Json = nlohmann::json;

// Every document carries "schema": "tilinglab.<kind>/<version>".
inline constexpr const char* kParamsSchema = "tilinglab.params/1";
inline constexpr const char* kTilingSchema = "tilinglab.tiling/1";
inline constexpr const char* kAbsorberSchema = "tilinglab.absorber/1";
inline constexpr const char* kStructureSchema = "tilinglab.structure/1";
inline constexpr const char* kAlphaStarWitnessSchema = "tilinglab.alpha-star-witness/1";
inline constexpr const char* kPipelineSchema = "tilinglab.pipeline/1";

class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "tilinglab.tiling/1" -> "tiling"; empty when the document has no schema tag.
std::string schema_kind(const Json& doc);

Json pattern_to_json(const Pattern& h);
Pattern pattern_from_json(const Json& doc);

/// Flat key/value document.
Json params_to_json(const ParamReport& report);

/// {"schema", "pattern", "copies": [[...], ...]}.
Json tiling_to_json(const Tiling& tiling, const Pattern& h);
/// Accepts the tagged document or a bare list of vertex lists.
Tiling tiling_from_json(const Json& doc);

struct AbsorberCertificate {
  Pattern pattern = Pattern::clique(2);
  VertexSet s;
  VertexSet absorber;
  std::size_t t = 0;
};

Json absorber_to_json(const AbsorberCertificate& cert);
AbsorberCertificate absorber_from_json(const Json& doc);

Json structure_to_json(const AbsorbingStructure& st);
AbsorbingStructure structure_from_json(const Json& doc);

struct AlphaStarWitness {
  Pattern pattern = Pattern::clique(2);
  std::size_t s = 0;
  std::vector<VertexSet> family;
};

Json alpha_star_witness_to_json(const AlphaStarWitness& w);
AlphaStarWitness alpha_star_witness_from_json(const Json& doc);

Json hypotheses_to_json(const HypothesisReport& rep);
Json pipeline_to_json(const PipelineReport& rep);

/// One summary row per pipeline run; the header is frozen for this schema.
std::string pipeline_csv_header();
std::string pipeline_csv_row(const PipelineReport& rep);

}  // namespace tilinglab
