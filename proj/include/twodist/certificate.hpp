#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "twodist/exactla.hpp"
#include "twodist/graph.hpp"
#include "twodist/maximality.hpp"

namespace twodist {

// Machine-readable record of every verified claim; the pipeline's final
// product. Sections appear only for stages that were requested.
struct CodeStageResult {
    long cardinality = 0;
    long dual_cardinality = 0;
    int min_distance = 0;
    std::map<int, long> dual_weight_enumerator;
};

struct GraphStageResult {
    int vertices_x = 0, vertices_y = 0;
    long edges = 0;
    QuotientMatrix quotient;
    long quad_trace = 0, quad_det = 0, quad_disc = 0;  // quotient characteristic polynomial
};

struct SpectrumStageResult {
    SpectrumCertificate gamma;
    SpectrumCertificate seidel;
};

struct EmbedStageResult {
    int rank = 0;
    bool gram_reproduced = false;
    bool norms_all_3 = false;
    bool distances_in_4_6 = false;
};

struct ConstructStageResult {
    long root_norm2_pairs = 0;
    bool root_inner_all_one = false;
    bool root_closed_formula = false;
    int u_norm2 = 0;
    int u_root_inner = 0;
    bool u_part_independent = false;
    bool hyperplane_all_277 = false;
    long distance_count4 = 0;
    long distance_count6 = 0;
    int lemma_part_pairs = 0;
};

struct MaximalityStageResult {
    int rank_m = 0;
    std::string m_minimum;     // exact rational, as text
    std::string dual_minimum;  // "5/2"
    std::vector<long> expected_coords;
    std::string expected_norm2;  // "9/2"
    bool expected_in_dual = false;
    bool expected_adm6 = false;
    bool expected_adm4 = false;
    bool skip_long = true;
    std::optional<EnumerationCertificate> enumeration;
    bool extension_identity_all_277 = false;
};

struct ExtensionCertificate {
    int schema_version = 1;
    int workers = 1;
    std::optional<CodeStageResult> code;
    std::optional<GraphStageResult> graph;
    std::optional<SpectrumStageResult> spectrum;
    std::optional<EmbedStageResult> embed;
    std::optional<ConstructStageResult> construct;
    std::optional<MaximalityStageResult> maximality;

    nlohmann::json to_json() const;
    std::string to_text() const;  // pretty JSON, deterministic key order
};

// Strips volatile timing fields (wall_clock_seconds) for idempotence
// comparisons.
nlohmann::json strip_timing(nlohmann::json j);

}  // namespace twodist
