#include "twodist/certificate.hpp"

namespace twodist {

using nlohmann::json;

namespace {

json spectrum_json(const SpectrumCertificate& c) {
    json j;
    j["matrix"] = c.matrix_name;
    j["dimension"] = c.dimension;
    j["annihilator"] = c.annihilator;
    json eigs = json::array();
    for (const auto& [value, mult] : c.integer_eigenvalues) eigs.push_back({{"value", value}, {"multiplicity", mult}});
    if (c.has_quadratic_pair) {
        eigs.push_back({{"value", "81+sqrt(6165)"}, {"multiplicity", c.quad_multiplicity_each}});
        eigs.push_back({{"value", "81-sqrt(6165)"}, {"multiplicity", c.quad_multiplicity_each}});
        j["quadratic_pair"] = {{"trace", c.quad_trace}, {"det", c.quad_det}, {"discriminant", c.quad_disc}};
    }
    j["eigenvalues"] = eigs;
    json ranks;
    for (const auto& [label, value] : c.ranks) ranks[label] = value;
    j["ranks"] = ranks;
    return j;
}

}  // namespace

json ExtensionCertificate::to_json() const {
    json j;
    j["schema_version"] = schema_version;
    j["workers"] = workers;
    json stages;

    if (code) {
        json s;
        s["cardinality"] = code->cardinality;
        s["dual_cardinality"] = code->dual_cardinality;
        s["min_distance"] = code->min_distance;
        json we;
        for (const auto& [w, cnt] : code->dual_weight_enumerator) we[std::to_string(w)] = cnt;
        s["dual_weight_enumerator"] = we;
        s["dual_weight_6"] = code->dual_weight_enumerator.count(6) ? code->dual_weight_enumerator.at(6) : 0;
        stages["code"] = s;
    }
    if (graph) {
        json s;
        s["vertices_x"] = graph->vertices_x;
        s["vertices_y"] = graph->vertices_y;
        s["edges"] = graph->edges;
        s["quotient"] = {{graph->quotient.xx, graph->quotient.xy}, {graph->quotient.yx, graph->quotient.yy}};
        s["equitable"] = true;
        s["quotient_charpoly"] = {{"trace", graph->quad_trace}, {"det", graph->quad_det}, {"discriminant", graph->quad_disc}};
        stages["graph"] = s;
    }
    if (spectrum) {
        stages["spectrum"] = {{"gamma", spectrum_json(spectrum->gamma)}, {"seidel", spectrum_json(spectrum->seidel)}};
    }
    if (embed) {
        json s;
        s["rank"] = embed->rank;
        s["gram_reproduced"] = embed->gram_reproduced;
        s["norms_all_3"] = embed->norms_all_3;
        s["squared_distances_in_4_6"] = embed->distances_in_4_6;
        stages["embed"] = s;
    }
    if (construct) {
        json s;
        s["root"] = {{"norm2_pairs", construct->root_norm2_pairs},
                     {"inner_products_all_one", construct->root_inner_all_one},
                     {"closed_formula_holds", construct->root_closed_formula}};
        s["u"] = {{"norm2", construct->u_norm2},
                  {"inner_with_root", construct->u_root_inner},
                  {"part_independent", construct->u_part_independent}};
        s["hyperplane_all_277"] = construct->hyperplane_all_277;
        s["distance_counts"] = {{"4", construct->distance_count4}, {"6", construct->distance_count6}};
        s["lemma_part_pairs_checked"] = construct->lemma_part_pairs;
        stages["construct"] = s;
    }
    if (maximality) {
        json s;
        s["rank_m"] = maximality->rank_m;
        s["m_minimum"] = maximality->m_minimum;
        s["dual_minimum"] = maximality->dual_minimum;
        s["expected_vector"] = {{"coords", maximality->expected_coords},
                                {"norm2", maximality->expected_norm2},
                                {"in_dual", maximality->expected_in_dual},
                                {"adm6", maximality->expected_adm6},
                                {"adm4", maximality->expected_adm4}};
        s["skip_long"] = maximality->skip_long;
        if (maximality->enumeration) {
            const auto& e = *maximality->enumeration;
            json en;
            en["range"] = {"5/2", "6"};
            en["candidate_pairs"] = e.candidate_pairs;
            en["signed_candidates"] = 2 * e.candidate_pairs;
            en["adm4_survivors"] = e.adm4_survivors;
            json survivors = json::array();
            for (const auto& v : e.adm6_survivors) {
                json coords = json::array();
                for (const Int& c : v) coords.push_back(c.get_si());
                survivors.push_back(coords);
            }
            en["adm6_survivors"] = survivors;
            en["survivor_matches_expected"] = !e.adm6_survivors.empty() && e.adm6_survivors[0] == e.expected;
            en["tree_nodes"] = e.nodes;
            en["bignum_path"] = e.bignum_path;
            en["wall_clock_seconds"] = e.wall_seconds;
            en["workers"] = e.workers;
            s["enumeration"] = en;
        }
        s["extension_identity_all_277"] = maximality->extension_identity_all_277;
        stages["maximality"] = s;
    }
    j["stages"] = stages;
    return j;
}

std::string ExtensionCertificate::to_text() const { return to_json().dump(2) + "\n"; }

json strip_timing(json j) {
    if (j.is_object()) {
        j.erase("wall_clock_seconds");
        for (auto& [key, value] : j.items()) value = strip_timing(value);
    } else if (j.is_array()) {
        for (auto& value : j) value = strip_timing(value);
    }
    return j;
}

}  // namespace twodist
