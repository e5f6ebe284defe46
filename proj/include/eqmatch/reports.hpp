#pragma once

// JSON report builders shared by the CLI and tests. Reports carry
// schema_version 1; the matching schemas live under schemas/.

#include <json.hpp>

#include "eqmatch/bounds.hpp"
#include "eqmatch/constructions.hpp"
#include "eqmatch/equimatch.hpp"
#include "eqmatch/rotation.hpp"

namespace eqmatch {

constexpr int kReportSchemaVersion = 1;

struct AnalysisReport {
    int vertices = 0;
    int edges = 0;
    Shape shape;
    BasicClassification basic;
    int nu = 0;
    bool perfect_matching = false;
    EquimatchResult equimatchable;
    bool factor_critical = false;
    bool randomly_matchable = false;
    bool theorem_checked = false;
    std::uint64_t pairs_checked = 0;  // (vertex, minimal isolating matching) pairs
    std::vector<RemainderReport> violations;
};

inline AnalysisReport analyze_graph(const Graph& g, bool check_theorem) {
    AnalysisReport r;
    r.vertices = g.vertex_count();
    r.edges = g.edge_count();
    r.shape = classify_shape(g);
    r.basic = classify_basic(g);
    r.nu = matching_number(g);
    r.perfect_matching = g.vertex_count() % 2 == 0 && 2 * r.nu == g.vertex_count();
    r.equimatchable = is_equimatchable(g);
    r.factor_critical = is_factor_critical(g);
    r.randomly_matchable = r.perfect_matching && r.equimatchable.equimatchable;
    if (check_theorem) {
        r.theorem_checked = true;
        for (int v = 0; v < g.vertex_count(); ++v)
            for (const auto& m : minimal_isolating_matchings(g, v)) {
                ++r.pairs_checked;
                auto report = classify_remainder(g, v, m);
                if (!report.conforms) r.violations.push_back(std::move(report));
            }
    }
    return r;
}

inline nlohmann::json matching_json(const Matching& m) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : m.edges) edges.push_back({u, v});
    return edges;
}

inline nlohmann::json shape_json(const Shape& s) {
    switch (s.kind) {
        case ShapeKind::Complete: return {{"kind", "complete"}, {"a", s.a}};
        case ShapeKind::CompleteBipartite:
            return {{"kind", "complete_bipartite"}, {"a", s.a}, {"b", s.b}};
        default: return {{"kind", "other"}};
    }
}

inline nlohmann::json remainder_report_json(const RemainderReport& r) {
    nlohmann::json components = nlohmann::json::array();
    for (std::size_t i = 0; i < r.components.size(); ++i)
        components.push_back({{"shape", shape_json(r.components[i])},
                              {"vertices", r.component_vertices[i]}});
    return {{"vertex", r.vertex},
            {"matching", matching_json(r.matching.matching)},
            {"components", components},
            {"single_component", r.single_component},
            {"conforms", r.conforms}};
}

inline nlohmann::json analysis_report_json(const AnalysisReport& r) {
    nlohmann::json j{{"schema_version", kReportSchemaVersion},
                     {"vertices", r.vertices},
                     {"edges", r.edges},
                     {"shape", shape_json(r.shape)},
                     {"connected", r.basic.connected},
                     {"biconnected", r.basic.biconnected},
                     {"bipartite", r.basic.bipartition.has_value()},
                     {"min_degree", r.basic.min_degree},
                     {"nu", r.nu},
                     {"perfect_matching", r.perfect_matching},
                     {"equimatchable", r.equimatchable.equimatchable},
                     {"factor_critical", r.factor_critical},
                     {"randomly_matchable", r.randomly_matchable}};
    if (r.basic.bipartition)
        j["bipartition"] = {{"side_a", r.basic.bipartition->side_a},
                            {"side_b", r.basic.bipartition->side_b}};
    if (r.equimatchable.witness)
        j["equimatchable_witness"] = matching_json(*r.equimatchable.witness);
    if (r.theorem_checked) {
        nlohmann::json violations = nlohmann::json::array();
        for (const auto& v : r.violations) violations.push_back(remainder_report_json(v));
        j["theorem"] = {{"pairs_checked", r.pairs_checked}, {"violations", violations}};
    }
    return j;
}

inline nlohmann::json bounds_report_json(const BoundsReport& r) {
    nlohmann::json j{{"schema_version", kReportSchemaVersion},
                     {"orientable", r.surface.orientable},
                     {"genus", r.surface.genus},
                     {"chi", r.surface.chi()},
                     {"rm_bound", r.rm_bound},
                     {"lower", r.lower},
                     {"upper", r.upper}};
    if (r.d_star) j["d_star"] = *r.d_star;
    if (r.c_star) j["c_star"] = *r.c_star;
    return j;
}

inline nlohmann::json construction_manifest_json(const std::string& kind,
                                                 const ConstructionResult& res,
                                                 const std::string& graph_file) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [key, value] : res.parameters) params[key] = value;
    nlohmann::json claims = nlohmann::json::array();
    for (auto p : res.claimed_properties) claims.push_back(to_string(p));
    nlohmann::json j{{"schema_version", kReportSchemaVersion},
                     {"kind", kind},
                     {"graph_file", graph_file},
                     {"vertices", res.graph.vertex_count()},
                     {"edges", res.graph.edge_count()},
                     {"parameters", params},
                     {"claimed_properties", claims}};
    if (res.claimed_genus) j["claimed_genus"] = *res.claimed_genus;
    return j;
}

inline nlohmann::json embedding_stats_json(const FaceTrace& t) {
    nlohmann::json faces = nlohmann::json::array();
    for (const auto& face : t.faces) {
        nlohmann::json darts = nlohmann::json::array();
        for (int d : face)
            darts.push_back(std::to_string(dart_edge(d)) + ((d & 1) ? "-" : "+"));
        faces.push_back(darts);
    }
    return {{"schema_version", kReportSchemaVersion},
            {"p", t.stats.p},
            {"q", t.stats.q},
            {"r", t.stats.r},
            {"genus", t.stats.genus},
            {"faces", faces}};
}

}  // namespace eqmatch
