#include "bei/report_json.hpp"

#include <stdexcept>

#include "bei/graph_io.hpp"

namespace bei {

using nlohmann::ordered_json;

ordered_json vertex_list(VertexSet s) {
    ordered_json a = ordered_json::array();
    for (int v : s) a.push_back(v + 1);
    return a;
}

ordered_json to_json(const PropertyReport& r) {
    ordered_json j;
    j["schema"] = kJsonSchema;
    j["graph6"] = r.graph6;
    j["vertices"] = r.vertices;
    j["edges"] = r.edges;
    j["cut_vertices"] = vertex_list(r.cut_vertices);
    if (r.evaluated.unmixed || r.evaluated.accessible) {
        j["unmixed"] = r.unmixed;
        j["unmixed_witness"] = r.unmixed_witness ? vertex_list(*r.unmixed_witness) : ordered_json();
    }
    if (r.evaluated.accessible) {
        j["accessible"] = r.accessible;
        j["stuck_set"] = r.stuck_set ? vertex_list(*r.stuck_set) : ordered_json();
    }
    if (r.evaluated.good_cut_vertices) j["good_cut_vertices"] = vertex_list(r.good_cut_vertices);
    if (r.evaluated.strongly_unmixed) {
        j["strongly_unmixed"] = r.strongly_unmixed;
        ordered_json trace = ordered_json::array();
        for (int v : r.strong_trace) trace.push_back(v + 1);
        j["strong_trace"] = trace;
    }
    if (r.evaluated.accessible && r.evaluated.strongly_unmixed) {
        j["counterexample_candidate"] = r.counterexample_candidate;
    }
    return j;
}

ordered_json to_json(const SearchStats& s) {
    ordered_json j;
    j["schema"] = kJsonSchema;
    j["n"] = s.n;
    j["k"] = s.k;
    j["filtered_blocks"] = s.blocks_seen;
    j["blocks_with_whiskers_unmixed"] = s.unmixed_candidates;
    j["accessible_blocks_with_whiskers"] = s.accessible_candidates;
    j["blocks_passing_line5"] = s.blocks_passing_line5;
    j["candidates_enumerated"] = s.candidates_enumerated;
    j["candidates_passing_lines8_12"] = s.candidates_passing_lines8_12;
    j["candidates_surviving_lines8_12"] = s.candidates_surviving_lines8_12;
    j["survivors_without_good_cut_vertex"] = s.survivors_without_good_cut_vertex;
    ordered_json rej = ordered_json::object();
    for (const auto& [name, count] : s.rejections) rej[name] = count;
    j["rejections"] = rej;
    j["verdict"] = s.verdict();
    return j;
}

SearchStats stats_from_json(const nlohmann::json& j) {
    if (j.value("schema", 0) != kJsonSchema) throw std::invalid_argument("unsupported stats schema");
    SearchStats s;
    s.n = j.at("n").get<int>();
    s.k = j.at("k").get<int>();
    s.blocks_seen = j.at("filtered_blocks").get<std::int64_t>();
    s.unmixed_candidates = j.at("blocks_with_whiskers_unmixed").get<std::int64_t>();
    s.accessible_candidates = j.at("accessible_blocks_with_whiskers").get<std::int64_t>();
    s.blocks_passing_line5 = j.at("blocks_passing_line5").get<std::int64_t>();
    s.candidates_enumerated = j.at("candidates_enumerated").get<std::int64_t>();
    s.candidates_passing_lines8_12 = j.at("candidates_passing_lines8_12").get<std::int64_t>();
    s.candidates_surviving_lines8_12 = j.at("candidates_surviving_lines8_12").get<std::int64_t>();
    s.survivors_without_good_cut_vertex = j.at("survivors_without_good_cut_vertex").get<std::int64_t>();
    for (const auto& [name, count] : j.at("rejections").items()) s.rejections[name] = count.get<std::int64_t>();
    return s;
}

ordered_json survivors_json(const SearchResult& r) {
    ordered_json a = ordered_json::array();
    for (const Survivor& s : r.survivors) {
        ordered_json j = to_json(s.report);
        j["canonical_graph6"] = s.canonical_graph6;
        j["block_graph6"] = to_graph6(s.graph.base);
        j["whiskered"] = vertex_list(s.graph.whiskered);
        a.push_back(std::move(j));
    }
    return a;
}

} // namespace bei
