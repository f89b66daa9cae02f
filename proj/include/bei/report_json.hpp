#pragma once

/// \file report_json.hpp
/// \brief JSON views of reports and search results. Vertices are 1-based and sorted.

#include <json.hpp>

#include "bei/properties.hpp"
#include "bei/search.hpp"

namespace bei {

inline constexpr int kJsonSchema = 1;

nlohmann::ordered_json vertex_list(VertexSet s);
nlohmann::ordered_json to_json(const PropertyReport& r);
/// Deterministic: no timings, keys in a fixed order.
nlohmann::ordered_json to_json(const SearchStats& s);
/// Inverse of to_json(SearchStats), for merging shard outputs.
SearchStats stats_from_json(const nlohmann::json& j);
nlohmann::ordered_json survivors_json(const SearchResult& r);

} // namespace bei
