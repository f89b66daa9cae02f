#pragma once

/// \file search.hpp
/// \brief Exhaustive search over blocks with whiskers for an accessible graph with no
/// good cut vertex, with the pruning filters individually switchable.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bei/blockgen.hpp"
#include "bei/cutsets.hpp"
#include "bei/graph.hpp"
#include "bei/properties.hpp"
#include "bei/whiskers.hpp"

namespace bei {

/// The pruning steps of the search, in pipeline order.
enum class SearchFilter {
    line2_free,       // blocks with a free vertex
    line2_degree,     // blocks with a vertex of degree <= 2
    edge_bounds,      // edge cap and per-k edge bounds
    line5,            // 1 <= k_T <= k for every nonempty cut set T of B
    line6,            // whiskered vertices have degree <= floor((n+k)/2) - 2
    line8,            // deg(v) <= floor((n+r)/2) - 2, r = |N_B[v] & S|
    line10_cover,     // N_B(S) = V(B)
    line10_connected, // B \ S connected
    line10_kT,        // |S & T| = k_T
    line12,           // shape of B[S]
};

inline constexpr int kSearchFilterCount = 10;

std::string filter_name(SearchFilter f);
/// Accepts the names above with '-' or '_', and "all". Throws std::invalid_argument.
std::set<SearchFilter> parse_filter_names(const std::vector<std::string>& names);

struct SearchConfig {
    int n = 0;
    int k = 0;
    std::optional<int> min_edges;
    std::optional<int> max_edges;
    /// Block i of the stream belongs to shard i % shards.
    int shards = 1;
    int shard_index = 0;
    int jobs = 1;
    /// k-independent cap on the block stream; the per-k bounds are applied per block.
    EdgeCap edge_cap = EdgeCap::binomial;
    std::set<SearchFilter> disabled;
    /// Replaces internal generation; the line-2 filters are still applied.
    std::optional<std::vector<Graph>> blocks;

    bool enabled(SearchFilter f) const { return !disabled.count(f); }
    bool filter_free() const { return static_cast<int>(disabled.size()) == kSearchFilterCount; }
    /// Configuration used to produce the block stream.
    BlockFilterConfig block_filter() const;
    /// Throws std::invalid_argument on bad n, k or shard parameters.
    void validate() const;
};

struct SearchStats {
    int n = 0;
    int k = 0;
    std::int64_t blocks_seen = 0;
    std::int64_t blocks_passing_line5 = 0;
    std::int64_t candidates_enumerated = 0;
    /// Pass lines 8-12, before isomorphism dedup.
    std::int64_t candidates_passing_lines8_12 = 0;
    /// After dedup: the size of the list whose members are tested.
    std::int64_t candidates_surviving_lines8_12 = 0;
    std::int64_t unmixed_candidates = 0;
    std::int64_t accessible_candidates = 0;
    std::int64_t survivors_without_good_cut_vertex = 0;
    std::map<std::string, std::int64_t> rejections;

    bool verdict() const { return survivors_without_good_cut_vertex == 0; }
    /// Sums counters; n and k must agree.
    void merge(const SearchStats& other);
    bool operator==(const SearchStats&) const = default;
};

struct CandidateVerdict {
    bool pass = false;
    std::string reason;
};

/// Lines 8-12 for one whisker set S. ktable holds the nonempty cut sets of b with k_T.
CandidateVerdict candidate_passes(const Graph& b, VertexSet s, int k,
                                  const std::vector<CutSetRecord>& ktable,
                                  const std::set<SearchFilter>& disabled = {});

struct Survivor {
    BlockWithWhiskers graph;
    std::string canonical_graph6;
    PropertyReport report;
};

struct SearchResult {
    SearchStats stats;
    /// Accessible candidates, sorted by canonical graph6.
    std::vector<Survivor> survivors;
    /// Canonical graph6 of every unmixed candidate, sorted.
    std::vector<std::string> unmixed_forms;

    bool verdict() const { return stats.verdict(); }
};

/// Blocks are processed independently (OpenMP over blocks when jobs > 1) and reduced in
/// stream order, so the result does not depend on jobs.
SearchResult run_search(const SearchConfig& cfg);

/// Same pipeline, one block at a time without OpenMP.
SearchResult run_search_serial(const SearchConfig& cfg);

/// Merges sharded results. Dedup is per block, so shard totals add up.
SearchResult merge_results(const std::vector<SearchResult>& parts);

/// One configuration per shard, covering the stream of cfg exactly once.
std::vector<SearchConfig> shard_plan(const SearchConfig& cfg, int shards);

enum class ScreenCondition {
    free_vertex,
    low_degree,
    few_whiskers,
    neighbourhood_bound,
    four_whiskers_block,
    many_whiskers,
    none,
};

std::string condition_name(ScreenCondition c);

/// First condition, in the order above, under which an accessible block with whiskers is
/// known to have a good cut vertex.
ScreenCondition screen_condition(const BlockWithWhiskers& bw);

} // namespace bei
