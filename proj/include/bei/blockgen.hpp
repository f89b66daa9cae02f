#pragma once

/// \file blockgen.hpp
/// \brief Isomorph-free generation of the candidate blocks and the structural block filters.
///
/// Generation is by canonical augmentation with vertex addition: a graph on m+1 vertices
/// is accepted from its parent only when the added vertex lies in the automorphism orbit
/// of the canonical deletion vertex (the minimum-degree vertex with the largest canonical
/// position). Deleting a minimum-degree vertex lets minimum-degree targets prune early
/// levels, and the parent of a 2-connected graph is connected.

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bei/graph.hpp"

namespace bei {

/// Upper edge cap applied to the block stream independently of k.
enum class EdgeCap {
    none,
    /// |E(B)| <= C(n-1,2), the edge bound taken at k = n-1.
    binomial,
    /// |E(B)| <= the largest edge bound over 4 <= k <= n-3.
    max_over_k,
};

struct EdgeBounds {
    int min_edges = 0;
    int max_edges = 0;
};

/// ceil(3n/2) <= |E(B)| <= floor((n-1)^2/2 - (k/2)(n - floor((n+k)/2))), for 4 <= k <= n-3.
EdgeBounds edge_bounds(int n, int k);

/// "none", "binomial" or "max-over-k"; throws std::invalid_argument.
EdgeCap parse_edge_cap(const std::string& name);

/// Largest upper edge bound over 4 <= k <= n-3; C(n,2) when that range is empty.
int max_edge_bound(int n);

struct BlockFilterConfig {
    int n = 0;
    bool require_block = true;
    bool forbid_free_vertices = true;
    /// Rejects vertices of degree at most two.
    bool forbid_low_degree = true;
    /// binomial dominates the bound for every 4 <= k <= n-3; with the structural filters it
    /// gives the filtered-block counts for n <= 9, max_over_k the count for n = 10.
    EdgeCap edge_cap = EdgeCap::binomial;
    /// Whisker count whose edge bounds apply, if any.
    std::optional<int> edge_bounds_k;
    std::optional<int> min_edges;
    std::optional<int> max_edges;

    /// Block, no free vertex, minimum degree three, edge cap. Reproduces the filtered-block counts.
    static BlockFilterConfig structural(int n);
    /// Every block, no further filter.
    static BlockFilterConfig blocks_only(int n);
    /// Nothing filtered.
    static BlockFilterConfig none(int n);

    /// Effective edge range after combining the explicit range with the bounds for k.
    EdgeBounds edge_range() const;
    void validate() const;
};

struct FilterVerdict {
    bool pass = false;
    std::string reason;
};

FilterVerdict passes_block_filters(const Graph& b, const BlockFilterConfig& cfg);

/// Largest block order the internal generator accepts.
inline constexpr int kMaxGeneratedOrder = 11;

struct GeneratedGraph {
    int edges = 0;
    /// graph6 of the canonical representative.
    std::string graph6;

    auto operator<=>(const GeneratedGraph&) const = default;
};

struct GenerationSpec {
    int n = 0;
    /// Minimum degree of the emitted graphs; used to prune intermediate levels.
    int min_degree = 0;
    /// Emitted graphs are 2-connected, so parents on n-1 vertices must be connected.
    bool two_connected = false;
    bool connected = false;
    int min_edges = 0;
    int max_edges = kMaxVertices * (kMaxVertices - 1) / 2;
    /// Final isomorphism-invariant filter; may be empty.
    std::function<bool(const Graph&)> accept;
};

/// One representative per isomorphism class, sorted by (edge count, canonical graph6).
/// jobs > 1 parallelizes over parents with OpenMP; output is identical for every jobs value.
std::vector<GeneratedGraph> generate_graphs(const GenerationSpec& spec, int jobs = 1);

/// Serial reference for generate_graphs: no OpenMP, one parent at a time.
std::vector<GeneratedGraph> generate_graphs_serial(const GenerationSpec& spec);

/// Blocks on n vertices passing cfg, in deterministic stream order.
std::vector<GeneratedGraph> generate_blocks(int n, const BlockFilterConfig& cfg, int jobs = 1);

/// Connected graphs on exactly n vertices.
std::vector<GeneratedGraph> generate_connected_graphs(int n, int jobs = 1);

struct IngestStats {
    long lines = 0;
    long decoded = 0;
    long rejected = 0;
    long duplicates = 0;
};

/// Decodes a graph6 line stream, keeps graphs passing cfg and drops isomorphic repeats.
/// Malformed lines throw ParseError with the line number.
std::vector<Graph> ingest_graph6(std::istream& in, const BlockFilterConfig& cfg,
                                 IngestStats* stats = nullptr);

} // namespace bei
