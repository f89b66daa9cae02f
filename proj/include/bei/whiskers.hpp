#pragma once

#include "bei/graph.hpp"

namespace bei {

/// A block B with one pendant leaf attached to every vertex of `whiskered`.
/// The leaf of the i-th whiskered vertex (ascending order) is vertex n + i of `full`.
struct BlockWithWhiskers {
    Graph base;
    VertexSet whiskered;
    Graph full;

    int block_order() const { return base.order(); }
    int whisker_count() const { return whiskered.size(); }
    /// Leaf attached to block vertex v, or -1.
    int leaf_of(int v) const;
};

/// Throws std::invalid_argument for a non-block base or an empty/out-of-range set,
/// CapacityError when the result would exceed 64 vertices.
BlockWithWhiskers add_whiskers(const Graph& block, VertexSet whiskered);

/// Inverse of add_whiskers on the full graph: drops the leaves n..n+k-1.
Graph strip_whiskers(const BlockWithWhiskers& bw);

} // namespace bei
