#include "bei/whiskers.hpp"

#include <stdexcept>
#include <string>

namespace bei {

int BlockWithWhiskers::leaf_of(int v) const {
    if (!whiskered.contains(v)) return -1;
    return base.order() + std::popcount(whiskered.bits() & low_bits(v));
}

BlockWithWhiskers add_whiskers(const Graph& block, VertexSet whiskered) {
    if (!is_block(block)) throw std::invalid_argument("whiskers can only be added to a block");
    if (whiskered.empty()) throw std::invalid_argument("whisker set is empty");
    if (!whiskered.subset_of(block.vertices())) {
        throw std::invalid_argument("whisker set is not a subset of the block");
    }
    const int n = block.order();
    const int total = n + whiskered.size();
    if (total > kMaxVertices) {
        throw CapacityError("block with whiskers would have " + std::to_string(total) + " vertices");
    }
    BlockWithWhiskers bw{block, whiskered, block.disjoint_union(Graph(whiskered.size()))};
    int leaf = n;
    for (int v : whiskered) bw.full.add_edge(v, leaf++);
    return bw;
}

Graph strip_whiskers(const BlockWithWhiskers& bw) {
    return bw.full.induced(VertexSet(low_bits(bw.base.order())));
}

} // namespace bei
