#pragma once

/// \file verify.hpp
/// \brief Exhaustive check of accessible => strongly unmixed over a family of graphs.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bei/graph.hpp"

namespace bei {

struct OrderCounts {
    std::int64_t graphs = 0;
    std::int64_t unmixed = 0;
    std::int64_t accessible = 0;
    std::int64_t strongly_unmixed = 0;

    bool operator==(const OrderCounts&) const = default;
};

struct VerifySummary {
    /// Keyed by number of vertices.
    std::map<int, OrderCounts> by_order;
    /// graph6 of accessible graphs that are not strongly unmixed, sorted.
    std::vector<std::string> counterexample_candidates;

    OrderCounts totals() const;
    bool verdict() const { return counterexample_candidates.empty(); }
};

/// Runs the full implication report on every graph (OpenMP over graphs when jobs > 1).
VerifySummary verify_graphs(const std::vector<Graph>& graphs, int jobs = 1);

/// All connected graphs on 1..max_vertices vertices, one per isomorphism class.
VerifySummary verify_connected_graphs(int max_vertices, int jobs = 1);

} // namespace bei
