#pragma once

/// \file cutsets.hpp
/// \brief The cut-set collection C(G) and the unmixedness scan built on it.
///
/// S is a cut set when S is empty or every i in S satisfies c(S) > c(S \ {i}).
/// A free vertex never belongs to a cut set (re-adding it joins at most one
/// component), so all sweeps run over the non-free vertices only.

#include <functional>
#include <optional>
#include <vector>

#include "bei/graph.hpp"

namespace bei {

struct CutSetRecord {
    VertexSet set;
    int components = 0;
    /// |T| + 1 - c_B(T), filled in for cut sets of a block.
    std::optional<int> k_value;
};

/// Records sorted by (cardinality, mask); the empty set is always first.
struct CutSetFamily {
    std::vector<CutSetRecord> records;

    std::size_t size() const { return records.size(); }
    bool contains(VertexSet s) const;
    const CutSetRecord* find(VertexSet s) const;
};

/// Largest number of non-free vertices the subset sweep accepts (2^24 subsets).
inline constexpr int kMaxSweepUniverse = 24;

bool is_cut_set(const Graph& g, VertexSet s);

/// Visits every cut set in (cardinality, mask) order, the empty set first. The callback
/// returns false to stop early; the function then returns false.
bool sweep_cut_sets(const Graph& g,
                    const std::function<bool(VertexSet, int components)>& on_cut_set);

/// Full C(G) by the subset sweep. Throws CapacityError beyond kMaxSweepUniverse.
CutSetFamily enumerate_cut_sets(const Graph& g);

/// Cut sets reachable from the empty set through cut sets, one vertex at a time.
/// Equals C(G) exactly when every nonempty cut set has a removable element, so for
/// accessible graphs; K_{2,3} plus an edge between its hubs is unmixed and is missed.
CutSetFamily expand_cut_sets(const Graph& g);

struct UnmixedScan {
    bool unmixed = false;
    /// Number of components of g (the constant c in c(S) = |S| + c).
    int base_components = 0;
    /// First cut set in (cardinality, mask) order with c(S) != |S| + c.
    std::optional<CutSetRecord> violation;
    /// C(G); only populated when unmixed.
    CutSetFamily family;
};

UnmixedScan unmixed_cut_set_scan(const Graph& g);

/// Nonempty cut sets T of a block with k_T = |T| + 1 - c_B(T).
std::vector<CutSetRecord> cut_sets_with_k(const Graph& block);

} // namespace bei
