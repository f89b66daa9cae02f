#pragma once

/// \file properties.hpp
/// \brief Unmixedness, accessibility, good cut vertices and strong unmixedness of J_G,
/// all decided through the cut sets of G.

#include <atomic>
#include <cstddef>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "bei/cutsets.hpp"
#include "bei/graph.hpp"

namespace bei {

struct UnmixedVerdict {
    bool unmixed = false;
    /// Cut set S with c(S) != |S| + c, when not unmixed.
    std::optional<VertexSet> witness;
    CutSetFamily family;
};

UnmixedVerdict is_unmixed(const Graph& g);

struct AccessibleVerdict {
    bool accessible = false;
    UnmixedVerdict unmixed;
    /// Nonempty cut set with no element whose removal leaves a cut set.
    std::optional<VertexSet> stuck;
};

AccessibleVerdict is_accessible(const Graph& g);

/// Cut vertices v with J_{G \ v} unmixed, by deleting v and testing the result.
VertexSet good_cut_vertices(const Graph& g);

/// The same set through the neighbourhood criterion: for G connected and unmixed, with
/// H1, H2 the components of G \ v, v is good iff no cut set of G \ v contains N_H1(v)
/// or N_H2(v). Vertices whose deletion leaves other than two components fall back to
/// the direct test and are logged.
VertexSet good_cut_vertices_by_neighbourhood(const Graph& g);

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shared cache for the strong-unmixedness recursion, keyed by canonical form.
class StrongUnmixedMemo {
public:
    explicit StrongUnmixedMemo(std::size_t budget = 1'000'000) : budget_(budget) {}

    std::optional<bool> lookup(const std::string& key) const;
    /// Throws BudgetExceeded when the cache is full.
    void store(const std::string& key, bool value);
    std::size_t size() const;
    std::size_t budget() const { return budget_; }

private:
    std::size_t budget_;
    mutable std::mutex mutex_;
    std::unordered_map<std::string, bool> cache_;
};

struct StrongVerdict {
    bool strongly_unmixed = false;
    /// Cut vertices chosen along G -> G_v \ v -> ..., in the labels of the input graph.
    std::vector<int> trace;
};

/// Components complete, or J_G unmixed with a cut vertex v such that G \ v and G_v \ v
/// are strongly unmixed. A null memo disables caching.
StrongVerdict is_strongly_unmixed(const Graph& g, StrongUnmixedMemo* memo);

/// The original three-graph recursion (G \ v, G_v and G_v \ v); used to cross-check.
bool is_strongly_unmixed_by_definition(const Graph& g);

struct PropertySelection {
    bool unmixed = true;
    bool accessible = true;
    bool good_cut_vertices = true;
    bool strongly_unmixed = true;

    static PropertySelection all() { return {}; }
};

struct PropertyReport {
    int vertices = 0;
    int edges = 0;
    std::string graph6;
    VertexSet cut_vertices;
    PropertySelection evaluated;

    bool unmixed = false;
    std::optional<VertexSet> unmixed_witness;
    bool accessible = false;
    std::optional<VertexSet> stuck_set;
    VertexSet good_cut_vertices;
    bool strongly_unmixed = false;
    std::vector<int> strong_trace;

    /// Accessible but not strongly unmixed.
    bool counterexample_candidate = false;
};

/// Evaluates the selected predicates and checks strongly unmixed => accessible =>
/// unmixed; a broken implication throws std::logic_error.
PropertyReport implication_report(const Graph& g,
                                  PropertySelection which = PropertySelection::all(),
                                  StrongUnmixedMemo* memo = nullptr);

} // namespace bei
