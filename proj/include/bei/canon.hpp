#pragma once

/// \file canon.hpp
/// \brief Canonical labelling of small graphs and a thread-safe isomorph-rejection store.
///
/// The labelling refines the unit partition to an equitable one, then individualizes
/// vertices of the first smallest non-singleton cell with backtracking and keeps the
/// lexicographically largest relabelled adjacency matrix. Automorphisms discovered at
/// equal leaves prune sibling subtrees (orbits of the pointwise stabilizer of the
/// current individualization prefix) and trigger a jump back to the common ancestor.

#include <compare>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "bei/graph.hpp"

namespace bei {

/// graph6 text of the canonically relabelled graph. Equal iff the graphs are isomorphic.
struct CanonicalForm {
    std::string bytes;

    auto operator<=>(const CanonicalForm&) const = default;
    bool operator==(const CanonicalForm&) const = default;
};

using Permutation = std::vector<int>;

struct CanonicalLabeling {
    /// order[i] is the original vertex placed at canonical position i.
    std::vector<int> order;
    /// position[v] is the canonical position of original vertex v.
    std::vector<int> position;
    Graph graph;
    /// Automorphisms found during the search; they generate the full automorphism group.
    std::vector<Permutation> generators;
};

CanonicalLabeling canonical_labeling(const Graph& g);

CanonicalForm canonical_form(const Graph& g);

/// Orbit representative (smallest vertex) of every vertex under the group generated by `gens`.
std::vector<int> orbit_representatives(int n, const std::vector<Permutation>& gens);

/// Insert-if-absent set of canonical forms, safe for concurrent producers. Enumeration is
/// lexicographic by form bytes, so merged results do not depend on thread interleaving.
class DedupStore {
public:
    DedupStore() = default;
    DedupStore(const DedupStore&) = delete;
    DedupStore& operator=(const DedupStore&) = delete;

    /// Returns true when the form was not present before.
    bool insert(const CanonicalForm& form);
    bool contains(const CanonicalForm& form) const;
    std::size_t size() const;
    std::vector<CanonicalForm> sorted() const;
    void merge(const DedupStore& other);

private:
    mutable std::mutex mutex_;
    std::set<std::string> forms_;
};

} // namespace bei
