#pragma once

/// \file graph.hpp
/// \brief Small simple graphs stored as one 64-bit adjacency mask per vertex.

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bei {

using Mask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr Mask bit(int v) { return Mask{1} << v; }

constexpr Mask low_bits(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

/// Thrown when a graph or subset sweep exceeds a fixed capacity.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A subset of the vertices 0..n-1 of some graph.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(Mask bits) : bits_(bits) {}

    static VertexSet of(std::initializer_list<int> vertices) {
        VertexSet s;
        for (int v : vertices) s.insert(v);
        return s;
    }

    constexpr Mask bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
    constexpr int first() const { return std::countr_zero(bits_); }

    constexpr void insert(int v) { bits_ |= bit(v); }
    constexpr void erase(int v) { bits_ &= ~bit(v); }

    constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr bool operator==(const VertexSet&) const = default;
    constexpr auto operator<=>(const VertexSet&) const = default;

    class iterator {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        constexpr iterator() = default;
        constexpr explicit iterator(Mask rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int) {
            iterator old = *this;
            ++*this;
            return old;
        }
        constexpr bool operator==(const iterator&) const = default;

    private:
        Mask rest_ = 0;
    };

    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<int> to_vector() const { return {begin(), end()}; }

private:
    Mask bits_ = 0;
};

/// Undirected simple graph on at most 64 vertices. Rows are kept symmetric and loop-free.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
    static Graph complete(int n);
    static Graph cycle(int n);
    static Graph path(int n);

    int order() const { return n_; }
    VertexSet vertices() const { return VertexSet(low_bits(n_)); }
    Mask row(int v) const { return adj_[v]; }
    VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
    int degree(int v) const { return std::popcount(adj_[v]); }
    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1U; }
    int edge_count() const;
    int min_degree() const;
    std::vector<std::pair<int, int>> edges() const;

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    /// Induced subgraph on `keep`, relabelled to 0..|keep|-1 in ascending vertex order.
    Graph induced(VertexSet keep) const;
    Graph remove_vertex(int v) const { return induced(vertices() - VertexSet(bit(v))); }

    /// Disjoint union; vertices of `other` are shifted by order().
    Graph disjoint_union(const Graph& other) const;

    bool operator==(const Graph& other) const;

private:
    int n_ = 0;
    std::array<Mask, kMaxVertices> adj_{};
};

struct Components {
    int count = 0;
    std::vector<VertexSet> parts;
};

/// c_G(S): number of connected components of G minus `removed`. This is the hot loop.
int component_count(const Graph& g, Mask removed);

inline int component_count(const Graph& g, VertexSet removed) {
    return component_count(g, removed.bits());
}

/// Components of G minus `removed`, ordered by their smallest vertex.
Components count_components(const Graph& g, VertexSet removed = {});

bool is_connected(const Graph& g);
bool is_complete(const Graph& g);

/// True when every connected component is a complete graph.
bool components_complete(const Graph& g);

/// Articulation points: vertices whose removal increases the component count.
VertexSet cut_vertices(const Graph& g);

/// Connected with no cut vertex. K1 and K2 count as blocks.
bool is_block(const Graph& g);

/// G_v: the neighbourhood of v completed to a clique.
Graph saturate(const Graph& g, int v);

/// N(v) induces a clique, so v lies in a unique maximal clique.
bool is_free_vertex(const Graph& g, int v);

VertexSet free_vertices(const Graph& g);

/// Image of g under the permutation perm (vertex v goes to perm[v]).
Graph permute(const Graph& g, const std::vector<int>& perm);

/// 1-based sorted list, as printed in reports.
std::vector<int> one_based(VertexSet s);

} // namespace bei
