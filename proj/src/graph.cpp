#include "bei/graph.hpp"

#include <algorithm>

namespace bei {

namespace {

void check_order(int n) {
    if (n < 0 || n > kMaxVertices) {
        throw CapacityError("graph order " + std::to_string(n) + " outside 0.." +
                            std::to_string(kMaxVertices));
    }
}

void check_vertex(int n, int v) {
    if (v < 0 || v >= n) {
        throw std::out_of_range("vertex " + std::to_string(v) + " not in graph of order " +
                                std::to_string(n));
    }
}

// Vertices reachable from `start` inside `allowed`.
Mask reach(const Graph& g, Mask start, Mask allowed) {
    Mask seen = start;
    Mask frontier = start;
    while (frontier) {
        Mask next = 0;
        for (Mask f = frontier; f; f &= f - 1) next |= g.row(std::countr_zero(f));
        frontier = next & allowed & ~seen;
        seen |= frontier;
    }
    return seen;
}

struct ArticulationState {
    const Graph* g;
    std::array<int, kMaxVertices> disc{};
    std::array<int, kMaxVertices> low{};
    int timer = 0;
    Mask visited = 0;
    Mask cut = 0;

    void dfs(int v, int parent) {
        visited |= bit(v);
        disc[v] = low[v] = ++timer;
        int children = 0;
        for (Mask rest = g->row(v); rest; rest &= rest - 1) {
            int w = std::countr_zero(rest);
            if (w == parent) continue;
            if (visited & bit(w)) {
                low[v] = std::min(low[v], disc[w]);
                continue;
            }
            ++children;
            dfs(w, v);
            low[v] = std::min(low[v], low[w]);
            if (parent >= 0 && low[w] >= disc[v]) cut |= bit(v);
        }
        if (parent < 0 && children > 1) cut |= bit(v);
    }
};

} // namespace

Graph::Graph(int n) : n_(n) { check_order(n); }

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) g.adj_[v] = low_bits(n) & ~bit(v);
    return g;
}

Graph Graph::cycle(int n) {
    Graph g = path(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

Graph Graph::path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
    return twice / 2;
}

int Graph::min_degree() const {
    int best = n_ == 0 ? 0 : kMaxVertices;
    for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
    return best;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        for (Mask rest = adj_[u] & ~low_bits(u + 1); rest; rest &= rest - 1) {
            out.emplace_back(u, std::countr_zero(rest));
        }
    }
    return out;
}

void Graph::add_edge(int u, int v) {
    check_vertex(n_, u);
    check_vertex(n_, v);
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
    check_vertex(n_, u);
    check_vertex(n_, v);
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
}

Graph Graph::induced(VertexSet keep) const {
    std::array<int, kMaxVertices> index{};
    int m = 0;
    for (int v : keep) index[v] = m++;
    Graph h(m);
    for (int v : keep) {
        Mask row = 0;
        for (Mask rest = adj_[v] & keep.bits(); rest; rest &= rest - 1) {
            row |= bit(index[std::countr_zero(rest)]);
        }
        h.adj_[index[v]] = row;
    }
    return h;
}

Graph Graph::disjoint_union(const Graph& other) const {
    Graph h(n_ + other.n_);
    for (int v = 0; v < n_; ++v) h.adj_[v] = adj_[v];
    for (int v = 0; v < other.n_; ++v) h.adj_[n_ + v] = other.adj_[v] << n_;
    return h;
}

bool Graph::operator==(const Graph& other) const {
    return n_ == other.n_ && std::equal(adj_.begin(), adj_.begin() + n_, other.adj_.begin());
}

int component_count(const Graph& g, Mask removed) {
    Mask rest = low_bits(g.order()) & ~removed;
    int count = 0;
    while (rest) {
        Mask seen = reach(g, rest & (~rest + 1), rest);
        rest &= ~seen;
        ++count;
    }
    return count;
}

Components count_components(const Graph& g, VertexSet removed) {
    Components out;
    Mask rest = low_bits(g.order()) & ~removed.bits();
    while (rest) {
        Mask seen = reach(g, rest & (~rest + 1), rest);
        out.parts.emplace_back(seen);
        rest &= ~seen;
    }
    out.count = static_cast<int>(out.parts.size());
    return out;
}

bool is_connected(const Graph& g) { return component_count(g, Mask{0}) <= 1; }

bool is_complete(const Graph& g) {
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) != g.order() - 1) return false;
    }
    return true;
}

bool components_complete(const Graph& g) {
    for (const VertexSet& part : count_components(g).parts) {
        for (int v : part) {
            if ((g.row(v) | bit(v)) != part.bits()) return false;
        }
    }
    return true;
}

VertexSet cut_vertices(const Graph& g) {
    ArticulationState st;
    st.g = &g;
    for (int v = 0; v < g.order(); ++v) {
        if (!(st.visited & bit(v))) st.dfs(v, -1);
    }
    return VertexSet(st.cut);
}

bool is_block(const Graph& g) { return is_connected(g) && cut_vertices(g).empty(); }

Graph saturate(const Graph& g, int v) {
    check_vertex(g.order(), v);
    Graph h = g;
    Mask nb = g.row(v);
    for (int w : VertexSet(nb)) {
        for (int u : VertexSet(nb & ~bit(w))) h.add_edge(w, u);
    }
    return h;
}

bool is_free_vertex(const Graph& g, int v) {
    check_vertex(g.order(), v);
    Mask nb = g.row(v);
    for (int w : VertexSet(nb)) {
        if ((nb & ~(g.row(w) | bit(w))) != 0) return false;
    }
    return true;
}

VertexSet free_vertices(const Graph& g) {
    VertexSet out;
    for (int v = 0; v < g.order(); ++v) {
        if (is_free_vertex(g, v)) out.insert(v);
    }
    return out;
}

Graph permute(const Graph& g, const std::vector<int>& perm) {
    Graph h(g.order());
    for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
    return h;
}

std::vector<int> one_based(VertexSet s) {
    std::vector<int> out;
    for (int v : s) out.push_back(v + 1);
    return out;
}

} // namespace bei
