#pragma once

// Brute-force reference implementations used only by the tests. Everything here works
// straight from the definitions, with no shared code beyond Graph itself.

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bei/graph.hpp"
#include "bei/graph_io.hpp"

namespace oracle {

using bei::Graph;
using bei::Mask;

// components of g after deleting `removed`, by repeated flood fill on edge lists
inline int components(const Graph& g, Mask removed) {
    const int n = g.order();
    std::vector<int> label(n, -1);
    int count = 0;
    for (int s = 0; s < n; ++s) {
        if ((removed >> s) & 1U || label[s] >= 0) continue;
        std::vector<int> stack{s};
        label[s] = count;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w = 0; w < n; ++w) {
                if (g.has_edge(u, w) && !((removed >> w) & 1U) && label[w] < 0) {
                    label[w] = count;
                    stack.push_back(w);
                }
            }
        }
        ++count;
    }
    return count;
}

inline bool cut_set(const Graph& g, Mask s) {
    const int c = components(g, s);
    for (int i = 0; i < g.order(); ++i) {
        if (((s >> i) & 1U) && components(g, s & ~bei::bit(i)) >= c) return false;
    }
    return true;
}

// all 2^n subsets filtered through the definition, sorted by (size, mask)
inline std::vector<Mask> cut_sets(const Graph& g) {
    std::vector<Mask> out;
    for (Mask s = 0; s < (Mask{1} << g.order()); ++s) {
        if (cut_set(g, s)) out.push_back(s);
    }
    std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    return out;
}

inline bool unmixed(const Graph& g) {
    const int c0 = components(g, 0);
    for (Mask s : cut_sets(g)) {
        if (components(g, s) != std::popcount(s) + c0) return false;
    }
    return true;
}

inline bool accessible(const Graph& g) {
    if (!unmixed(g)) return false;
    std::vector<Mask> all = cut_sets(g);
    std::set<Mask> family(all.begin(), all.end());
    for (Mask s : all) {
        if (s == 0) continue;
        bool ok = false;
        for (int i = 0; i < g.order() && !ok; ++i) {
            if (((s >> i) & 1U) && family.count(s & ~bei::bit(i))) ok = true;
        }
        if (!ok) return false;
    }
    return true;
}

inline bool is_articulation(const Graph& g, int v) {
    return components(g, bei::bit(v)) > components(g, 0);
}

inline std::vector<int> good_cut_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v) {
        if (is_articulation(g, v) && unmixed(g.remove_vertex(v))) out.push_back(v);
    }
    return out;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (coin(rng)) g.add_edge(u, v);
        }
    }
    return g;
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

// Backtracking isomorphism test: vertices of g are mapped in order, candidates must match
// degree and adjacency with everything mapped so far.
inline bool isomorphic(const Graph& g, const Graph& h) {
    const int n = g.order();
    if (h.order() != n || g.edge_count() != h.edge_count()) return false;
    std::vector<int> dg, dh;
    for (int v = 0; v < n; ++v) {
        dg.push_back(g.degree(v));
        dh.push_back(h.degree(v));
    }
    std::vector<int> sg = dg, sh = dh;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) return false;
    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    std::function<bool(int)> extend = [&](int v) {
        if (v == n) return true;
        for (int w = 0; w < n; ++w) {
            if (used[w] || dh[w] != dg[v]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u) {
                if (g.has_edge(u, v) != h.has_edge(map[u], w)) ok = false;
            }
            if (!ok) continue;
            map[v] = w;
            used[w] = true;
            if (extend(v + 1)) return true;
            used[w] = false;
        }
        return false;
    };
    return extend(0);
}

// Smallest graph6 string over all n! relabellings; only for tiny n.
inline std::string brute_canonical(const Graph& g) {
    std::vector<int> p(g.order());
    for (int i = 0; i < g.order(); ++i) p[i] = i;
    std::string best;
    do {
        std::string s = bei::to_graph6(bei::permute(g, p));
        if (best.empty() || s < best) best = s;
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

// every labelled graph on n vertices, as edge masks over the C(n,2) pairs
inline void for_each_labelled_graph(int n, const std::function<void(const Graph&)>& visit) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t m = 0; m < total; ++m) {
        Graph g(n);
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if ((m >> i) & 1U) g.add_edge(pairs[i].first, pairs[i].second);
        }
        visit(g);
    }
}

inline Graph one_based(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u - 1, v - 1);
    return g;
}

inline Mask mask1(std::initializer_list<int> one_based_vertices) {
    Mask m = 0;
    for (int v : one_based_vertices) m |= bei::bit(v - 1);
    return m;
}

} // namespace oracle
