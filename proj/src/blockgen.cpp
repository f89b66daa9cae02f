#include "bei/blockgen.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <stdexcept>

#include "bei/canon.hpp"
#include "bei/graph_io.hpp"

#ifdef BEI_HAVE_OPENMP
#include <omp.h>
#endif

namespace bei {

EdgeBounds edge_bounds(int n, int k) {
    if (k < 4 || k > n - 3) {
        throw std::invalid_argument("edge bounds need 4 <= k <= n-3, got n=" + std::to_string(n) +
                                    " k=" + std::to_string(k));
    }
    EdgeBounds b;
    b.min_edges = (3 * n + 1) / 2;
    b.max_edges = ((n - 1) * (n - 1) - k * (n - (n + k) / 2)) / 2;
    return b;
}

EdgeCap parse_edge_cap(const std::string& name) {
    if (name == "none") return EdgeCap::none;
    if (name == "binomial") return EdgeCap::binomial;
    if (name == "max-over-k") return EdgeCap::max_over_k;
    throw std::invalid_argument("unknown edge cap '" + name + "'");
}

int max_edge_bound(int n) {
    int best = -1;
    for (int k = 4; k <= n - 3; ++k) best = std::max(best, edge_bounds(n, k).max_edges);
    return best < 0 ? n * (n - 1) / 2 : best;
}

BlockFilterConfig BlockFilterConfig::structural(int n) {
    BlockFilterConfig cfg;
    cfg.n = n;
    return cfg;
}

BlockFilterConfig BlockFilterConfig::blocks_only(int n) {
    BlockFilterConfig cfg;
    cfg.n = n;
    cfg.forbid_free_vertices = false;
    cfg.forbid_low_degree = false;
    cfg.edge_cap = EdgeCap::none;
    return cfg;
}

BlockFilterConfig BlockFilterConfig::none(int n) {
    BlockFilterConfig cfg = blocks_only(n);
    cfg.require_block = false;
    return cfg;
}

EdgeBounds BlockFilterConfig::edge_range() const {
    EdgeBounds range{0, n * (n - 1) / 2};
    if (edge_cap == EdgeCap::binomial && n >= 1) range.max_edges = (n - 1) * (n - 2) / 2;
    if (edge_cap == EdgeCap::max_over_k) range.max_edges = std::min(range.max_edges, max_edge_bound(n));
    if (edge_bounds_k) {
        EdgeBounds b = edge_bounds(n, *edge_bounds_k);
        range.min_edges = std::max(range.min_edges, b.min_edges);
        range.max_edges = std::min(range.max_edges, b.max_edges);
    }
    if (min_edges) range.min_edges = std::max(range.min_edges, *min_edges);
    if (max_edges) range.max_edges = std::min(range.max_edges, *max_edges);
    return range;
}

void BlockFilterConfig::validate() const {
    if (n < 0 || n > kMaxVertices) throw CapacityError("block order out of range");
    if ((forbid_free_vertices || forbid_low_degree) && n < 3) {
        throw std::invalid_argument("structural block filters need n >= 3");
    }
}

FilterVerdict passes_block_filters(const Graph& b, const BlockFilterConfig& cfg) {
    if (cfg.require_block && !is_block(b)) return {false, "not a block"};
    if (cfg.forbid_low_degree && b.order() > 0 && b.min_degree() <= 2) {
        return {false, "vertex of degree <= 2"};
    }
    if (cfg.forbid_free_vertices && !free_vertices(b).empty()) return {false, "free vertex"};
    BlockFilterConfig sized = cfg;
    sized.n = b.order();
    EdgeBounds range = sized.edge_range();
    const int e = b.edge_count();
    if (e < range.min_edges || e > range.max_edges) return {false, "edge count outside bounds"};
    return {true, ""};
}

namespace {

// Appends the accepted children of `parent` (one vertex more) to `out`.
void expand_parent(const Graph& parent, const GenerationSpec& spec, std::vector<GeneratedGraph>& out) {
    const int m = parent.order();
    const int order = m + 1;
    const bool last = order == spec.n;
    const int need = std::max(0, spec.min_degree - (spec.n - order));
    const int parent_edges = parent.edge_count();

    // Edges still addable after this level.
    int future = 0;
    for (int t = order + 1; t <= spec.n; ++t) future += t - 1;

    Mask below[kMaxVertices + 1] = {};
    for (int v = 0; v < m; ++v) {
        const int deg = parent.degree(v);
        for (int d = deg + 2; d <= m; ++d) below[d] |= bit(v);
    }

    std::set<std::string> siblings;
    const Mask all = low_bits(m);
    for (Mask x = 0; x <= all; ++x) {
        const int d = std::popcount(x);
        if (d < need) continue;
        // The new vertex must have minimum degree in the child.
        if (below[d]) continue;
        bool ok = true;
        for (int v = 0; v < m && ok; ++v) {
            if (parent.degree(v) == d - 1 && !(x & bit(v))) ok = false;
        }
        if (!ok) continue;
        const int edges = parent_edges + d;
        if (edges > spec.max_edges || edges + future < spec.min_edges) continue;

        Graph child(order);
        for (auto [u, v] : parent.edges()) child.add_edge(u, v);
        for (int v : VertexSet(x)) child.add_edge(v, m);

        if (last) {
            if (spec.connected && !is_connected(child)) continue;
            if (spec.accept && !spec.accept(child)) continue;
        } else if (spec.two_connected && order == spec.n - 1 && !is_connected(child)) {
            continue;
        }

        CanonicalLabeling lab = canonical_labeling(child);
        int chosen = -1;
        for (int i = order - 1; i >= 0; --i) {
            if (child.degree(lab.order[i]) == d) {
                chosen = lab.order[i];
                break;
            }
        }
        std::vector<int> rep = orbit_representatives(order, lab.generators);
        if (rep[chosen] != rep[m]) continue;
        std::string form = to_graph6(lab.graph);
        if (!siblings.insert(form).second) continue;
        out.push_back(GeneratedGraph{edges, std::move(form)});
        if (x == all) break;
    }
}

std::vector<GeneratedGraph> seed(const GenerationSpec& spec) {
    if (spec.n < 0 || spec.n > kMaxVertices) throw CapacityError("generation order out of range");
    std::vector<GeneratedGraph> level;
    if (spec.n == 0) return level;
    level.push_back(GeneratedGraph{0, to_graph6(Graph(1))});
    return level;
}

void finish(const GenerationSpec& spec, std::vector<GeneratedGraph>& level) {
    if (spec.n == 1) {
        Graph g(1);
        bool keep = spec.min_degree == 0 && spec.min_edges <= 0 &&
                    (!spec.accept || spec.accept(g));
        if (!keep) level.clear();
    }
    std::sort(level.begin(), level.end());
}

} // namespace

std::vector<GeneratedGraph> generate_graphs_serial(const GenerationSpec& spec) {
    std::vector<GeneratedGraph> level = seed(spec);
    for (int m = 1; m < spec.n; ++m) {
        std::vector<GeneratedGraph> next;
        for (const GeneratedGraph& p : level) expand_parent(from_graph6(p.graph6), spec, next);
        level = std::move(next);
    }
    finish(spec, level);
    return level;
}

std::vector<GeneratedGraph> generate_graphs(const GenerationSpec& spec, int jobs) {
#ifndef BEI_HAVE_OPENMP
    jobs = 1;
#endif
    if (jobs <= 1) return generate_graphs_serial(spec);
    std::vector<GeneratedGraph> level = seed(spec);
    for (int m = 1; m < spec.n; ++m) {
        const long count = static_cast<long>(level.size());
        std::vector<std::vector<GeneratedGraph>> children(level.size());
        std::exception_ptr failure;
#ifdef BEI_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 16) num_threads(jobs)
#endif
        for (long i = 0; i < count; ++i) {
            try {
                expand_parent(from_graph6(level[i].graph6), spec, children[i]);
            } catch (...) {
#ifdef BEI_HAVE_OPENMP
#pragma omp critical
#endif
                failure = std::current_exception();
            }
        }
        if (failure) std::rethrow_exception(failure);
        std::vector<GeneratedGraph> next;
        for (auto& c : children) {
            next.insert(next.end(), std::make_move_iterator(c.begin()), std::make_move_iterator(c.end()));
        }
        level = std::move(next);
    }
    finish(spec, level);
    return level;
}

std::vector<GeneratedGraph> generate_blocks(int n, const BlockFilterConfig& cfg, int jobs) {
    cfg.validate();
    if (n > kMaxGeneratedOrder) {
        throw CapacityError("internal block generation supports n <= " +
                            std::to_string(kMaxGeneratedOrder) + "; ingest larger blocks as graph6");
    }
    BlockFilterConfig sized = cfg;
    sized.n = n;
    EdgeBounds range = sized.edge_range();

    GenerationSpec spec;
    spec.n = n;
    spec.min_degree = cfg.forbid_low_degree ? 3 : (cfg.require_block && n >= 3 ? 2 : 0);
    spec.two_connected = cfg.require_block && n >= 3;
    spec.connected = cfg.require_block;
    spec.min_edges = range.min_edges;
    spec.max_edges = range.max_edges;
    spec.accept = [sized](const Graph& g) { return passes_block_filters(g, sized).pass; };
    return generate_graphs(spec, jobs);
}

std::vector<GeneratedGraph> generate_connected_graphs(int n, int jobs) {
    GenerationSpec spec;
    spec.n = n;
    spec.min_degree = n >= 2 ? 1 : 0;
    spec.connected = true;
    return generate_graphs(spec, jobs);
}

std::vector<Graph> ingest_graph6(std::istream& in, const BlockFilterConfig& cfg, IngestStats* stats) {
    IngestStats local;
    IngestStats& st = stats ? *stats : local;
    DedupStore seen;
    std::vector<Graph> out;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        ++st.lines;
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        Graph g = from_graph6(line, number);
        ++st.decoded;
        BlockFilterConfig sized = cfg;
        sized.n = g.order();
        if (!passes_block_filters(g, sized).pass) {
            ++st.rejected;
            continue;
        }
        if (!seen.insert(canonical_form(g))) {
            ++st.duplicates;
            continue;
        }
        out.push_back(g);
    }
    return out;
}

} // namespace bei
