#include "bei/properties.hpp"

#include <iostream>

#include "bei/canon.hpp"
#include "bei/graph_io.hpp"

namespace bei {

namespace {

// Trial order for the recursion: good cut vertices first, then the remaining cut vertices.
std::vector<int> trial_order(const Graph& g) {
    VertexSet cuts = cut_vertices(g);
    VertexSet good = good_cut_vertices(g);
    std::vector<int> order = good.to_vector();
    for (int v : cuts - good) order.push_back(v);
    return order;
}

bool strong_rec(const Graph& g, StrongUnmixedMemo* memo);

bool branch_succeeds(const Graph& g, int v, StrongUnmixedMemo* memo) {
    return strong_rec(g.remove_vertex(v), memo) &&
           strong_rec(saturate(g, v).remove_vertex(v), memo);
}

bool strong_rec(const Graph& g, StrongUnmixedMemo* memo) {
    if (components_complete(g)) return true;
    std::string key;
    if (memo) {
        key = canonical_form(g).bytes;
        if (auto hit = memo->lookup(key)) return *hit;
    }
    bool result = false;
    if (is_unmixed(g).unmixed) {
        for (int v : trial_order(g)) {
            if (branch_succeeds(g, v, memo)) {
                result = true;
                break;
            }
        }
    }
    if (memo) memo->store(key, result);
    return result;
}

bool definition_rec(const Graph& g, std::unordered_map<std::string, bool>& seen) {
    if (components_complete(g)) return true;
    std::string key = canonical_form(g).bytes;
    if (auto it = seen.find(key); it != seen.end()) return it->second;
    bool result = false;
    if (is_unmixed(g).unmixed) {
        for (int v : cut_vertices(g)) {
            Graph gv = saturate(g, v);
            if (definition_rec(g.remove_vertex(v), seen) && definition_rec(gv, seen) &&
                definition_rec(gv.remove_vertex(v), seen)) {
                result = true;
                break;
            }
        }
    }
    seen.emplace(std::move(key), result);
    return result;
}

} // namespace

UnmixedVerdict is_unmixed(const Graph& g) {
    UnmixedScan scan = unmixed_cut_set_scan(g);
    UnmixedVerdict out;
    out.unmixed = scan.unmixed;
    if (scan.violation) out.witness = scan.violation->set;
    out.family = std::move(scan.family);
    return out;
}

AccessibleVerdict is_accessible(const Graph& g) {
    AccessibleVerdict out;
    out.unmixed = is_unmixed(g);
    if (!out.unmixed.unmixed) return out;
    for (const CutSetRecord& rec : out.unmixed.family.records) {
        if (rec.set.empty()) continue;
        bool removable = false;
        for (int s : rec.set) {
            if (out.unmixed.family.contains(rec.set - VertexSet(bit(s)))) {
                removable = true;
                break;
            }
        }
        if (!removable) {
            out.stuck = rec.set;
            return out;
        }
    }
    out.accessible = true;
    return out;
}

VertexSet good_cut_vertices(const Graph& g) {
    VertexSet good;
    for (int v : cut_vertices(g)) {
        if (is_unmixed(g.remove_vertex(v)).unmixed) good.insert(v);
    }
    return good;
}

VertexSet good_cut_vertices_by_neighbourhood(const Graph& g) {
    if (!is_connected(g) || !is_unmixed(g).unmixed) {
        throw std::invalid_argument("neighbourhood criterion needs a connected graph with J_G unmixed");
    }
    VertexSet good;
    for (int v : cut_vertices(g)) {
        Graph h = g.remove_vertex(v);
        Components parts = count_components(h);
        if (parts.count != 2) {
            std::cerr << "warning: deleting cut vertex " << v + 1 << " of unmixed graph "
                      << to_graph6(g) << " leaves " << parts.count
                      << " components; using the direct test\n";
            if (is_unmixed(h).unmixed) good.insert(v);
            continue;
        }
        Mask nb = 0;
        for (int w : g.neighbors(v)) nb |= bit(w < v ? w : w - 1);
        const Mask n1 = nb & parts.parts[0].bits();
        const Mask n2 = nb & parts.parts[1].bits();
        bool contained = false;
        sweep_cut_sets(h, [&](VertexSet s, int) {
            if ((n1 & ~s.bits()) == 0 || (n2 & ~s.bits()) == 0) {
                contained = true;
                return false;
            }
            return true;
        });
        if (!contained) good.insert(v);
    }
    return good;
}

std::optional<bool> StrongUnmixedMemo::lookup(const std::string& key) const {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(key);
    if (it == cache_.end()) return std::nullopt;
    return it->second;
}

void StrongUnmixedMemo::store(const std::string& key, bool value) {
    std::lock_guard lock(mutex_);
    if (cache_.count(key)) return;
    if (cache_.size() >= budget_) {
        throw BudgetExceeded("strong-unmixedness memo exceeded its budget of " +
                             std::to_string(budget_) + " entries");
    }
    cache_.emplace(key, value);
}

std::size_t StrongUnmixedMemo::size() const {
    std::lock_guard lock(mutex_);
    return cache_.size();
}

StrongVerdict is_strongly_unmixed(const Graph& g, StrongUnmixedMemo* memo) {
    StrongVerdict out;
    out.strongly_unmixed = strong_rec(g, memo);
    if (!out.strongly_unmixed) return out;

    // Replay the saturation branch to report which cut vertices were used.
    Graph current = g;
    std::vector<int> labels(g.order());
    for (int v = 0; v < g.order(); ++v) labels[v] = v;
    while (!components_complete(current)) {
        int chosen = -1;
        for (int v : trial_order(current)) {
            if (branch_succeeds(current, v, memo)) {
                chosen = v;
                break;
            }
        }
        if (chosen < 0) throw std::logic_error("strong-unmixedness trace lost its branch");
        out.trace.push_back(labels[chosen]);
        current = saturate(current, chosen).remove_vertex(chosen);
        labels.erase(labels.begin() + chosen);
    }
    return out;
}

bool is_strongly_unmixed_by_definition(const Graph& g) {
    std::unordered_map<std::string, bool> seen;
    return definition_rec(g, seen);
}

PropertyReport implication_report(const Graph& g, PropertySelection which,
                                  StrongUnmixedMemo* memo) {
    PropertyReport r;
    r.vertices = g.order();
    r.edges = g.edge_count();
    r.graph6 = to_graph6(g);
    r.cut_vertices = cut_vertices(g);
    r.evaluated = which;

    if (which.unmixed || which.accessible) {
        AccessibleVerdict acc = is_accessible(g);
        r.unmixed = acc.unmixed.unmixed;
        r.unmixed_witness = acc.unmixed.witness;
        r.accessible = acc.accessible;
        r.stuck_set = acc.stuck;
    }
    if (which.good_cut_vertices) r.good_cut_vertices = good_cut_vertices(g);
    if (which.strongly_unmixed) {
        StrongUnmixedMemo local;
        StrongVerdict su = is_strongly_unmixed(g, memo ? memo : &local);
        r.strongly_unmixed = su.strongly_unmixed;
        r.strong_trace = std::move(su.trace);
    }

    if (which.accessible && r.accessible && !r.unmixed) {
        throw std::logic_error("accessible graph without unmixed J_G: " + r.graph6);
    }
    if (which.strongly_unmixed && which.accessible) {
        if (r.strongly_unmixed && !r.accessible) {
            throw std::logic_error("strongly unmixed graph that is not accessible: " + r.graph6);
        }
        r.counterexample_candidate = r.accessible && !r.strongly_unmixed;
    }
    return r;
}

} // namespace bei
