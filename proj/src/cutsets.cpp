#include "bei/cutsets.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace bei {

namespace {

bool record_less(VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() < b.bits();
}

// Next integer with the same popcount.
std::uint32_t next_same_popcount(std::uint32_t x) {
    std::uint32_t c = x & (~x + 1);
    std::uint32_t r = x + c;
    return (((r ^ x) >> 2) / c) | r;
}

} // namespace

const CutSetRecord* CutSetFamily::find(VertexSet s) const {
    auto it = std::lower_bound(records.begin(), records.end(), s,
                               [](const CutSetRecord& r, VertexSet key) {
                                   return record_less(r.set, key);
                               });
    if (it == records.end() || it->set != s) return nullptr;
    return &*it;
}

bool CutSetFamily::contains(VertexSet s) const { return find(s) != nullptr; }

bool is_cut_set(const Graph& g, VertexSet s) {
    if (s.empty()) return true;
    const int c = component_count(g, s);
    for (int i : s) {
        if (c <= component_count(g, s - VertexSet(bit(i)))) return false;
    }
    return true;
}

bool sweep_cut_sets(const Graph& g,
                    const std::function<bool(VertexSet, int)>& on_cut_set) {
    const std::vector<int> universe = (g.vertices() - free_vertices(g)).to_vector();
    const int u = static_cast<int>(universe.size());
    if (u > kMaxSweepUniverse) {
        throw CapacityError("cut-set sweep over " + std::to_string(u) +
                            " non-free vertices exceeds the 2^" +
                            std::to_string(kMaxSweepUniverse) + " subset budget");
    }
    // comps[x] = c(S) for the subset S of the universe encoded by x.
    std::vector<std::uint8_t> comps(std::size_t{1} << u);
    comps[0] = static_cast<std::uint8_t>(component_count(g, Mask{0}));
    if (!on_cut_set(VertexSet{}, comps[0])) return false;

    const std::uint32_t limit = std::uint32_t{1} << u;
    for (int r = 1; r <= u; ++r) {
        for (std::uint32_t x = (std::uint32_t{1} << r) - 1; x < limit; x = next_same_popcount(x)) {
            Mask s = 0;
            for (std::uint32_t rest = x; rest; rest &= rest - 1) {
                s |= bit(universe[std::countr_zero(rest)]);
            }
            const int c = component_count(g, s);
            comps[x] = static_cast<std::uint8_t>(c);
            bool cut = true;
            for (std::uint32_t rest = x; rest; rest &= rest - 1) {
                if (c <= comps[x & ~(rest & (~rest + 1))]) {
                    cut = false;
                    break;
                }
            }
            if (cut && !on_cut_set(VertexSet(s), c)) return false;
            if (r == u) break;
        }
    }
    return true;
}

CutSetFamily enumerate_cut_sets(const Graph& g) {
    CutSetFamily family;
    sweep_cut_sets(g, [&](VertexSet s, int c) {
        family.records.push_back(CutSetRecord{s, c, std::nullopt});
        return true;
    });
    return family;
}

CutSetFamily expand_cut_sets(const Graph& g) {
    CutSetFamily family;
    std::vector<VertexSet> level{VertexSet{}};
    family.records.push_back(CutSetRecord{VertexSet{}, component_count(g, Mask{0}), std::nullopt});
    while (!level.empty()) {
        std::set<Mask> next;
        for (VertexSet s : level) {
            const int c = component_count(g, s);
            for (int v : g.vertices() - s) {
                Mask t = s.bits() | bit(v);
                if (!next.count(t) && component_count(g, t) > c && is_cut_set(g, VertexSet(t))) next.insert(t);
            }
        }
        level.clear();
        for (Mask t : next) {
            level.emplace_back(t);
            family.records.push_back(CutSetRecord{VertexSet(t), component_count(g, t), std::nullopt});
        }
    }
    std::sort(family.records.begin(), family.records.end(),
              [](const CutSetRecord& a, const CutSetRecord& b) { return record_less(a.set, b.set); });
    return family;
}

UnmixedScan unmixed_cut_set_scan(const Graph& g) {
    UnmixedScan scan;
    scan.base_components = component_count(g, Mask{0});
    std::vector<CutSetRecord> records;
    const bool clean = sweep_cut_sets(g, [&](VertexSet s, int c) {
        if (c != s.size() + scan.base_components) {
            scan.violation = CutSetRecord{s, c, std::nullopt};
            return false;
        }
        records.push_back(CutSetRecord{s, c, std::nullopt});
        return true;
    });
    scan.unmixed = clean;
    if (clean) scan.family.records = std::move(records);
    return scan;
}

std::vector<CutSetRecord> cut_sets_with_k(const Graph& block) {
    std::vector<CutSetRecord> out;
    sweep_cut_sets(block, [&](VertexSet s, int c) {
        if (!s.empty()) out.push_back(CutSetRecord{s, c, s.size() + 1 - c});
        return true;
    });
    return out;
}

} // namespace bei
