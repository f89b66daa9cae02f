#include "bei/search.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>

#include "bei/canon.hpp"
#include "bei/graph_io.hpp"

#ifdef BEI_HAVE_OPENMP
#include <omp.h>
#endif

namespace bei {

namespace {

constexpr SearchFilter kAllFilters[kSearchFilterCount] = {
    SearchFilter::line2_free,  SearchFilter::line2_degree,     SearchFilter::edge_bounds,
    SearchFilter::line5,       SearchFilter::line6,            SearchFilter::line8,
    SearchFilter::line10_cover, SearchFilter::line10_connected, SearchFilter::line10_kT,
    SearchFilter::line12,
};

struct BlockResult {
    SearchStats stats;
    std::vector<Survivor> survivors;
    std::vector<std::string> unmixed_forms;
};

bool in_shard(const SearchConfig& cfg, std::size_t index) {
    return static_cast<int>(index % static_cast<std::size_t>(cfg.shards)) == cfg.shard_index;
}

// graph6 lines; a full Graph is 512 bytes, too large to hold millions of them.
std::vector<std::string> block_stream(const SearchConfig& cfg, SearchStats& stats) {
    BlockFilterConfig bf = cfg.block_filter();
    std::vector<std::string> all;
    if (cfg.blocks) {
        for (const Graph& b : *cfg.blocks) {
            if (b.order() != cfg.n) {
                ++stats.rejections["wrong order"];
                continue;
            }
            FilterVerdict v = passes_block_filters(b, bf);
            if (!v.pass) {
                ++stats.rejections["line2: " + v.reason];
                continue;
            }
            all.push_back(to_graph6(b));
        }
    } else {
        for (GeneratedGraph& g : generate_blocks(cfg.n, bf, cfg.jobs)) all.push_back(std::move(g.graph6));
    }
    std::vector<std::string> mine;
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (in_shard(cfg, i)) mine.push_back(std::move(all[i]));
    }
    return mine;
}

BlockResult process_block(const Graph& b, const SearchConfig& cfg, StrongUnmixedMemo& memo) {
    BlockResult out;
    SearchStats& st = out.stats;
    st.n = cfg.n;
    st.k = cfg.k;
    st.blocks_seen = 1;
    const int n = b.order();
    const int k = cfg.k;

    if (cfg.enabled(SearchFilter::edge_bounds) && k >= 4 && k <= n - 3) {
        EdgeBounds eb = edge_bounds(n, k);
        const int e = b.edge_count();
        if (e < eb.min_edges || e > eb.max_edges) {
            ++st.rejections["edge bounds"];
            return out;
        }
    }

    std::vector<CutSetRecord> ktable = cut_sets_with_k(b);
    if (cfg.enabled(SearchFilter::line5)) {
        for (const CutSetRecord& t : ktable) {
            if (*t.k_value < 1 || *t.k_value > k) {
                ++st.rejections["line5"];
                return out;
            }
        }
    }
    st.blocks_passing_line5 = 1;

    std::vector<int> pool;
    for (int v = 0; v < n; ++v) {
        if (!cfg.enabled(SearchFilter::line6) || b.degree(v) <= (n + k) / 2 - 2) pool.push_back(v);
    }
    const int p = static_cast<int>(pool.size());
    if (p < k) return out;

    std::set<std::string> seen;
    std::vector<std::pair<std::string, VertexSet>> kept;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        VertexSet s;
        for (int i : idx) s.insert(pool[i]);
        ++st.candidates_enumerated;
        CandidateVerdict cv = candidate_passes(b, s, k, ktable, cfg.disabled);
        if (!cv.pass) {
            ++st.rejections[cv.reason];
        } else {
            ++st.candidates_passing_lines8_12;
            BlockWithWhiskers bw = add_whiskers(b, s);
            std::string form = canonical_form(bw.full).bytes;
            if (seen.insert(form).second) {
                kept.emplace_back(std::move(form), s);
            } else {
                ++st.rejections["isomorphic duplicate"];
            }
        }
        // next k-subset of the pool in lexicographic order
        int i = k - 1;
        while (i >= 0 && idx[i] == p - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }

    std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& c) { return a.first < c.first; });
    for (auto& [form, s] : kept) {
        ++st.candidates_surviving_lines8_12;
        BlockWithWhiskers bw = add_whiskers(b, s);
        AccessibleVerdict acc = is_accessible(bw.full);
        if (!acc.unmixed.unmixed) continue;
        ++st.unmixed_candidates;
        out.unmixed_forms.push_back(form);
        if (!acc.accessible) continue;
        ++st.accessible_candidates;
        PropertyReport report = implication_report(bw.full, PropertySelection::all(), &memo);
        if (!report.unmixed) throw std::logic_error("survivor is not unmixed: " + report.graph6);
        if (report.good_cut_vertices.empty()) ++st.survivors_without_good_cut_vertex;
        out.survivors.push_back(Survivor{std::move(bw), form, std::move(report)});
    }
    return out;
}

BlockResult guarded(const std::string& line, const SearchConfig& cfg, StrongUnmixedMemo& memo) {
    try {
        return process_block(from_graph6(line), cfg, memo);
    } catch (const CapacityError& e) {
        throw CapacityError(std::string(e.what()) + " (block " + line + ")");
    }
}

SearchResult reduce(const SearchConfig& cfg, SearchStats head, std::vector<BlockResult>& parts) {
    SearchResult r;
    r.stats = std::move(head);
    r.stats.n = cfg.n;
    r.stats.k = cfg.k;
    for (BlockResult& p : parts) {
        r.stats.merge(p.stats);
        for (Survivor& s : p.survivors) r.survivors.push_back(std::move(s));
        for (std::string& f : p.unmixed_forms) r.unmixed_forms.push_back(std::move(f));
    }
    std::sort(r.survivors.begin(), r.survivors.end(),
              [](const Survivor& a, const Survivor& b) { return a.canonical_graph6 < b.canonical_graph6; });
    std::sort(r.unmixed_forms.begin(), r.unmixed_forms.end());
    return r;
}

} // namespace

std::string filter_name(SearchFilter f) {
    switch (f) {
    case SearchFilter::line2_free: return "line2-free";
    case SearchFilter::line2_degree: return "line2-degree";
    case SearchFilter::edge_bounds: return "edge-bounds";
    case SearchFilter::line5: return "line5";
    case SearchFilter::line6: return "line6";
    case SearchFilter::line8: return "line8";
    case SearchFilter::line10_cover: return "line10-cover";
    case SearchFilter::line10_connected: return "line10-connected";
    case SearchFilter::line10_kT: return "line10-kT";
    case SearchFilter::line12: return "line12";
    }
    return "?";
}

std::set<SearchFilter> parse_filter_names(const std::vector<std::string>& names) {
    std::set<SearchFilter> out;
    for (std::string name : names) {
        std::replace(name.begin(), name.end(), '_', '-');
        if (name == "all") {
            out.insert(std::begin(kAllFilters), std::end(kAllFilters));
            continue;
        }
        bool found = false;
        for (SearchFilter f : kAllFilters) {
            if (filter_name(f) == name) {
                out.insert(f);
                found = true;
            }
        }
        if (!found) throw std::invalid_argument("unknown filter '" + name + "'");
    }
    return out;
}

BlockFilterConfig SearchConfig::block_filter() const {
    BlockFilterConfig bf = BlockFilterConfig::structural(n);
    bf.forbid_free_vertices = enabled(SearchFilter::line2_free);
    bf.forbid_low_degree = enabled(SearchFilter::line2_degree);
    bf.edge_cap = enabled(SearchFilter::edge_bounds) ? edge_cap : EdgeCap::none;
    bf.min_edges = min_edges;
    bf.max_edges = max_edges;
    return bf;
}

void SearchConfig::validate() const {
    if (n < 1 || (n > kMaxGeneratedOrder && !blocks)) {
        throw std::invalid_argument("n must be in [1, " + std::to_string(kMaxGeneratedOrder) +
                                    "] for internal generation");
    }
    if (n + k > kMaxVertices) throw CapacityError("n + k exceeds 64 vertices");
    if (!filter_free()) {
        if (k < 4 || k > n - 3) {
            throw std::invalid_argument("filtered search needs 4 <= k <= n-3, got n=" +
                                        std::to_string(n) + " k=" + std::to_string(k));
        }
    }
    if (k < 1 || k > n) throw std::invalid_argument("k must be in [1, n]");
    if (shards < 1) throw std::invalid_argument("shards must be positive");
    if (shard_index < 0 || shard_index >= shards) {
        throw std::invalid_argument("shard index " + std::to_string(shard_index) + " out of range [0, " +
                                    std::to_string(shards) + ")");
    }
    if (jobs < 1) throw std::invalid_argument("jobs must be positive");
}

void SearchStats::merge(const SearchStats& o) {
    if (o.n != n || o.k != k) throw std::invalid_argument("merging stats of different (n, k)");
    blocks_seen += o.blocks_seen;
    blocks_passing_line5 += o.blocks_passing_line5;
    candidates_enumerated += o.candidates_enumerated;
    candidates_passing_lines8_12 += o.candidates_passing_lines8_12;
    candidates_surviving_lines8_12 += o.candidates_surviving_lines8_12;
    unmixed_candidates += o.unmixed_candidates;
    accessible_candidates += o.accessible_candidates;
    survivors_without_good_cut_vertex += o.survivors_without_good_cut_vertex;
    for (const auto& [name, count] : o.rejections) rejections[name] += count;
}

CandidateVerdict candidate_passes(const Graph& b, VertexSet s, int k,
                                  const std::vector<CutSetRecord>& ktable,
                                  const std::set<SearchFilter>& disabled) {
    auto on = [&](SearchFilter f) { return !disabled.count(f); };
    const int n = b.order();
    if (on(SearchFilter::line8)) {
        for (int v : s) {
            const int r = std::popcount((b.row(v) | bit(v)) & s.bits());
            if (b.degree(v) > (n + r) / 2 - 2) return {false, "line8: neighbourhood bound"};
        }
    }
    if (on(SearchFilter::line10_cover)) {
        Mask covered = 0;
        for (int v : s) covered |= b.row(v);
        if (covered != low_bits(n)) return {false, "line10: N_B(S) != V(B)"};
    }
    if (on(SearchFilter::line10_connected) && !is_connected(b.induced(b.vertices() - s))) {
        return {false, "line10: B \\ S disconnected"};
    }
    if (on(SearchFilter::line10_kT)) {
        for (const CutSetRecord& t : ktable) {
            if ((t.set & s).size() != *t.k_value) return {false, "line10: |S & T| != k_T"};
        }
    }
    if (on(SearchFilter::line12)) {
        Graph h = b.induced(s);
        if (k == 4 && is_block(h)) return {false, "line12: B[S] is a block"};
        if (k != 4 && is_complete(h)) return {false, "line12: B[S] is complete"};
    }
    return {true, ""};
}

SearchResult run_search_serial(const SearchConfig& cfg) {
    cfg.validate();
    SearchStats head;
    head.n = cfg.n;
    head.k = cfg.k;
    SearchConfig gen = cfg;
    gen.jobs = 1;
    std::vector<std::string> blocks = block_stream(gen, head);
    StrongUnmixedMemo memo;
    std::vector<BlockResult> parts;
    parts.reserve(blocks.size());
    for (const std::string& b : blocks) parts.push_back(guarded(b, cfg, memo));
    return reduce(cfg, std::move(head), parts);
}

SearchResult run_search(const SearchConfig& cfg) {
    cfg.validate();
#ifndef BEI_HAVE_OPENMP
    return run_search_serial(cfg);
#else
    if (cfg.jobs <= 1) return run_search_serial(cfg);
    SearchStats head;
    head.n = cfg.n;
    head.k = cfg.k;
    std::vector<std::string> blocks = block_stream(cfg, head);
    StrongUnmixedMemo memo;
    std::vector<BlockResult> parts(blocks.size());
    std::exception_ptr failure;
    const long count = static_cast<long>(blocks.size());
#pragma omp parallel for schedule(dynamic, 8) num_threads(cfg.jobs)
    for (long i = 0; i < count; ++i) {
        try {
            parts[i] = guarded(blocks[i], cfg, memo);
        } catch (...) {
#pragma omp critical
            failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return reduce(cfg, std::move(head), parts);
#endif
}

SearchResult merge_results(const std::vector<SearchResult>& parts) {
    if (parts.empty()) return {};
    SearchResult r;
    r.stats.n = parts.front().stats.n;
    r.stats.k = parts.front().stats.k;
    for (const SearchResult& p : parts) {
        r.stats.merge(p.stats);
        r.survivors.insert(r.survivors.end(), p.survivors.begin(), p.survivors.end());
        r.unmixed_forms.insert(r.unmixed_forms.end(), p.unmixed_forms.begin(), p.unmixed_forms.end());
    }
    std::sort(r.survivors.begin(), r.survivors.end(),
              [](const Survivor& a, const Survivor& b) { return a.canonical_graph6 < b.canonical_graph6; });
    std::sort(r.unmixed_forms.begin(), r.unmixed_forms.end());
    return r;
}

std::vector<SearchConfig> shard_plan(const SearchConfig& cfg, int shards) {
    if (shards < 1) throw std::invalid_argument("shards must be positive");
    std::vector<SearchConfig> out;
    for (int i = 0; i < shards; ++i) {
        SearchConfig c = cfg;
        c.shards = shards;
        c.shard_index = i;
        out.push_back(std::move(c));
    }
    return out;
}

std::string condition_name(ScreenCondition c) {
    switch (c) {
    case ScreenCondition::free_vertex: return "free vertex";
    case ScreenCondition::low_degree: return "degree <= 2";
    case ScreenCondition::few_whiskers: return "k <= 3";
    case ScreenCondition::neighbourhood_bound: return "neighbourhood bound";
    case ScreenCondition::four_whiskers_block: return "k = 4, cut vertices induce a block";
    case ScreenCondition::many_whiskers: return "k >= n-2";
    case ScreenCondition::none: return "none";
    }
    return "?";
}

ScreenCondition screen_condition(const BlockWithWhiskers& bw) {
    const Graph& b = bw.base;
    const int n = b.order();
    const int k = bw.whisker_count();
    if (!free_vertices(b).empty()) return ScreenCondition::free_vertex;
    if (n > 0 && b.min_degree() <= 2) return ScreenCondition::low_degree;
    if (k <= 3) return ScreenCondition::few_whiskers;
    for (int v : bw.whiskered) {
        const int r = std::popcount((b.row(v) | bit(v)) & bw.whiskered.bits());
        if (b.degree(v) >= (n + r) / 2 - 1) return ScreenCondition::neighbourhood_bound;
    }
    if (k == 4 && is_block(b.induced(bw.whiskered))) return ScreenCondition::four_whiskers_block;
    if (k >= n - 2) return ScreenCondition::many_whiskers;
    return ScreenCondition::none;
}

} // namespace bei
