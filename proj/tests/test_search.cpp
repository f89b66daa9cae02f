#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

#include "bei/canon.hpp"
#include "bei/graph_io.hpp"
#include "bei/search.hpp"

using namespace bei;

namespace {

VertexSet one(std::initializer_list<int> xs) { return VertexSet(oracle::mask1(xs)); }

SearchConfig filter_free(int n, int k) {
    SearchConfig cfg;
    cfg.n = n;
    cfg.k = k;
    cfg.disabled = parse_filter_names({"all"});
    return cfg;
}

SearchConfig filtered(int n, int k) {
    SearchConfig cfg;
    cfg.n = n;
    cfg.k = k;
    return cfg;
}

} // namespace

TEST_CASE("fig3 block with whisker set {1,2,4,7,9} passes lines 8-12") {
    Graph g = fixture("fig3.edges");
    Graph b = g.induced(g.vertices() - one({10, 11, 12, 13, 14}));
    REQUIRE(is_block(b));
    auto table = cut_sets_with_k(b);
    CandidateVerdict v = candidate_passes(b, one({1, 2, 4, 7, 9}), 5, table);
    CHECK(v.pass);
    BlockWithWhiskers bw = add_whiskers(b, one({1, 2, 4, 7, 9}));
    CHECK(canonical_form(bw.full) == canonical_form(g));
    CHECK(screen_condition(bw) == ScreenCondition::none);
}

TEST_CASE("candidate rejections name the failing line") {
    // K_{3,3}: every vertex has degree 3
    Graph b = Graph::from_edges(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    auto table = cut_sets_with_k(b);
    // S = one side: B \ S is three isolated vertices
    CandidateVerdict v = candidate_passes(b, VertexSet::of({0, 1, 2}), 3, table, parse_filter_names({"line8"}));
    CHECK(v.reason == "line10: N_B(S) != V(B)");
    v = candidate_passes(b, VertexSet::of({0, 1, 2}), 3, table, parse_filter_names({"line8", "line10-cover"}));
    CHECK(v.reason == "line10: B \\ S disconnected");
    CHECK(candidate_passes(b, VertexSet::of({0, 1, 2}), 3, table).reason == "line8: neighbourhood bound");
    CHECK(candidate_passes(b, VertexSet::of({0, 1, 2}), 3, table, parse_filter_names({"all"})).pass);
}

TEST_CASE("screen condition order") {
    CHECK(screen_condition(add_whiskers(Graph::complete(4), VertexSet::of({0, 1}))) ==
          ScreenCondition::free_vertex);
    CHECK(screen_condition(add_whiskers(Graph::cycle(5), VertexSet::of({0, 2}))) ==
          ScreenCondition::low_degree);
    Graph k33 = Graph::from_edges(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    CHECK(screen_condition(add_whiskers(k33, VertexSet::of({0, 3}))) == ScreenCondition::few_whiskers);
    // n = 6, k = 4: deg 3 >= floor((6+r)/2) - 1 holds for r <= 3
    CHECK(screen_condition(add_whiskers(k33, VertexSet::of({0, 1, 3, 4}))) ==
          ScreenCondition::neighbourhood_bound);
}

TEST_CASE("filter names parse both spellings") {
    CHECK(parse_filter_names({"line10_kT", "line10-cover"}).size() == 2);
    CHECK(parse_filter_names({"all"}).size() == static_cast<std::size_t>(kSearchFilterCount));
    CHECK_THROWS_AS(parse_filter_names({"line99"}), std::invalid_argument);
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS(filtered(7, 5).validate(), std::invalid_argument);
    CHECK_NOTHROW(filter_free(7, 5).validate());
    SearchConfig bad = filtered(8, 4);
    bad.shards = 2;
    bad.shard_index = 2;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("(7,4): 79 blocks, nothing unmixed, shards add up") {
    SearchResult whole = run_search(filtered(7, 4));
    CHECK(whole.stats.blocks_seen == 79);
    CHECK(whole.stats.unmixed_candidates == 0);
    CHECK(whole.verdict());
    std::vector<SearchResult> parts;
    for (const SearchConfig& c : shard_plan(filtered(7, 4), 4)) parts.push_back(run_search(c));
    SearchResult merged = merge_results(parts);
    CHECK(merged.stats == whole.stats);
}

TEST_CASE("serial and parallel search agree") {
    for (int k : {4, 5}) {
        SearchConfig cfg = filtered(8, k);
        SearchResult a = run_search_serial(cfg);
        cfg.jobs = 4;
        SearchResult b = run_search(cfg);
        CHECK(a.stats == b.stats);
        CHECK(a.unmixed_forms == b.unmixed_forms);
    }
}

TEST_CASE("supplied blocks go through the line-2 filters") {
    SearchConfig cfg = filtered(7, 4);
    cfg.blocks = std::vector<Graph>{Graph::cycle(7), Graph::complete(6)};
    SearchResult r = run_search(cfg);
    CHECK(r.stats.blocks_seen == 0);
    CHECK(r.stats.rejections.at("wrong order") == 1);
}

TEST_CASE("filter-free survivors are pairwise non-isomorphic and match the oracle") {
    for (int n = 4; n <= 6; ++n) {
        for (int k = 1; k <= n; ++k) {
            SearchResult r = run_search(filter_free(n, k));
            // oracle: whisker every k-subset of every block, dedup by brute isomorphism
            std::vector<Graph> acc;
            for (const GeneratedGraph& gg : generate_blocks(n, BlockFilterConfig::blocks_only(n))) {
                Graph b = from_graph6(gg.graph6);
                for (Mask m = 0; m < (Mask{1} << n); ++m) {
                    if (std::popcount(m) != k) continue;
                    Graph full = add_whiskers(b, VertexSet(m)).full;
                    if (!oracle::accessible(full)) continue;
                    bool fresh = true;
                    for (const Graph& h : acc) fresh = fresh && !oracle::isomorphic(h, full);
                    if (fresh) acc.push_back(full);
                }
            }
            CAPTURE(n);
            CAPTURE(k);
            CHECK(r.survivors.size() == acc.size());
            for (std::size_t i = 0; i < r.survivors.size(); ++i) {
                for (std::size_t j = i + 1; j < r.survivors.size(); ++j) {
                    CHECK_FALSE(oracle::isomorphic(r.survivors[i].graph.full, r.survivors[j].graph.full));
                }
            }
            CHECK(r.verdict());
        }
    }
}

TEST_CASE("filters only drop accessible graphs that have a good cut vertex (n = 7, k = 4)") {
    SearchResult free_r = run_search(filter_free(7, 4));
    SearchResult filt = run_search(filtered(7, 4));
    std::set<std::string> kept;
    for (const Survivor& s : filt.survivors) kept.insert(s.canonical_graph6);
    for (const Survivor& s : free_r.survivors) {
        if (kept.count(s.canonical_graph6)) continue;
        CHECK_FALSE(s.report.good_cut_vertices.empty());
    }
    CHECK(free_r.verdict() == filt.verdict());
}
