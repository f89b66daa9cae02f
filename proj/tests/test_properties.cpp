#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

#include "bei/properties.hpp"

using namespace bei;

namespace {

// literal recursion, no cache, straight from the definition
bool oracle_strong(const Graph& g) {
    const int n = g.order();
    bool all_complete = true;
    // components are cliques iff no induced P3
    for (int v = 0; v < n && all_complete; ++v) {
        for (int a = 0; a < n && all_complete; ++a) {
            for (int b = a + 1; b < n; ++b) {
                if (a != v && b != v && g.has_edge(v, a) && g.has_edge(v, b) && !g.has_edge(a, b)) {
                    all_complete = false;
                    break;
                }
            }
        }
    }
    if (all_complete) return true;
    if (!oracle::unmixed(g)) return false;
    for (int v = 0; v < n; ++v) {
        if (!oracle::is_articulation(g, v)) continue;
        Graph gv = g;
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                if (g.has_edge(v, a) && g.has_edge(v, b)) gv.add_edge(a, b);
            }
        }
        if (oracle_strong(g.remove_vertex(v)) && oracle_strong(gv) && oracle_strong(gv.remove_vertex(v))) {
            return true;
        }
    }
    return false;
}

VertexSet vs(const std::vector<int>& xs) {
    VertexSet s;
    for (int x : xs) s.insert(x);
    return s;
}

VertexSet one(std::initializer_list<int> xs) { return VertexSet(oracle::mask1(xs)); }

} // namespace

TEST_CASE("unmixed and accessible agree with the definitions") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 600; ++t) {
        int n = 1 + static_cast<int>(rng() % 9);
        Graph g = oracle::random_graph(n, 0.3 + 0.4 * static_cast<double>(rng() % 10) / 10.0, rng);
        AccessibleVerdict a = is_accessible(g);
        REQUIRE(a.unmixed.unmixed == oracle::unmixed(g));
        REQUIRE(a.accessible == oracle::accessible(g));
        if (a.unmixed.unmixed && !a.accessible) {
            REQUIRE(a.stuck);
            CHECK(oracle::cut_set(g, a.stuck->bits()));
        }
    }
}

TEST_CASE("good cut vertices: both methods and the oracle agree") {
    std::mt19937_64 rng(43);
    int compared = 0;
    for (int t = 0; t < 4000 && compared < 300; ++t) {
        int n = 3 + static_cast<int>(rng() % 8);
        Graph g = oracle::random_graph(n, 0.35, rng);
        if (!is_connected(g)) continue;
        VertexSet direct = good_cut_vertices(g);
        CHECK(direct == vs(oracle::good_cut_vertices(g)));
        if (!oracle::unmixed(g)) continue;
        ++compared;
        CHECK(good_cut_vertices_by_neighbourhood(g) == direct);
    }
    CHECK(compared >= 100);
}

TEST_CASE("strong unmixedness: memo, no memo, three-graph definition and oracle agree") {
    std::mt19937_64 rng(47);
    StrongUnmixedMemo memo;
    for (int t = 0; t < 300; ++t) {
        int n = 2 + static_cast<int>(rng() % 6);
        Graph g = oracle::random_graph(n, 0.5, rng);
        bool expected = oracle_strong(g);
        CHECK(is_strongly_unmixed(g, nullptr).strongly_unmixed == expected);
        CHECK(is_strongly_unmixed(g, &memo).strongly_unmixed == expected);
        CHECK(is_strongly_unmixed_by_definition(g) == expected);
    }
}

TEST_CASE("memo budget is enforced") {
    StrongUnmixedMemo memo(1);
    memo.store("a", true);
    CHECK_THROWS_AS(memo.store("b", false), BudgetExceeded);
    CHECK(memo.lookup("a") == std::optional<bool>(true));
}

TEST_CASE("implication report on random graphs") {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 200; ++t) {
        Graph g = oracle::random_graph(2 + static_cast<int>(rng() % 8), 0.45, rng);
        PropertyReport r = implication_report(g);
        CHECK((!r.strongly_unmixed || r.accessible));
        CHECK((!r.accessible || r.unmixed));
        CHECK(r.counterexample_candidate == (r.accessible && !r.strongly_unmixed));
    }
}

TEST_CASE("fig2: unmixed, not accessible, stuck set {3,4,6,7}") {
    Graph g = fixture("fig2.edges");
    AccessibleVerdict a = is_accessible(g);
    CHECK(a.unmixed.unmixed);
    CHECK_FALSE(a.accessible);
    REQUIRE(a.stuck);
    CHECK(*a.stuck == one({3, 4, 6, 7}));
    for (int drop : {3, 4, 6, 7}) CHECK_FALSE(is_cut_set(g, one({3, 4, 6, 7}) - one({drop})));
}

TEST_CASE("fig1: accessible with good cut vertex 1 only") {
    Graph g = fixture("fig1.edges");
    CHECK(is_accessible(g).accessible);
    CHECK(cut_vertices(g) == one({1, 4, 8}));
    CHECK(good_cut_vertices(g) == one({1}));
    CHECK(good_cut_vertices_by_neighbourhood(g) == one({1}));
}

TEST_CASE("fig3: accessible, 1 is a good cut vertex, strongly unmixed") {
    Graph g = fixture("fig3.edges");
    PropertyReport r = implication_report(g);
    CHECK(r.accessible);
    CHECK(r.good_cut_vertices.contains(0));
    CHECK(r.strongly_unmixed);
    CHECK(is_strongly_unmixed_by_definition(g));
}
