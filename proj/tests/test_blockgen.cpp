#include <cmath>
#include <set>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"

#include "bei/blockgen.hpp"
#include "bei/canon.hpp"
#include "bei/graph_io.hpp"

using namespace bei;

namespace {

bool oracle_block(const Graph& g) {
    const int n = g.order();
    if (n <= 2) return oracle::components(g, 0) == 1 && g.edge_count() == n * (n - 1) / 2;
    if (oracle::components(g, 0) != 1) return false;
    for (int v = 0; v < n; ++v) {
        if (oracle::is_articulation(g, v)) return false;
    }
    return true;
}

bool oracle_free(const Graph& g, int v) {
    for (int a = 0; a < g.order(); ++a) {
        for (int b = a + 1; b < g.order(); ++b) {
            if (g.has_edge(v, a) && g.has_edge(v, b) && !g.has_edge(a, b)) return false;
        }
    }
    return true;
}

std::set<std::string> forms(const std::vector<GeneratedGraph>& gs) {
    std::set<std::string> out;
    for (const auto& g : gs) out.insert(g.graph6);
    return out;
}

} // namespace

TEST_CASE("generated blocks equal the labelled-graph oracle (n <= 6)") {
    for (int n = 3; n <= 6; ++n) {
        std::set<std::string> all, filtered;
        const int cap = (n - 1) * (n - 2) / 2;
        oracle::for_each_labelled_graph(n, [&](const Graph& g) {
            if (!oracle_block(g)) return;
            std::string f = canonical_form(g).bytes;
            all.insert(f);
            bool ok = g.edge_count() <= cap;
            for (int v = 0; v < n && ok; ++v) ok = g.degree(v) >= 3 && !oracle_free(g, v);
            if (ok) filtered.insert(f);
        });
        CAPTURE(n);
        CHECK(forms(generate_blocks(n, BlockFilterConfig::blocks_only(n))) == all);
        CHECK(forms(generate_blocks(n, BlockFilterConfig::structural(n))) == filtered);
    }
}

TEST_CASE("block and connected-graph counts") {
    const int blocks[] = {0, 0, 0, 1, 3, 10, 56, 468};
    const int connected[] = {0, 1, 1, 2, 6, 21, 112, 853};
    for (int n = 3; n <= 7; ++n) {
        CHECK(generate_blocks(n, BlockFilterConfig::blocks_only(n)).size() == static_cast<std::size_t>(blocks[n]));
    }
    for (int n = 1; n <= 7; ++n) {
        CHECK(generate_connected_graphs(n).size() == static_cast<std::size_t>(connected[n]));
    }
}

TEST_CASE("generated graphs are pairwise non-isomorphic and canonical") {
    auto gs = generate_connected_graphs(6);
    std::set<std::string> seen;
    for (const auto& g : gs) {
        Graph h = from_graph6(g.graph6);
        CHECK(canonical_form(h).bytes == g.graph6);
        CHECK(h.edge_count() == g.edges);
        CHECK(seen.insert(g.graph6).second);
    }
    CHECK(std::is_sorted(gs.begin(), gs.end()));
}

TEST_CASE("serial and parallel generation are identical") {
    for (int n = 5; n <= 8; ++n) {
        GenerationSpec spec;
        spec.n = n;
        spec.connected = true;
        CHECK(generate_graphs(spec, 4) == generate_graphs_serial(spec));
    }
    CHECK(generate_blocks(8, BlockFilterConfig::structural(8), 1) ==
          generate_blocks(8, BlockFilterConfig::structural(8), 3));
}

TEST_CASE("edge bounds match the real-valued formula") {
    for (int n = 7; n <= 40; ++n) {
        for (int k = 4; k <= n - 3; ++k) {
            EdgeBounds eb = edge_bounds(n, k);
            CHECK(eb.min_edges == static_cast<int>(std::ceil(1.5 * n)));
            double hi = (n - 1.0) * (n - 1.0) / 2.0 - (k / 2.0) * (n - std::floor((n + k) / 2.0));
            CHECK(eb.max_edges == static_cast<int>(std::floor(hi + 1e-9)));
            // degree-sum form: k whiskered vertices at the line-6 cap, one vertex of degree
            // n-1, the other n-k-1 at n-2
            const int f = (n + k) / 2;
            CHECK(eb.max_edges == (k * (f - 2) + (n - 1) + (n - 2) * (n - k - 1)) / 2);
            CHECK(eb.max_edges <= (n - 1) * (n - 2) / 2);
            CHECK(eb.max_edges <= max_edge_bound(n));
        }
    }
    CHECK_THROWS(edge_bounds(8, 3));
    CHECK_THROWS(edge_bounds(8, 6));
}

TEST_CASE("(9,5) edge range") {
    EdgeBounds eb = edge_bounds(9, 5);
    CHECK(eb.min_edges == 14);
    CHECK(eb.max_edges == 27);
}

TEST_CASE("block filters") {
    auto cfg = BlockFilterConfig::structural(5);
    CHECK_FALSE(passes_block_filters(Graph::cycle(5), cfg).pass);
    CHECK_FALSE(passes_block_filters(Graph::path(5), cfg).pass);
    CHECK_FALSE(passes_block_filters(Graph::complete(5), cfg).pass);
    CHECK(passes_block_filters(Graph::cycle(5), BlockFilterConfig::blocks_only(5)).pass);
    CHECK(passes_block_filters(Graph::path(5), BlockFilterConfig::none(5)).pass);
    CHECK(parse_edge_cap("max-over-k") == EdgeCap::max_over_k);
    CHECK_THROWS(parse_edge_cap("bogus"));
}

TEST_CASE("graph6 ingestion filters and drops repeats") {
    // K3, K4 twice, C4, and a path that is not a block
    std::istringstream in("Bw\nC~\nC~\nCr\nBW\n");
    IngestStats st;
    auto out = ingest_graph6(in, BlockFilterConfig::blocks_only(4), &st);
    CHECK(out.size() == 3);
    CHECK(st.lines == 5);
    CHECK(st.duplicates == 1);
    CHECK(st.rejected == 1);
    std::istringstream bad("C~\nC\x7f\n");
    CHECK_THROWS_AS(ingest_graph6(bad, BlockFilterConfig::blocks_only(4)), ParseError);
}
