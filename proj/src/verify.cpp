#include "bei/verify.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>

#include "bei/blockgen.hpp"
#include "bei/graph_io.hpp"
#include "bei/properties.hpp"

namespace bei {

OrderCounts VerifySummary::totals() const {
    OrderCounts t;
    for (const auto& [n, c] : by_order) {
        t.graphs += c.graphs;
        t.unmixed += c.unmixed;
        t.accessible += c.accessible;
        t.strongly_unmixed += c.strongly_unmixed;
    }
    return t;
}

VerifySummary verify_graphs(const std::vector<Graph>& graphs, int jobs) {
    std::vector<PropertyReport> reports(graphs.size());
    StrongUnmixedMemo memo(20'000'000);
    std::exception_ptr failure;
    const long count = static_cast<long>(graphs.size());
#ifdef BEI_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 64) num_threads(std::max(1, jobs)) if (jobs > 1)
#endif
    for (long i = 0; i < count; ++i) {
        try {
            reports[i] = implication_report(graphs[i], PropertySelection::all(), &memo);
        } catch (...) {
#ifdef BEI_HAVE_OPENMP
#pragma omp critical
#endif
            failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    VerifySummary out;
    for (const PropertyReport& r : reports) {
        OrderCounts& c = out.by_order[r.vertices];
        ++c.graphs;
        c.unmixed += r.unmixed;
        c.accessible += r.accessible;
        c.strongly_unmixed += r.strongly_unmixed;
        if (r.counterexample_candidate) out.counterexample_candidates.push_back(r.graph6);
    }
    std::sort(out.counterexample_candidates.begin(), out.counterexample_candidates.end());
    return out;
}

VerifySummary verify_connected_graphs(int max_vertices, int jobs) {
    if (max_vertices < 1 || max_vertices > 9) {
        throw CapacityError("internal generation for verify supports 1..9 vertices; stream larger graphs as graph6");
    }
    std::vector<Graph> graphs;
    for (int n = 1; n <= max_vertices; ++n) {
        for (const GeneratedGraph& g : generate_connected_graphs(n, jobs)) graphs.push_back(from_graph6(g.graph6));
    }
    return verify_graphs(graphs, jobs);
}

} // namespace bei
