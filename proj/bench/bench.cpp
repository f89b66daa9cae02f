// Serial reference vs OpenMP kernels: block generation and the filtered search.
// usage: bei_bench [n] [k] [jobs]

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "bei/blockgen.hpp"
#include "bei/search.hpp"

namespace {

template <class F>
double seconds(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::atoi(argv[1]) : 8;
    const int k = argc > 2 ? std::atoi(argv[2]) : 4;
    const int jobs = argc > 3 ? std::atoi(argv[3]) : 4;

    bei::BlockFilterConfig cfg = bei::BlockFilterConfig::structural(n);
    bei::GenerationSpec spec;
    spec.n = n;
    spec.min_degree = 3;
    spec.two_connected = true;
    spec.connected = true;
    spec.min_edges = cfg.edge_range().min_edges;
    spec.max_edges = cfg.edge_range().max_edges;
    spec.accept = [&](const bei::Graph& g) { return bei::passes_block_filters(g, cfg).pass; };

    std::size_t a = 0, b = 0;
    double gs = seconds([&] { a = bei::generate_graphs_serial(spec).size(); });
    double gp = seconds([&] { b = bei::generate_graphs(spec, jobs).size(); });
    std::cout << "generate n=" << n << "  serial " << gs << " s (" << a << ")  jobs=" << jobs << " " << gp
              << " s (" << b << ")\n";

    bei::SearchConfig sc;
    sc.n = n;
    sc.k = k;
    bei::SearchResult rs, rp;
    double ss = seconds([&] { rs = bei::run_search_serial(sc); });
    sc.jobs = jobs;
    double sp = seconds([&] { rp = bei::run_search(sc); });
    std::cout << "search n=" << n << " k=" << k << "  serial " << ss << " s  jobs=" << jobs << " " << sp
              << " s  identical=" << (rs.stats == rp.stats ? "yes" : "no") << '\n';
    return a == b && rs.stats == rp.stats ? 0 : 1;
}
