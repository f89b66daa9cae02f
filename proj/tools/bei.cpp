// bei: property checks, block generation and the whisker search from the command line.
//
// Exit codes: 0 verified / true, 2 counterexample candidate, 1 operational error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bei/blockgen.hpp"
#include "bei/graph_io.hpp"
#include "bei/properties.hpp"
#include "bei/report_json.hpp"
#include "bei/search.hpp"
#include "bei/verify.hpp"

#ifndef BEI_VERSION
#define BEI_VERSION "0.0.0"
#endif

namespace {

using nlohmann::ordered_json;

constexpr int kExitTrue = 0;
constexpr int kExitError = 1;
constexpr int kExitCounterexample = 2;

int default_jobs() {
    if (const char* env = std::getenv("BEI_JOBS")) {
        int j = std::atoi(env);
        if (j > 0) return j;
    }
    return 1;
}

std::string iso_now() {
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

// FNV-1a, 64 bit.
std::string fnv1a(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

std::string file_hash(const std::string& path) {
    if (path.empty() || path == "-") return "";
    std::ifstream in(path, std::ios::binary);
    if (!in) return "";
    std::ostringstream buf;
    buf << in.rdbuf();
    return fnv1a(buf.str());
}

struct Manifest {
    std::string path;
    ordered_json record;

    void begin(const std::string& command, ordered_json params) {
        record["command"] = command;
        record["parameters"] = std::move(params);
        record["start"] = iso_now();
        record["version"] = BEI_VERSION;
    }
    void finish(ordered_json stats, std::optional<bool> verdict) {
        if (path.empty()) return;
        record["end"] = iso_now();
        record["stats"] = std::move(stats);
        record["verdict"] = verdict ? ordered_json(*verdict) : ordered_json();
        std::ofstream out(path, std::ios::app);
        if (!out) throw std::runtime_error("cannot append manifest " + path);
        out << record.dump() << '\n';
    }
};

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

bei::PropertySelection parse_props(const std::vector<std::string>& names) {
    if (names.empty()) return bei::PropertySelection::all();
    bei::PropertySelection s{false, false, false, false};
    for (const std::string& name : names) {
        if (name == "all") return bei::PropertySelection::all();
        if (name == "unmixed") s.unmixed = true;
        else if (name == "accessible") s.accessible = true;
        else if (name == "strongly-unmixed") s.strongly_unmixed = true;
        else if (name == "good-cut-vertices") s.good_cut_vertices = true;
        else throw CLI::ValidationError("--props", "unknown property '" + name + "'");
    }
    return s;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cut sets, unmixedness and accessibility of binomial edge ideals"};
    app.require_subcommand(1);
    app.set_version_flag("--version", BEI_VERSION);

    Manifest manifest;
    if (const char* env = std::getenv("BEI_MANIFEST")) manifest.path = env;
    app.add_option("--manifest", manifest.path, "append a JSON-lines run record here");

    // check
    auto* check = app.add_subcommand("check", "evaluate properties of graphs (edge list or graph6)");
    std::string check_input = "-";
    std::vector<std::string> check_props;
    check->add_option("input", check_input, "file, or - for stdin")->capture_default_str();
    check->add_option("--props", check_props,
                      "unmixed, accessible, strongly-unmixed, good-cut-vertices, all")
        ->delimiter(',');

    // search
    auto* search = app.add_subcommand("search", "search blocks with whiskers for a counterexample");
    bei::SearchConfig scfg;
    scfg.jobs = default_jobs();
    std::vector<std::string> no_filter;
    std::string stats_out, survivors_out, blocks_in;
    search->add_option("--n", scfg.n, "order of the blocks")->required();
    search->add_option("--k", scfg.k, "number of whiskers")->required();
    search->add_option("--min-edges", scfg.min_edges);
    search->add_option("--max-edges", scfg.max_edges);
    search->add_option("--shards", scfg.shards)->capture_default_str();
    search->add_option("--shard-index", scfg.shard_index)->capture_default_str();
    search->add_option("--jobs", scfg.jobs, "worker threads (default BEI_JOBS or 1)");
    search->add_option("--no-filter", no_filter, "disable a filter; 'all' disables every filter");
    search->add_option("--stats-out", stats_out, "stats JSON path (default stdout)");
    search->add_option("--survivors-out", survivors_out,
                       "graph6 of accessible candidates; a .json sidecar holds their reports");
    search->add_option("--blocks", blocks_in, "graph6 block stream instead of internal generation");
    std::string search_cap = "binomial";
    search->add_option("--edge-cap", search_cap, "block stream cap: binomial, max-over-k or none")
        ->capture_default_str();

    // verify
    auto* verify = app.add_subcommand("verify", "check accessible => strongly unmixed exhaustively");
    int max_vertices = 0;
    std::string verify_input;
    int verify_jobs = default_jobs();
    verify->add_option("--max-vertices", max_vertices, "all connected graphs up to this order");
    verify->add_option("--input", verify_input, "graph6 stream to check instead (- for stdin)");
    verify->add_option("--jobs", verify_jobs);

    // gen-blocks
    auto* gen = app.add_subcommand("gen-blocks", "list blocks on n vertices as graph6");
    int gen_n = 0;
    bool gen_filtered = false;
    std::optional<int> gen_min, gen_max, gen_k;
    std::string gen_out;
    int gen_jobs = default_jobs();
    gen->add_option("--n", gen_n)->required();
    gen->add_flag("--filtered", gen_filtered, "no free vertex, minimum degree 3, |E| <= C(n-1,2)");
    gen->add_option("--min-edges", gen_min);
    gen->add_option("--max-edges", gen_max);
    gen->add_option("--k", gen_k, "also apply the edge bounds for k whiskers");
    gen->add_option("--graph6-out", gen_out, "output path (default stdout)");
    gen->add_option("--jobs", gen_jobs);
    std::string gen_cap = "binomial";
    gen->add_option("--edge-cap", gen_cap, "with --filtered: binomial, max-over-k or none")
        ->capture_default_str();

    // merge-stats
    auto* merge = app.add_subcommand("merge-stats", "sum stats JSON files of shards");
    std::vector<std::string> merge_inputs;
    merge->add_option("inputs", merge_inputs)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*check) {
            bei::PropertySelection which = parse_props(check_props);
            manifest.begin("check", {{"input", check_input}, {"input_hash", file_hash(check_input)}});
            std::vector<bei::Graph> graphs = bei::read_graphs(check_input);
            bei::StrongUnmixedMemo memo;
            bool any_counterexample = false;
            for (const bei::Graph& g : graphs) {
                bei::PropertyReport r = bei::implication_report(g, which, &memo);
                any_counterexample = any_counterexample || r.counterexample_candidate;
                std::cout << bei::to_json(r).dump() << '\n';
            }
            manifest.finish({{"graphs", graphs.size()}}, !any_counterexample);
            return any_counterexample ? kExitCounterexample : kExitTrue;
        }

        if (*search) {
            scfg.disabled = bei::parse_filter_names(no_filter);
            scfg.edge_cap = bei::parse_edge_cap(search_cap);
            ordered_json params{{"n", scfg.n},
                                {"k", scfg.k},
                                {"shards", scfg.shards},
                                {"shard_index", scfg.shard_index},
                                {"jobs", scfg.jobs},
                                {"edge_cap", search_cap}};
            if (scfg.min_edges) params["min_edges"] = *scfg.min_edges;
            if (scfg.max_edges) params["max_edges"] = *scfg.max_edges;
            ordered_json off = ordered_json::array();
            for (bei::SearchFilter f : scfg.disabled) off.push_back(bei::filter_name(f));
            params["disabled_filters"] = off;
            if (!blocks_in.empty()) {
                params["blocks"] = blocks_in;
                params["blocks_hash"] = file_hash(blocks_in);
            }
            manifest.begin("search", params);

            if (!scfg.filter_free() && scfg.n >= 1 && (scfg.k < 4 || scfg.k > scfg.n - 3) && scfg.k >= 1 &&
                scfg.k <= scfg.n) {
                std::string why = scfg.k <= 3
                    ? "k <= 3: an accessible block with at most three whiskers has a good cut vertex"
                    : "k >= n-2: an accessible block with at least n-2 whiskers has a good cut vertex";
                ordered_json j{{"schema", bei::kJsonSchema}, {"n", scfg.n}, {"k", scfg.k},
                               {"dispatched", why}, {"verdict", true}};
                write_text(stats_out, j.dump(2) + "\n");
                std::cerr << "True (" << why << ")\n";
                manifest.finish(j, true);
                return kExitTrue;
            }
            if (!blocks_in.empty()) {
                std::vector<bei::Graph> blocks;
                for (bei::Graph& g : bei::read_graphs(blocks_in)) blocks.push_back(std::move(g));
                scfg.blocks = std::move(blocks);
            }
            bei::SearchResult result = bei::run_search(scfg);
            ordered_json stats = bei::to_json(result.stats);
            write_text(stats_out, stats.dump(2) + "\n");
            if (!survivors_out.empty()) {
                std::ostringstream lines;
                for (const bei::Survivor& s : result.survivors) lines << s.canonical_graph6 << '\n';
                write_text(survivors_out, lines.str());
                write_text(survivors_out + ".json", bei::survivors_json(result).dump(2) + "\n");
            }
            for (const bei::Survivor& s : result.survivors) {
                if (s.report.good_cut_vertices.empty()) {
                    std::cerr << "counterexample candidate: " << s.canonical_graph6 << '\n'
                              << bei::to_edge_list(s.graph.full)
                              << bei::to_json(s.report).dump(2) << '\n';
                }
            }
            std::cerr << (result.verdict() ? "True" : "False") << " (n=" << scfg.n << ", k=" << scfg.k
                      << ", unmixed " << result.stats.unmixed_candidates << ", accessible "
                      << result.stats.accessible_candidates << ")\n";
            manifest.finish(stats, result.verdict());
            return result.verdict() ? kExitTrue : kExitCounterexample;
        }

        if (*verify) {
            if ((max_vertices > 0) == !verify_input.empty()) {
                throw CLI::ValidationError("verify", "give exactly one of --max-vertices and --input");
            }
            manifest.begin("verify", {{"max_vertices", max_vertices},
                                      {"input", verify_input},
                                      {"input_hash", file_hash(verify_input)}});
            bei::VerifySummary summary = verify_input.empty()
                ? bei::verify_connected_graphs(max_vertices, verify_jobs)
                : bei::verify_graphs(bei::read_graphs(verify_input), verify_jobs);
            ordered_json j;
            j["schema"] = bei::kJsonSchema;
            ordered_json orders = ordered_json::array();
            for (const auto& [n, c] : summary.by_order) {
                orders.push_back({{"vertices", n},
                                  {"graphs", c.graphs},
                                  {"unmixed", c.unmixed},
                                  {"accessible", c.accessible},
                                  {"strongly_unmixed", c.strongly_unmixed}});
            }
            j["by_order"] = orders;
            bei::OrderCounts t = summary.totals();
            j["graphs"] = t.graphs;
            j["accessible"] = t.accessible;
            j["strongly_unmixed"] = t.strongly_unmixed;
            j["counterexample_candidates"] = summary.counterexample_candidates;
            j["verdict"] = summary.verdict();
            std::cout << j.dump(2) << '\n';
            manifest.finish(j, summary.verdict());
            return summary.verdict() ? kExitTrue : kExitCounterexample;
        }

        if (*gen) {
            bei::BlockFilterConfig cfg =
                gen_filtered ? bei::BlockFilterConfig::structural(gen_n) : bei::BlockFilterConfig::blocks_only(gen_n);
            if (gen_filtered) cfg.edge_cap = bei::parse_edge_cap(gen_cap);
            cfg.min_edges = gen_min;
            cfg.max_edges = gen_max;
            cfg.edge_bounds_k = gen_k;
            manifest.begin("gen-blocks", {{"n", gen_n}, {"filtered", gen_filtered}});
            std::vector<bei::GeneratedGraph> blocks = bei::generate_blocks(gen_n, cfg, gen_jobs);
            std::string text;
            for (const bei::GeneratedGraph& g : blocks) {
                text += g.graph6;
                text += '\n';
            }
            write_text(gen_out, text);
            manifest.finish({{"blocks", blocks.size()}}, std::nullopt);
            return kExitTrue;
        }

        if (*merge) {
            bei::SearchStats total;
            bool first = true;
            for (const std::string& path : merge_inputs) {
                std::ifstream in(path);
                if (!in) throw std::runtime_error("cannot open " + path);
                bei::SearchStats s = bei::stats_from_json(nlohmann::json::parse(in));
                if (first) {
                    total = s;
                    first = false;
                } else {
                    total.merge(s);
                }
            }
            std::cout << bei::to_json(total).dump(2) << '\n';
            return total.verdict() ? kExitTrue : kExitCounterexample;
        }
    } catch (const bei::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitError;
    } catch (const bei::CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << '\n';
        return kExitError;
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
