#include "bei/graph_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace bei {

namespace {

constexpr int kBias = 63;

std::string trim_line_end(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    return std::string(text);
}

bool only_space(const std::string& s) {
    return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

} // namespace

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kBias));
        out.push_back(static_cast<char>((n & 0x3f) + kBias));
    }
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    return out;
}

Graph from_graph6(std::string_view raw, int line) {
    std::string text = trim_line_end(raw);
    if (text.rfind(">>graph6<<", 0) == 0) text.erase(0, 10);
    if (text.empty()) throw ParseError("empty graph6 record", line, 1);
    for (std::size_t i = 0; i < text.size(); ++i) {
        auto c = static_cast<unsigned char>(text[i]);
        if (c < kBias || c > 126) {
            throw ParseError("invalid graph6 byte '" + std::string(1, text[i]) + "'", line,
                             static_cast<int>(i) + 1);
        }
    }
    std::size_t pos = 0;
    int n = 0;
    if (text[0] != '~') {
        n = text[0] - kBias;
        pos = 1;
    } else {
        if (text.size() < 4 || text[1] == '~') {
            throw ParseError("graph6 order beyond 64 vertices is not supported", line, 2);
        }
        n = ((text[1] - kBias) << 12) | ((text[2] - kBias) << 6) | (text[3] - kBias);
        pos = 4;
    }
    if (n > kMaxVertices) {
        throw ParseError("graph6 order " + std::to_string(n) + " exceeds 64 vertices", line, 1);
    }
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t expected = pos + (bits + 5) / 6;
    if (text.size() != expected) {
        throw ParseError("graph6 record has " + std::to_string(text.size()) +
                             " bytes, expected " + std::to_string(expected),
                         line, static_cast<int>(std::min(text.size(), expected)) + 1);
    }
    Graph g(n);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            int byte = text[pos + k / 6] - kBias;
            if ((byte >> (5 - static_cast<int>(k % 6))) & 1) g.add_edge(i, j);
        }
    }
    return g;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (only_space(line)) continue;
        out.push_back(from_graph6(line, number));
    }
    return out;
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    auto edges = g.edges();
    out << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

Graph from_edge_list(std::istream& in) {
    std::string line;
    int number = 0;
    auto next_record = [&](std::string& out) {
        while (std::getline(in, out)) {
            ++number;
            auto hash = out.find('#');
            if (hash != std::string::npos) out.erase(hash);
            if (!only_space(out)) return true;
        }
        return false;
    };
    if (!next_record(line)) throw ParseError("edge list is empty", number, 1);
    std::istringstream header(line);
    long n = -1;
    long m = -1;
    if (!(header >> n >> m) || n < 0 || m < 0) {
        throw ParseError("expected header \"n m\"", number, 1);
    }
    if (n > kMaxVertices) {
        throw CapacityError("edge list declares " + std::to_string(n) +
                            " vertices; at most 64 are supported");
    }
    Graph g(static_cast<int>(n));
    for (long e = 0; e < m; ++e) {
        if (!next_record(line)) {
            throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(e),
                             number, 1);
        }
        std::istringstream row(line);
        long u = 0;
        long v = 0;
        if (!(row >> u >> v)) throw ParseError("expected \"u v\"", number, 1);
        if (u < 1 || v < 1 || u > n || v > n) {
            throw ParseError("vertex out of range 1.." + std::to_string(n), number, 1);
        }
        if (u == v) throw ParseError("loop edge", number, 1);
        g.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
    }
    return g;
}

Graph from_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return from_edge_list(in);
}

namespace {

std::string slurp(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open " + path);
        buf << in.rdbuf();
    }
    return buf.str();
}

bool looks_like_graph6(const std::string& content) {
    std::istringstream lines(content);
    std::string first;
    while (std::getline(lines, first)) {
        if (!only_space(first) && first[0] != '#') break;
    }
    std::string trimmed = trim_line_end(first);
    return !trimmed.empty() && trimmed.find_first_of(" \t") == std::string::npos;
}

} // namespace

Graph read_graph_file(const std::string& path) {
    std::vector<Graph> all = read_graphs(path);
    if (all.size() != 1) {
        throw std::runtime_error(path + ": expected one graph, found " + std::to_string(all.size()));
    }
    return all.front();
}

std::vector<Graph> read_graphs(const std::string& path) {
    std::string content = slurp(path);
    if (looks_like_graph6(content)) {
        std::istringstream in(content);
        return read_graph6_stream(in);
    }
    return {from_edge_list(std::string_view(content))};
}

} // namespace bei
