#pragma once

/// \file graph_io.hpp
/// \brief graph6 codec and the plain "n m / u v" edge-list format used by the fixtures.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bei/graph.hpp"

namespace bei {

/// Malformed input. `line` is 1-based (0 when unknown); `column` is the 1-based byte offset.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line, int column)
        : std::runtime_error(what), line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

std::string to_graph6(const Graph& g);

/// Decodes one graph6 record. A trailing newline or carriage return is ignored.
Graph from_graph6(std::string_view text, int line = 0);

/// Reads newline-delimited graph6 records; blank lines are skipped.
std::vector<Graph> read_graph6_stream(std::istream& in);

std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::istream& in);
Graph from_edge_list(std::string_view text);

/// Reads a single graph from a file, or stdin for "-". graph6 is assumed when the
/// first non-blank line has no whitespace; otherwise it is an edge list.
Graph read_graph_file(const std::string& path);

/// Every graph in a file: one per line for graph6, exactly one for an edge list.
std::vector<Graph> read_graphs(const std::string& path);

} // namespace bei
