#pragma once

#include <string>
#include <string_view>

#include "netsens/graph.hpp"

namespace netsens {

struct ParsedEdgeList {
    Graph graph;
    int duplicate_edges = 0;  // input edges dropped as repeats
    int self_loops = 0;       // input edges dropped as self-loops
};

/// Parses a line-oriented edge list: two whitespace-separated labels per
/// line, lines starting with '#' or '%' (and blank lines) ignored. Labels
/// are mapped to dense ids in first-appearance order; duplicates and
/// self-loops are dropped and counted. Throws ParseError on malformed
/// lines (with the line number) and on input with no edges.
ParsedEdgeList from_edge_list(std::string_view text);

ParsedEdgeList read_edge_list_file(const std::string& path);

/// One edge per line, "label label". Emits stored labels if present,
/// numeric ids otherwise.
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list_file(const Graph& g, const std::string& path);

}  // namespace netsens
