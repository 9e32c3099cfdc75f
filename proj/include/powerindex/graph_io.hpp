#ifndef POWERINDEX_GRAPH_IO_HPP
#define POWERINDEX_GRAPH_IO_HPP

#include <string>
#include <string_view>

#include "powerindex/configuration.hpp"
#include "powerindex/graph.hpp"

namespace powerindex {

// Graph JSON:
//   {"n": 3, "edges": [[0,1],[1,2]], "labels": {"0": {...}, ...}}
// Edges appear once with u < v; "labels" is optional.
//
// Edge-list text:
//   n 3          (optional header)
//   0 1
//   1 2
// Blank lines and lines starting with '#' are skipped. Without a header the
// vertex count is one more than the largest id.
//
// All parse functions throw ParseError (with a line number where one
// applies) on malformed input, duplicate edges and self-loops.

Graph parse_graph_json(std::string_view text);
Graph parse_edge_list(std::string_view text);

/// Dispatches on the first non-blank character: '{' selects JSON.
Graph parse_graph(std::string_view text);

/// Canonical JSON: sorted edges, labels only when present, one line,
/// newline-terminated.
std::string serialize_graph(const Graph& g);

/// Canonical edge list with an "n" header, newline-terminated.
std::string serialize_edge_list(const Graph& g);

/// Graphviz DOT. With a configuration, collaborators are filled black and
/// defectors white.
std::string to_dot(const Graph& g);
std::string to_dot(const Graph& g, const Configuration& c);

}  // namespace powerindex

#endif  // POWERINDEX_GRAPH_IO_HPP
