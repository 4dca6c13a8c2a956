#pragma once

#include <string>
#include <string_view>

#include "indcut/graph.hpp"

namespace indcut {

enum class GraphFormat { edge_list, dimacs };

/// Edge list: one "u v" pair per line with non-negative integer labels, '#' starts a comment.
/// Ids are assigned in increasing label order. DIMACS: "p edge n m" then "e u v" with 1-based ids
/// ('c' lines are comments); labels are the DIMACS ids.
/// Throws ParseError carrying the offending line on malformed input, duplicate edges or self-loops.
Graph parse_graph(std::string_view text, GraphFormat format);

/// Canonical text: edges sorted, smaller endpoint first. DIMACS output numbers vertices by id + 1.
std::string serialize_graph(const Graph& g, GraphFormat format);

Graph read_graph_file(const std::string& path, GraphFormat format);
std::string read_text_file(const std::string& path);

/// One label per line (blank lines and '#' comments allowed); commas also separate entries.
VertexSet parse_vertex_list(std::string_view text, const Graph& g);

}  // namespace indcut
