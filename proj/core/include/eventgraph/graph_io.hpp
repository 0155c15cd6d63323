#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "eventgraph/graph.hpp"

namespace eventgraph {

/// {"n": 3, "edges": [[1,2],[2,3],[1,3]]}
EventGraph parse_graph_json(std::string_view text, const std::string& source = "<json>");

/// One "i j" pair per line, '#' starts a comment. An optional "n N" line
/// fixes the vertex count; otherwise it is the largest label seen.
EventGraph parse_graph_text(std::string_view text, const std::string& source = "<text>");

std::string graph_to_json(const EventGraph& g);
std::string graph_to_text(const EventGraph& g);

/// Graphs by name: Kn (complete), Cn (cycle), Pn (path), En (edgeless),
/// Wn (wheel, the star extension of C(n-1)).
std::optional<EventGraph> named_graph(std::string_view name);

/// A graph name, or a file read by extension (.json, anything else as text).
EventGraph load_graph(const std::string& spec);

/// Reads a whole file; throws ParseError(path, 0, ...) if it cannot be read.
std::string read_file(const std::string& path);

}  // namespace eventgraph
