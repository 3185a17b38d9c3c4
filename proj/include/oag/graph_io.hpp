#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "oag/graph.hpp"

namespace oag {

// Edge-list text format:
//   line 1:  "n m"
//   m lines: "u v w"   (0-based ids, positive decimal weight)
// '#'-prefixed lines are comments. Tokens are whitespace separated.

Graph parse_graph(std::istream& in);
Graph parse_graph(std::string_view text);
Graph read_graph(const std::filesystem::path& path);

/// Writes edges with u < v in lexicographic order, optionally after a
/// '#' comment header line.
void write_graph(std::ostream& out, const Graph& g, std::string_view comment = {});
void write_graph(const std::filesystem::path& path, const Graph& g, std::string_view comment = {});
std::string format_graph(const Graph& g, std::string_view comment = {});

}  // namespace oag
