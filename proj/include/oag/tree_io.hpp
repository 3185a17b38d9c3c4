#pragma once

// Tree file format:
//   line 1:  "n k total_weight rounds"   (k = number of trees in the forest)
//   then one "u v w" line per edge, u < v, sorted by (u, v).

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "oag/graph.hpp"
#include "oag/result.hpp"

namespace oag {

struct TreeFile {
  NodeId n = 0;
  std::size_t k = 0;
  Weight total;
  std::size_t rounds = 0;
  std::vector<WeightedEdge> edges;
};

TreeFile to_tree_file(NodeId n, const MstResult& result);

void write_tree(std::ostream& out, const TreeFile& tree);
void write_tree(const std::filesystem::path& path, const TreeFile& tree);
std::string format_tree(const TreeFile& tree);

TreeFile parse_tree(std::istream& in);
TreeFile parse_tree(std::string_view text);
TreeFile read_tree(const std::filesystem::path& path);

struct Verdict {
  bool ok = true;
  /// First violated property: "node count", "unknown edge", "weight mismatch",
  /// "cycle", "not spanning", "total mismatch" or "not minimum".
  std::string violation;
  std::string detail;
};

/// Checks `tree` is a spanning forest of `g` built from its edges and that
/// its weight equals an independently computed Kruskal total.
Verdict verify_tree(const Graph& g, const TreeFile& tree);

}  // namespace oag
