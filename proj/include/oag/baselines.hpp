#pragma once

// Reference spanning-tree algorithms. Nothing here shares code with the
// fleet-model engine beyond the graph type.

#include <vector>

#include "oag/graph.hpp"
#include "oag/result.hpp"

namespace oag::baselines {

/// Union by rank with path compression.
class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n);

  std::size_t find(std::size_t x);
  /// Returns false if x and y were already joined.
  bool unite(std::size_t x, std::size_t y);
  std::size_t sets() const { return sets_; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::uint8_t> rank_;
  std::size_t sets_;
};

/// Edges sorted by (weight, u, v), greedy union. Spans every component.
MstResult kruskal(const Graph& g);

/// Binary-heap frontier growth from `seed`; covers only seed's component.
MstResult prim(const Graph& g, NodeId seed);

/// Prim restarted from every node not yet reached, spanning all components.
MstResult prim_forest(const Graph& g);

inline constexpr NodeId kBruteForceLimit = 10;

/// Minimum spanning-forest weight by exhaustive enumeration of acyclic edge
/// subsets of size n - c. Throws TooLarge above kBruteForceLimit nodes.
Weight brute_force(const Graph& g);

/// Number of connected components (isolated nodes count as components).
std::size_t component_count(const Graph& g);

}  // namespace oag::baselines
