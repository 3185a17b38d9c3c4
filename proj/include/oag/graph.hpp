#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "oag/types.hpp"

namespace oag {

/// One arc of a united subgraph: root -> leaf carrying the edge weight.
struct Awt {
  NodeId root = 0;
  NodeId leaf = 0;
  Weight weight;

  bool operator==(const Awt&) const = default;
};

struct WeightedEdge {
  NodeId u = 0;
  NodeId v = 0;
  Weight w;

  bool operator==(const WeightedEdge&) const = default;
};

/// Immutable undirected weighted simple graph in united-subgraph form.
///
/// Every edge is stored as two opposite arcs; each node's leaf list is sorted
/// by leaf id. Weights are kept as raw scaled integers in one contiguous
/// array so reduction kernels can read a node's row directly.
class Graph {
 public:
  Graph() = default;

  NodeId node_count() const { return static_cast<NodeId>(offsets_.empty() ? 0 : offsets_.size() - 1); }
  std::size_t edge_count() const { return leaves_.size() / 2; }
  std::size_t arc_count() const { return leaves_.size(); }

  std::size_t arc_begin(NodeId r) const { return offsets_[r]; }
  std::size_t arc_end(NodeId r) const { return offsets_[r + 1]; }
  std::size_t degree(NodeId r) const { return offsets_[r + 1] - offsets_[r]; }

  std::span<const NodeId> leaves(NodeId r) const {
    return {leaves_.data() + offsets_[r], degree(r)};
  }
  std::span<const std::int64_t> raw_weights(NodeId r) const {
    return {weights_.data() + offsets_[r], degree(r)};
  }

  NodeId arc_leaf(std::size_t arc) const { return leaves_[arc]; }
  Weight arc_weight(std::size_t arc) const { return Weight::from_raw(weights_[arc]); }

  /// Arc index of r -> l, if the edge exists.
  std::optional<std::size_t> find_arc(NodeId r, NodeId l) const;
  std::optional<Weight> edge_weight(NodeId u, NodeId v) const;

  /// All edges with u < v in lexicographic order.
  std::vector<WeightedEdge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  friend Graph build_graph(NodeId, std::span<const WeightedEdge>);

  std::vector<std::size_t> offsets_;
  std::vector<NodeId> leaves_;
  std::vector<std::int64_t> weights_;
};

/// Validates the edge list and builds the canonical graph.
///
/// Rejects the whole input on the first DuplicateEdge, SelfLoop,
/// NonPositiveWeight or IdOutOfRange. The error message names the offending
/// edge's position in `edges`.
Graph build_graph(NodeId n, std::span<const WeightedEdge> edges);

inline Graph build_graph(NodeId n, std::initializer_list<WeightedEdge> edges) {
  return build_graph(n, std::span<const WeightedEdge>(edges.begin(), edges.size()));
}

std::vector<Awt> united_subgraph(const Graph& g, NodeId r);

struct NodePair {
  NodeId u = 0;
  NodeId v = 0;
};

/// Sum of the listed edges' weights; each unordered pair counted once.
Weight total_weight(const Graph& g, std::span<const NodePair> edges);

}  // namespace oag
