#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "oag/graph.hpp"

namespace oag {

/// Clusters of a partially built spanning forest.
///
/// Members of all clusters are concatenated in one array with an offset
/// table; a second array of the same shape receives the rebuilt membership
/// on every merge and the two are swapped. Cluster ids come from a monotone
/// counter and are never reused. The live generation's ids are contiguous,
/// so slot = id - first_id().
class Forest {
 public:
  NodeId node_count() const { return static_cast<NodeId>(cluster_of_.size()); }
  std::size_t cluster_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }

  ClusterId first_id() const { return first_id_; }
  ClusterId id_of_slot(std::size_t slot) const { return first_id_ + static_cast<ClusterId>(slot); }
  std::size_t slot_of_id(ClusterId id) const { return id - first_id_; }

  ClusterId cluster_of(NodeId r) const { return cluster_of_[r]; }
  std::size_t slot_of(NodeId r) const { return cluster_of_[r] - first_id_; }
  std::span<const ClusterId> cluster_table() const { return cluster_of_; }

  std::span<const NodeId> members(std::size_t slot) const {
    return {members_.data() + offsets_[slot], offsets_[slot + 1] - offsets_[slot]};
  }
  /// Nodes still worth scanning for outgoing bridges.
  std::span<const NodeId> scan_set(std::size_t slot) const {
    return {scan_.data() + scan_offsets_[slot], scan_offsets_[slot + 1] - scan_offsets_[slot]};
  }
  std::size_t scan_size() const { return scan_.size(); }

  const std::vector<WeightedEdge>& picked() const { return picked_; }
  /// Symmetric adjacency view of the picked edges.
  std::vector<std::vector<NodeId>> picked_adjacency() const;

  ClusterId counter() const { return counter_; }
  std::size_t rounds() const { return rounds_; }
  /// Subjection arcs read while the node stage reaped this forest.
  std::uint64_t node_stage_arc_touches() const { return stage_touches_; }

 private:
  friend class ForestBuilder;
  friend struct ForestAccess;

  std::vector<ClusterId> cluster_of_;
  std::vector<NodeId> members_;
  std::vector<NodeId> spare_;
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> scan_;
  std::vector<std::size_t> scan_offsets_;
  std::vector<WeightedEdge> picked_;
  ClusterId first_id_ = 0;
  ClusterId counter_ = 0;
  std::size_t rounds_ = 0;
  std::uint64_t stage_touches_ = 0;
};

/// Forest under construction during a node stage.
///
/// Tracks claims through the cluster-id table: a node whose id is still
/// kUnclaimed may be absorbed, any other node is never absorbed again,
/// which keeps every cluster a tree.
class ForestBuilder {
 public:
  explicit ForestBuilder(NodeId n);

  bool claimed(NodeId r) const { return cluster_of_[r] != kUnclaimed; }
  ClusterId cluster_of(NodeId r) const { return cluster_of_[r]; }

  ClusterId new_cluster() { return counter_++; }
  void claim(NodeId r, ClusterId c) { cluster_of_[r] = c; }
  void pick(NodeId a, NodeId b, Weight w) { picked_.push_back({std::min(a, b), std::max(a, b), w}); }

  std::uint64_t& arc_touches() { return touches_; }
  std::uint64_t arc_touches() const { return touches_; }

  /// Groups claims into clusters; every unclaimed node becomes a singleton.
  Forest finish() &&;

 private:
  std::vector<ClusterId> cluster_of_;
  std::vector<WeightedEdge> picked_;
  ClusterId counter_ = 0;
  std::uint64_t touches_ = 0;
};

}  // namespace oag
