#pragma once

#include <cstdint>
#include <vector>

#include "oag/graph.hpp"

namespace oag {

struct RoundStats {
  std::size_t clusters_before = 0;
  std::size_t clusters_after = 0;
  /// Arcs read by the bridge scan feeding this round (the scan size delta_k).
  std::uint64_t arcs_scanned = 0;
  /// Nodes in the scan set for this round.
  std::size_t nodes_scanned = 0;
  /// Selected bridges dropped because both ends already shared a cluster.
  std::size_t rejected_bridges = 0;
  double elapsed_ms = 0.0;
};

struct PhaseTimes {
  double fleet_ms = 0.0;
  double node_stage_ms = 0.0;
  double merge_ms = 0.0;
};

struct MstResult {
  /// Spanning-forest edges, u < v, sorted by (u, v).
  std::vector<WeightedEdge> edges;
  Weight total;
  std::size_t k_after_node_stage = 0;
  std::size_t rounds = 0;
  /// Arcs examined by bridge scans over all rounds, including the final scan
  /// that finds every cluster done.
  std::uint64_t comparisons = 0;
  /// Arc touches of the fleet build plus node-stage reaping.
  std::uint64_t node_stage_arc_touches = 0;
  /// Clusters left at the end; equals the number of connected components.
  std::size_t clusters = 0;
  std::vector<RoundStats> per_round;
  PhaseTimes phases;
};

}  // namespace oag
