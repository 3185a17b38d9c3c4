#pragma once

#include <functional>
#include <string_view>
#include <vector>

#include "oag/fleet.hpp"
#include "oag/forest.hpp"
#include "oag/result.hpp"

namespace oag {

enum class Mode {
  OagThenMerge,  ///< beam-seeded node stage, then merge rounds
  Ooag,          ///< inheritance-chase node stage, then merge rounds
  KoagSeeded,    ///< kernel-seeded node stage, then merge rounds
};

std::string_view to_string(Mode mode);
std::optional<Mode> parse_mode(std::string_view name);

enum class KernelRule {
  TowboatFree,  ///< every member has S empty
  PureBeam,     ///< every member has J and S empty
};

// ---- node stage -----------------------------------------------------------

/// Breadth-first reaping against subjection arcs: each claimed node in
/// `frontier` absorbs every unclaimed root that subjects to it, through the
/// shared edge whose weight is that root's MVC. Consumes `frontier`.
void absorb_subjects(const FleetModel& f, ForestBuilder& b, std::vector<NodeId>& frontier);

/// Founds a cluster on every beam whose two ends are unclaimed and reaps it.
/// Beams are visited in (u, v) order.
void seed_beams(const FleetModel& f, ForestBuilder& b);

/// Beam-seeded node stage. Throws InconsistentModel if `f` was not built
/// from `g`.
Forest node_stage(const Graph& g, const FleetModel& f);

/// Climbs from `start` along MVC targets to the first beam member or to the
/// first claimed towboat, then reaps downward from there. The climb picks no
/// edges. Returns the id of the cluster that ends up holding `start`.
ClusterId inheritance_chase(const Graph& g, const FleetModel& f, NodeId start, ForestBuilder& b);

/// Node stage driven by inheritance chases from every unclaimed node in id order.
Forest inheritance_node_stage(const Graph& g, const FleetModel& f);

// ---- cluster stage --------------------------------------------------------

struct ClusterBridge {
  bool done = true;  ///< no outgoing bridge
  Weight weight;
  NodeId u = kNoNode;  ///< smaller endpoint
  NodeId v = kNoNode;  ///< larger endpoint
  std::size_t other_slot = 0;
};

struct BridgeScan {
  std::vector<ClusterBridge> bridges;  ///< indexed by cluster slot
  /// Scanned nodes that still have a foreign leaf, grouped by slot.
  std::vector<NodeId> peripheral;
  std::vector<std::size_t> peripheral_offsets;
  std::uint64_t arcs_scanned = 0;
  std::size_t nodes_scanned = 0;
  std::size_t active = 0;  ///< clusters with an outgoing bridge
};

/// Lightest outgoing bridge per cluster, ties broken by (weight, smaller
/// endpoint, larger endpoint). With `use_scan_set` only the forest's
/// peripheral nodes are read; otherwise every member is.
BridgeScan cluster_mvc(const Graph& g, const Forest& forest, bool use_scan_set = true);

/// Applies one merge round from a bridge scan: each active cluster hooks
/// onto the cluster across its bridge; mutual pairs act as cluster-level
/// beams and absorb their subjects breadth-first. Membership is rebuilt into
/// the spare buffer and ids refreshed. Throws NoProgress if nothing merges.
RoundStats apply_merge(const Graph& g, Forest& forest, const BridgeScan& scan, bool snip = true);

/// cluster_mvc followed by apply_merge.
RoundStats merge_round(const Graph& g, Forest& forest, bool snip = true);

/// Marks nodes whose whole leaf list lies in their own cluster as interior
/// and drops them from the forest's scan set. Returns the remaining
/// (peripheral) nodes in ascending id order.
std::vector<NodeId> snip(const Graph& g, Forest& forest);

/// Scan sizes predicted for a complete graph by the recursion
/// d0 = E, d1 = E - n, d(k+1) = d(k) - 2^(k-1) n, truncated at zero.
std::vector<std::int64_t> complete_graph_scan_model(std::int64_t arcs, std::int64_t n, std::size_t rounds);

// ---- driver ---------------------------------------------------------------

struct RunOptions {
  Mode mode = Mode::Ooag;
  bool snip = true;
  KernelRule kernel_rule = KernelRule::TowboatFree;
  /// Called after the node stage (round 0) and after every merge round.
  std::function<void(const Forest&, std::size_t round)> observer;
};

MstResult run(const Graph& g, const RunOptions& options);
inline MstResult run(const Graph& g, Mode mode) {
  RunOptions options;
  options.mode = mode;
  return run(g, options);
}

}  // namespace oag
