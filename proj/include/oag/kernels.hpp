#pragma once

#include <optional>
#include <vector>

#include "oag/fleet.hpp"
#include "oag/forest.hpp"
#include "oag/msf.hpp"

namespace oag {

struct KernelReport {
  /// Member lists, each sorted; kernels ordered by smallest member.
  std::vector<std::vector<NodeId>> kernels;
  std::size_t k = 0;
  KernelRule rule = KernelRule::TowboatFree;
  /// Beam arcs walked by detection; each beam contributes exactly two.
  std::uint64_t beam_arcs_visited = 0;
  std::optional<Forest> seeded_forest;
};

/// Walks beam links peer to peer from every unvisited beam member. A group
/// that contains a member breaking `rule` is dropped whole; every completed
/// group increments k.
KernelReport detect_kernels(const FleetModel& f, KernelRule rule = KernelRule::TowboatFree);

std::size_t k_value(const Graph& g, KernelRule rule = KernelRule::TowboatFree);

/// Kernels become the first clusters (spanned by beam edges), then every
/// other node is absorbed top-down along subjection arcs. Nodes no kernel
/// reaches fall back to beam seeding.
Forest koag_seed(const Graph& g, const FleetModel& f, const KernelReport& report);

/// Builds the fleet model, detects kernels and, if asked, fills
/// `seeded_forest` with koag_seed's output.
KernelReport analyze_kernels(const Graph& g, KernelRule rule = KernelRule::TowboatFree, bool seed = false);

/// "k_id size member-ids..." per kernel.
std::string dump_kernels(const KernelReport& report);

}  // namespace oag
