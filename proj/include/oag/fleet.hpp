#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "oag/graph.hpp"

namespace oag {

/// Minimal vassal cost of one node: the lightest weight in its united
/// subgraph and the lowest-id leaf carrying it.
struct MvcEntry {
  NodeId node = 0;
  Weight mvc;
  NodeId target = kNoNode;
  bool is_isolated = true;

  bool operator==(const MvcEntry&) const = default;
};

/// Per-node MVC table plus subjection relations and the J/P/S leaf split.
///
/// r subjects to l (r -> l) whenever w(r,l) equals r's MVC; `target` is the
/// canonical choice among such leaves. For node r:
///   J(r): boats, roots r' -> r with a strictly heavier MVC
///   P(r): beam peers, w(r,l) equals both MVCs
///   S(r): towboats, leaves r -> l with a strictly lighter MVC
/// All other leaves are trivial and not stored. J(r) followed by P(r) is
/// exactly the list of roots subjecting to r.
class FleetModel {
 public:
  NodeId node_count() const { return static_cast<NodeId>(entries_.size()); }
  std::size_t arc_count() const { return arc_count_; }

  std::span<const MvcEntry> entries() const { return entries_; }
  const MvcEntry& entry(NodeId r) const { return entries_[r]; }
  Weight mvc(NodeId r) const { return entries_[r].mvc; }
  NodeId target(NodeId r) const { return entries_[r].target; }
  bool isolated(NodeId r) const { return entries_[r].is_isolated; }

  std::span<const NodeId> boats(NodeId r) const { return segment(r, 0, rel_[r].j); }
  std::span<const NodeId> beam_peers(NodeId r) const { return segment(r, rel_[r].j, rel_[r].p); }
  std::span<const NodeId> towboats(NodeId r) const { return segment(r, rel_[r].j + rel_[r].p, rel_[r].s); }
  /// Roots r' with r' -> r (the incoming subjection list).
  std::span<const NodeId> subjects(NodeId r) const { return segment(r, 0, rel_[r].j + rel_[r].p); }

  bool in_beam(NodeId r) const { return rel_[r].p > 0; }

  /// Every beam {u, v} with u < v, sorted.
  std::vector<NodePair> beams() const;
  std::size_t beam_count() const { return beam_count_; }

  /// Arcs read while building the model (MVC scan plus classification scan).
  std::uint64_t arc_touches() const { return arc_touches_; }

 private:
  friend FleetModel build_fleet(const Graph& g);

  struct Relations {
    std::size_t begin = 0;
    std::uint32_t j = 0;
    std::uint32_t p = 0;
    std::uint32_t s = 0;
  };

  std::span<const NodeId> segment(NodeId r, std::uint32_t off, std::uint32_t len) const {
    return {related_.data() + rel_[r].begin + off, len};
  }

  std::vector<MvcEntry> entries_;
  std::vector<Relations> rel_;
  std::vector<NodeId> related_;
  std::size_t arc_count_ = 0;
  std::size_t beam_count_ = 0;
  std::uint64_t arc_touches_ = 0;
};

std::vector<MvcEntry> compute_mvc(const Graph& g);
FleetModel build_fleet(const Graph& g);

/// Role of r on edge {r, l}: 1 boat (r -> l, r heavier), 2 towboat
/// (l -> r, r lighter), 3 beam. nullopt when the edge carries no subjection
/// or does not exist.
std::optional<int> charge(const FleetModel& f, NodeId r, NodeId l);

/// Follows MVC targets from `start` until the first beam member.
std::vector<NodeId> trace_chain(const FleetModel& f, NodeId start);

struct Flotilla {
  std::vector<NodeId> members;
  std::vector<NodePair> beam_pairs;
};

/// Weakly connected components of the subjection relation, ordered by their
/// smallest member. Isolated nodes are not part of any flotilla.
std::vector<Flotilla> flotillas(const FleetModel& f);

/// One line per node: "id mvc target J/P/S" (counts); isolated nodes print
/// "id - - 0/0/0".
std::string dump_fleet(const FleetModel& f);

}  // namespace oag
