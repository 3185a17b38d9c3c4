#include "oag/msf.hpp"

#include <algorithm>
#include <chrono>
#include <tuple>

#include "oag/kernels.hpp"
#include "oag/simd/reduce.hpp"

namespace oag {

// Merge rounds rewrite the forest's buffers in place.
struct ForestAccess {
  static std::vector<ClusterId>& cluster_of(Forest& f) { return f.cluster_of_; }
  static std::vector<NodeId>& members(Forest& f) { return f.members_; }
  static std::vector<NodeId>& spare(Forest& f) { return f.spare_; }
  static std::vector<std::size_t>& offsets(Forest& f) { return f.offsets_; }
  static std::vector<NodeId>& scan(Forest& f) { return f.scan_; }
  static std::vector<std::size_t>& scan_offsets(Forest& f) { return f.scan_offsets_; }
  static std::vector<WeightedEdge>& picked(Forest& f) { return f.picked_; }
  static ClusterId& first_id(Forest& f) { return f.first_id_; }
  static ClusterId& counter(Forest& f) { return f.counter_; }
  static std::size_t& rounds(Forest& f) { return f.rounds_; }
};

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void check_model(const Graph& g, const FleetModel& f) {
  if (f.node_count() != g.node_count() || f.arc_count() != g.arc_count()) {
    throw Error(ErrorKind::InconsistentModel, "fleet model was built from a different graph");
  }
}

void check_coverage(const FleetModel& f, const ForestBuilder& b) {
  for (NodeId r = 0; r < f.node_count(); ++r) {
    if (!f.isolated(r) && !b.claimed(r)) {
      throw Error(ErrorKind::NoProgress, "node stage left node " + std::to_string(r) + " unclaimed");
    }
  }
}

void join_cluster(const FleetModel& f, ForestBuilder& b, NodeId r, NodeId towboat) {
  std::vector<NodeId> frontier{r};
  b.claim(r, b.cluster_of(towboat));
  b.pick(r, towboat, f.mvc(r));
  absorb_subjects(f, b, frontier);
}

bool bridge_less(const ClusterBridge& a, const ClusterBridge& b) {
  if (a.done != b.done) return !a.done;
  return std::tie(a.weight, a.u, a.v) < std::tie(b.weight, b.u, b.v);
}

}  // namespace

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::OagThenMerge: return "oag_then_merge";
    case Mode::Ooag: return "ooag";
    case Mode::KoagSeeded: return "koag_seeded";
  }
  return "unknown";
}

std::optional<Mode> parse_mode(std::string_view name) {
  if (name == "oag_then_merge" || name == "oag") return Mode::OagThenMerge;
  if (name == "ooag") return Mode::Ooag;
  if (name == "koag_seeded" || name == "koag") return Mode::KoagSeeded;
  return std::nullopt;
}

void absorb_subjects(const FleetModel& f, ForestBuilder& b, std::vector<NodeId>& frontier) {
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const NodeId l = frontier[head];
    const ClusterId c = b.cluster_of(l);
    for (NodeId r : f.subjects(l)) {
      ++b.arc_touches();
      if (b.claimed(r)) continue;
      b.claim(r, c);
      b.pick(r, l, f.mvc(r));
      frontier.push_back(r);
    }
  }
  frontier.clear();
}

void seed_beams(const FleetModel& f, ForestBuilder& b) {
  std::vector<NodeId> frontier;
  for (NodeId r = 0; r < f.node_count(); ++r) {
    for (NodeId p : f.beam_peers(r)) {
      if (p < r || b.claimed(r) || b.claimed(p)) continue;
      const ClusterId c = b.new_cluster();
      b.claim(r, c);
      b.claim(p, c);
      b.pick(r, p, f.mvc(r));
      frontier.assign({r, p});
      absorb_subjects(f, b, frontier);
    }
  }
}

Forest node_stage(const Graph& g, const FleetModel& f) {
  check_model(g, f);
  ForestBuilder b(g.node_count());
  seed_beams(f, b);
  check_coverage(f, b);
  return std::move(b).finish();
}

ClusterId inheritance_chase(const Graph& g, const FleetModel& f, NodeId start, ForestBuilder& b) {
  check_model(g, f);
  if (start >= f.node_count()) throw Error(ErrorKind::IdOutOfRange, "node " + std::to_string(start));
  if (f.isolated(start)) throw Error(ErrorKind::IsolatedNode, "node " + std::to_string(start) + " has no leaves");
  if (b.claimed(start)) throw Error(ErrorKind::AlreadyClaimed, "node " + std::to_string(start));

  // Climb: a node outside every beam has S nonempty and its target is a
  // strictly lighter towboat. The inheritor stops at a beam (the top) or
  // at a towboat some earlier chase already reaped.
  NodeId cur = start;
  while (!f.in_beam(cur)) {
    const NodeId up = f.target(cur);
    ++b.arc_touches();
    if (b.claimed(up)) {
      join_cluster(f, b, cur, up);
      return b.cluster_of(start);
    }
    cur = up;
  }
  for (NodeId p : f.beam_peers(cur)) {
    if (b.claimed(p)) {
      join_cluster(f, b, cur, p);
      return b.cluster_of(start);
    }
  }
  std::vector<NodeId> frontier{cur};
  b.claim(cur, b.new_cluster());
  absorb_subjects(f, b, frontier);
  return b.cluster_of(start);
}

Forest inheritance_node_stage(const Graph& g, const FleetModel& f) {
  check_model(g, f);
  ForestBuilder b(g.node_count());
  for (NodeId r = 0; r < f.node_count(); ++r) {
    if (!f.isolated(r) && !b.claimed(r)) inheritance_chase(g, f, r, b);
  }
  check_coverage(f, b);
  return std::move(b).finish();
}

BridgeScan cluster_mvc(const Graph& g, const Forest& forest, bool use_scan_set) {
  BridgeScan scan;
  const std::size_t k = forest.cluster_count();
  scan.bridges.resize(k);
  scan.peripheral_offsets.assign(k + 1, 0);
  scan.peripheral.reserve(use_scan_set ? forest.scan_size() : forest.node_count());
  const ClusterId* table = forest.cluster_table().data();

  for (std::size_t slot = 0; slot < k; ++slot) {
    const ClusterId own = forest.id_of_slot(slot);
    const auto nodes = use_scan_set ? forest.scan_set(slot) : forest.members(slot);
    ClusterBridge best;
    for (NodeId r : nodes) {
      const auto leaves = g.leaves(r);
      scan.arcs_scanned += leaves.size();
      ++scan.nodes_scanned;
      const auto m = simd::min_foreign_arc(g.raw_weights(r), leaves, table, own);
      if (!m.found()) continue;
      scan.peripheral.push_back(r);
      const NodeId l = leaves[m.index];
      ClusterBridge cand{false, Weight::from_raw(m.weight), std::min(r, l), std::max(r, l), forest.slot_of(l)};
      if (bridge_less(cand, best)) best = cand;
    }
    if (!best.done) ++scan.active;
    scan.bridges[slot] = best;
    scan.peripheral_offsets[slot + 1] = scan.peripheral.size();
  }
  return scan;
}

RoundStats apply_merge(const Graph& g, Forest& forest, const BridgeScan& scan, bool snip) {
  const auto t0 = Clock::now();
  const std::size_t k = forest.cluster_count();
  if (scan.bridges.size() != k || forest.node_count() != g.node_count()) {
    throw Error(ErrorKind::InconsistentModel, "bridge scan does not match forest");
  }
  if (scan.active == 0) throw Error(ErrorKind::NoProgress, "no cluster has an outgoing bridge");

  const auto& bridges = scan.bridges;
  constexpr std::size_t kFree = static_cast<std::size_t>(-1);

  // Clusters hooked onto each slot (the cluster-level subjection lists).
  std::vector<std::size_t> in_off(k + 1, 0);
  for (const auto& b : bridges) {
    if (!b.done) ++in_off[b.other_slot + 1];
  }
  for (std::size_t s = 0; s < k; ++s) in_off[s + 1] += in_off[s];
  std::vector<std::size_t> incoming(in_off[k]);
  {
    std::vector<std::size_t> fill(in_off.begin(), in_off.end() - 1);
    for (std::size_t s = 0; s < k; ++s) {
      if (!bridges[s].done) incoming[fill[bridges[s].other_slot]++] = s;
    }
  }

  auto& picked = ForestAccess::picked(forest);
  std::vector<std::size_t> new_of(k, kFree);
  std::vector<std::size_t> order;
  std::vector<std::size_t> group_begin;
  order.reserve(k);
  RoundStats stats;
  stats.clusters_before = k;
  stats.arcs_scanned = scan.arcs_scanned;
  stats.nodes_scanned = scan.nodes_scanned;

  auto take_bridge = [&](const ClusterBridge& b) {
    if (forest.cluster_of(b.u) == forest.cluster_of(b.v)) {
      ++stats.rejected_bridges;
      return;
    }
    picked.push_back({b.u, b.v, b.weight});
  };

  for (std::size_t s = 0; s < k; ++s) {
    if (new_of[s] != kFree) continue;
    const auto& b = bridges[s];
    const std::size_t group = group_begin.size();
    if (b.done) {
      group_begin.push_back(order.size());
      new_of[s] = group;
      order.push_back(s);
      continue;
    }
    const std::size_t t = b.other_slot;
    // Only mutual pairs found a group; everything else is reached from one.
    if (bridges[t].done || bridges[t].other_slot != s) continue;
    group_begin.push_back(order.size());
    new_of[s] = group;
    new_of[t] = group;
    order.push_back(s);
    order.push_back(t);
    take_bridge(b);
    ++stats.rejected_bridges;  // the partner selected the same bridge
    for (std::size_t i = group_begin.back(); i < order.size(); ++i) {
      const std::size_t x = order[i];
      for (std::size_t j = in_off[x]; j < in_off[x + 1]; ++j) {
        const std::size_t a = incoming[j];
        if (new_of[a] != kFree) continue;  // the pair partner
        new_of[a] = group;
        order.push_back(a);
        take_bridge(bridges[a]);
      }
    }
  }
  for (std::size_t s = 0; s < k; ++s) {
    if (new_of[s] == kFree) {
      throw Error(ErrorKind::NoProgress, "cluster slot " + std::to_string(s) + " left unmerged");
    }
  }
  const std::size_t new_k = group_begin.size();
  if (new_k >= k) throw Error(ErrorKind::NoProgress, "merge round did not reduce the cluster count");
  group_begin.push_back(order.size());

  // Rebuild membership into the spare buffer, then swap.
  auto& members = ForestAccess::members(forest);
  auto& spare = ForestAccess::spare(forest);
  auto& offsets = ForestAccess::offsets(forest);
  std::vector<std::size_t> new_offsets(new_k + 1, 0);
  std::vector<NodeId> new_scan;
  std::vector<std::size_t> new_scan_offsets(new_k + 1, 0);
  new_scan.reserve(snip ? scan.peripheral.size() : g.node_count());
  spare.resize(members.size());
  std::size_t pos = 0;
  for (std::size_t c = 0; c < new_k; ++c) {
    for (std::size_t i = group_begin[c]; i < group_begin[c + 1]; ++i) {
      const std::size_t s = order[i];
      for (std::size_t m = offsets[s]; m < offsets[s + 1]; ++m) spare[pos++] = members[m];
      if (snip) {
        new_scan.insert(new_scan.end(), scan.peripheral.begin() + static_cast<std::ptrdiff_t>(scan.peripheral_offsets[s]),
                        scan.peripheral.begin() + static_cast<std::ptrdiff_t>(scan.peripheral_offsets[s + 1]));
      }
    }
    new_offsets[c + 1] = pos;
    new_scan_offsets[c + 1] = new_scan.size();
  }
  members.swap(spare);
  offsets.swap(new_offsets);
  if (!snip) {
    new_scan = members;
    new_scan_offsets = offsets;
  }
  ForestAccess::scan(forest).swap(new_scan);
  ForestAccess::scan_offsets(forest).swap(new_scan_offsets);

  auto& counter = ForestAccess::counter(forest);
  auto& cluster_of = ForestAccess::cluster_of(forest);
  ForestAccess::first_id(forest) = counter;
  for (std::size_t c = 0; c < new_k; ++c) {
    const ClusterId id = counter + static_cast<ClusterId>(c);
    for (std::size_t m = offsets[c]; m < offsets[c + 1]; ++m) cluster_of[members[m]] = id;
  }
  counter += static_cast<ClusterId>(new_k);
  ++ForestAccess::rounds(forest);

  stats.clusters_after = new_k;
  stats.elapsed_ms = ms_since(t0);
  return stats;
}

RoundStats merge_round(const Graph& g, Forest& forest, bool snip) {
  const auto t0 = Clock::now();
  const auto scan = cluster_mvc(g, forest, snip);
  auto stats = apply_merge(g, forest, scan, snip);
  stats.elapsed_ms = ms_since(t0);
  return stats;
}

std::vector<NodeId> snip(const Graph& g, Forest& forest) {
  const std::size_t k = forest.cluster_count();
  std::vector<NodeId> kept;
  std::vector<std::size_t> kept_offsets(k + 1, 0);
  for (std::size_t slot = 0; slot < k; ++slot) {
    const ClusterId own = forest.id_of_slot(slot);
    for (NodeId r : forest.scan_set(slot)) {
      const auto leaves = g.leaves(r);
      const bool interior = std::all_of(leaves.begin(), leaves.end(),
                                        [&](NodeId l) { return forest.cluster_of(l) == own; });
      if (!interior) kept.push_back(r);
    }
    kept_offsets[slot + 1] = kept.size();
  }
  std::vector<NodeId> out = kept;
  ForestAccess::scan(forest).swap(kept);
  ForestAccess::scan_offsets(forest).swap(kept_offsets);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::int64_t> complete_graph_scan_model(std::int64_t arcs, std::int64_t n, std::size_t rounds) {
  std::vector<std::int64_t> out;
  std::int64_t d = arcs;
  for (std::size_t k = 0; k <= rounds; ++k) {
    out.push_back(std::max<std::int64_t>(d, 0));
    d = k == 0 ? arcs - n : d - (std::int64_t{1} << (k - 1)) * n;
  }
  return out;
}

MstResult run(const Graph& g, const RunOptions& options) {
  MstResult res;
  auto t0 = Clock::now();
  const FleetModel f = build_fleet(g);
  res.phases.fleet_ms = ms_since(t0);

  t0 = Clock::now();
  Forest forest = [&] {
    switch (options.mode) {
      case Mode::OagThenMerge: return node_stage(g, f);
      case Mode::Ooag: return inheritance_node_stage(g, f);
      case Mode::KoagSeeded: return koag_seed(g, f, detect_kernels(f, options.kernel_rule));
    }
    throw Error(ErrorKind::InconsistentModel, "unknown mode");
  }();
  res.phases.node_stage_ms = ms_since(t0);
  res.k_after_node_stage = forest.cluster_count();
  res.node_stage_arc_touches = f.arc_touches() + forest.node_stage_arc_touches();
  if (options.observer) options.observer(forest, 0);

  t0 = Clock::now();
  for (;;) {
    const auto round_t0 = Clock::now();
    const auto scan = cluster_mvc(g, forest, options.snip);
    res.comparisons += scan.arcs_scanned;
    if (scan.active == 0) break;
    auto stats = apply_merge(g, forest, scan, options.snip);
    stats.elapsed_ms = ms_since(round_t0);
    res.per_round.push_back(stats);
    if (options.observer) options.observer(forest, forest.rounds());
  }
  res.phases.merge_ms = ms_since(t0);

  res.edges = forest.picked();
  std::sort(res.edges.begin(), res.edges.end(),
            [](const WeightedEdge& a, const WeightedEdge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  for (const auto& e : res.edges) res.total += e.w;
  res.rounds = forest.rounds();
  res.clusters = forest.cluster_count();
  return res;
}

}  // namespace oag
