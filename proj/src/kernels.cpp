#include "oag/kernels.hpp"

#include <algorithm>
#include <sstream>

namespace oag {
namespace {

bool breaks_rule(const FleetModel& f, NodeId r, KernelRule rule) {
  if (!f.towboats(r).empty()) return true;
  return rule == KernelRule::PureBeam && !f.boats(r).empty();
}

}  // namespace

KernelReport detect_kernels(const FleetModel& f, KernelRule rule) {
  KernelReport report;
  report.rule = rule;
  const NodeId n = f.node_count();
  std::vector<bool> visited(n, false);
  std::vector<NodeId> group;
  for (NodeId s = 0; s < n; ++s) {
    if (visited[s] || !f.in_beam(s)) continue;
    group.clear();
    bool kernel = true;
    visited[s] = true;
    group.push_back(s);
    // The walk keeps marking the rest of a rejected group so no later start
    // can pick up a fragment of it.
    for (std::size_t head = 0; head < group.size(); ++head) {
      const NodeId r = group[head];
      if (kernel && breaks_rule(f, r, rule)) kernel = false;
      for (NodeId p : f.beam_peers(r)) {
        ++report.beam_arcs_visited;
        if (!visited[p]) {
          visited[p] = true;
          group.push_back(p);
        }
      }
    }
    if (!kernel) continue;
    std::sort(group.begin(), group.end());
    report.kernels.push_back(group);
    ++report.k;
  }
  return report;
}

std::size_t k_value(const Graph& g, KernelRule rule) { return detect_kernels(build_fleet(g), rule).k; }

Forest koag_seed(const Graph& g, const FleetModel& f, const KernelReport& report) {
  if (f.node_count() != g.node_count() || f.arc_count() != g.arc_count()) {
    throw Error(ErrorKind::InconsistentModel, "fleet model was built from a different graph");
  }
  // A kernel member subjects only to its own beam peers, so reaping from
  // one member claims exactly its kernel through beam edges before any
  // other cluster can reach it.
  ForestBuilder b(g.node_count());
  std::vector<NodeId> tops;
  for (const auto& kernel : report.kernels) {
    if (kernel.empty()) continue;
    const NodeId root = kernel.front();
    if (root >= g.node_count() || b.claimed(root) || !f.in_beam(root)) {
      throw Error(ErrorKind::InconsistentModel, "kernel report does not match the fleet model");
    }
    b.claim(root, b.new_cluster());
    tops.push_back(root);
  }
  absorb_subjects(f, b, tops);
  seed_beams(f, b);
  for (NodeId r = 0; r < f.node_count(); ++r) {
    if (!f.isolated(r) && !b.claimed(r)) {
      throw Error(ErrorKind::NoProgress, "kernel seeding left node " + std::to_string(r) + " unclaimed");
    }
  }
  return std::move(b).finish();
}

KernelReport analyze_kernels(const Graph& g, KernelRule rule, bool seed) {
  const FleetModel f = build_fleet(g);
  KernelReport report = detect_kernels(f, rule);
  if (seed) report.seeded_forest = koag_seed(g, f, report);
  return report;
}

std::string dump_kernels(const KernelReport& report) {
  std::ostringstream out;
  for (std::size_t i = 0; i < report.kernels.size(); ++i) {
    const auto& kernel = report.kernels[i];
    out << i << ' ' << kernel.size();
    for (NodeId r : kernel) out << ' ' << r;
    out << '\n';
  }
  return out.str();
}

}  // namespace oag
