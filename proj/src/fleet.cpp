#include "oag/fleet.hpp"

#include <algorithm>
#include <sstream>

#include "oag/simd/reduce.hpp"

namespace oag {

std::vector<MvcEntry> compute_mvc(const Graph& g) {
  const NodeId n = g.node_count();
  std::vector<MvcEntry> out(n);
  for (NodeId r = 0; r < n; ++r) {
    out[r].node = r;
    const auto best = simd::min_arc(g.raw_weights(r));
    if (!best.found()) continue;
    out[r].mvc = Weight::from_raw(best.weight);
    out[r].target = g.leaves(r)[best.index];
    out[r].is_isolated = false;
  }
  return out;
}

FleetModel build_fleet(const Graph& g) {
  FleetModel f;
  const NodeId n = g.node_count();
  f.entries_ = compute_mvc(g);
  f.arc_count_ = g.arc_count();
  f.rel_.resize(n);

  // One pass per root: split leaves into J, P and S, in ascending leaf order.
  std::vector<NodeId> js, ps, ss;
  for (NodeId r = 0; r < n; ++r) {
    js.clear();
    ps.clear();
    ss.clear();
    const std::int64_t mine = f.entries_[r].mvc.raw();
    const auto leaves = g.leaves(r);
    const auto weights = g.raw_weights(r);
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      const NodeId l = leaves[i];
      const std::int64_t w = weights[i];
      const std::int64_t theirs = f.entries_[l].mvc.raw();
      if (w == mine && w == theirs) {
        ps.push_back(l);
      } else if (w == mine) {
        ss.push_back(l);
      } else if (w == theirs) {
        js.push_back(l);
      }
    }
    auto& rel = f.rel_[r];
    rel.begin = f.related_.size();
    rel.j = static_cast<std::uint32_t>(js.size());
    rel.p = static_cast<std::uint32_t>(ps.size());
    rel.s = static_cast<std::uint32_t>(ss.size());
    f.related_.insert(f.related_.end(), js.begin(), js.end());
    f.related_.insert(f.related_.end(), ps.begin(), ps.end());
    f.related_.insert(f.related_.end(), ss.begin(), ss.end());
    f.beam_count_ += static_cast<std::size_t>(std::count_if(ps.begin(), ps.end(), [r](NodeId l) { return l > r; }));
  }
  f.arc_touches_ = 2 * static_cast<std::uint64_t>(g.arc_count());
  return f;
}

std::vector<NodePair> FleetModel::beams() const {
  std::vector<NodePair> out;
  out.reserve(beam_count_);
  for (NodeId r = 0; r < node_count(); ++r) {
    for (NodeId l : beam_peers(r)) {
      if (l > r) out.push_back({r, l});
    }
  }
  return out;
}

std::optional<int> charge(const FleetModel& f, NodeId r, NodeId l) {
  if (r >= f.node_count() || l >= f.node_count()) {
    throw Error(ErrorKind::IdOutOfRange, "charge(" + std::to_string(r) + ", " + std::to_string(l) + ")");
  }
  auto contains = [l](std::span<const NodeId> s) { return std::binary_search(s.begin(), s.end(), l); };
  if (contains(f.towboats(r))) return 1;
  if (contains(f.boats(r))) return 2;
  if (contains(f.beam_peers(r))) return 3;
  return std::nullopt;
}

std::vector<NodeId> trace_chain(const FleetModel& f, NodeId start) {
  if (start >= f.node_count()) throw Error(ErrorKind::IdOutOfRange, "node " + std::to_string(start));
  if (f.isolated(start)) throw Error(ErrorKind::IsolatedNode, "node " + std::to_string(start) + " has no leaves");
  std::vector<NodeId> path{start};
  NodeId cur = start;
  // A node outside every beam has a strictly lighter target, so the walk
  // cannot revisit a node; the bound guards against a corrupt model.
  while (!f.in_beam(cur) && path.size() <= f.node_count()) {
    cur = f.target(cur);
    path.push_back(cur);
  }
  return path;
}

std::vector<Flotilla> flotillas(const FleetModel& f) {
  const NodeId n = f.node_count();
  std::vector<bool> seen(n, false);
  std::vector<Flotilla> out;
  std::vector<NodeId> stack;
  for (NodeId s = 0; s < n; ++s) {
    if (seen[s] || f.isolated(s)) continue;
    Flotilla fl;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      const NodeId r = stack.back();
      stack.pop_back();
      fl.members.push_back(r);
      auto visit = [&](std::span<const NodeId> rel) {
        for (NodeId l : rel) {
          if (!seen[l]) {
            seen[l] = true;
            stack.push_back(l);
          }
        }
      };
      visit(f.boats(r));
      visit(f.beam_peers(r));
      visit(f.towboats(r));
      for (NodeId l : f.beam_peers(r)) {
        if (l > r) fl.beam_pairs.push_back({r, l});
      }
    }
    std::sort(fl.members.begin(), fl.members.end());
    std::sort(fl.beam_pairs.begin(), fl.beam_pairs.end(),
              [](const NodePair& a, const NodePair& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
    out.push_back(std::move(fl));
  }
  return out;
}

std::string dump_fleet(const FleetModel& f) {
  std::ostringstream out;
  for (NodeId r = 0; r < f.node_count(); ++r) {
    const auto& e = f.entry(r);
    out << r << ' ';
    if (e.is_isolated) {
      out << "- -";
    } else {
      out << to_string(e.mvc) << ' ' << e.target;
    }
    out << ' ' << f.boats(r).size() << '/' << f.beam_peers(r).size() << '/' << f.towboats(r).size() << '\n';
  }
  return out.str();
}

}  // namespace oag
