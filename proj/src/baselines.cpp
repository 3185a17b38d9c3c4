#include "oag/baselines.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <limits>
#include <queue>
#include <tuple>

namespace oag::baselines {

DisjointSet::DisjointSet(std::size_t n) : parent_(n), rank_(n, 0), sets_(n) {
  for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
}

std::size_t DisjointSet::find(std::size_t x) {
  std::size_t root = x;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[x] != root) {
    const std::size_t next = parent_[x];
    parent_[x] = root;
    x = next;
  }
  return root;
}

bool DisjointSet::unite(std::size_t x, std::size_t y) {
  x = find(x);
  y = find(y);
  if (x == y) return false;
  if (rank_[x] < rank_[y]) std::swap(x, y);
  parent_[y] = x;
  if (rank_[x] == rank_[y]) ++rank_[x];
  --sets_;
  return true;
}

namespace {

void finish(MstResult& res) {
  std::sort(res.edges.begin(), res.edges.end(),
            [](const WeightedEdge& a, const WeightedEdge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  res.total = Weight{};
  for (const auto& e : res.edges) res.total += e.w;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// Grows one Prim tree from `seed`, marking reached nodes.
void grow(const Graph& g, NodeId seed, std::vector<bool>& in_tree, MstResult& res) {
  using Item = std::tuple<std::int64_t, NodeId, NodeId>;  // weight, leaf, parent
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  auto push_row = [&](NodeId r) {
    for (std::size_t a = g.arc_begin(r); a < g.arc_end(r); ++a) {
      ++res.comparisons;
      if (!in_tree[g.arc_leaf(a)]) heap.emplace(g.arc_weight(a).raw(), g.arc_leaf(a), r);
    }
  };
  in_tree[seed] = true;
  push_row(seed);
  while (!heap.empty()) {
    const auto [w, leaf, parent] = heap.top();
    heap.pop();
    if (in_tree[leaf]) continue;
    in_tree[leaf] = true;
    res.edges.push_back({std::min(leaf, parent), std::max(leaf, parent), Weight::from_raw(w)});
    push_row(leaf);
  }
}

}  // namespace

MstResult kruskal(const Graph& g) {
  const auto t0 = std::chrono::steady_clock::now();
  MstResult res;
  auto edges = g.edges();
  std::sort(edges.begin(), edges.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
    return std::tie(a.w, a.u, a.v) < std::tie(b.w, b.u, b.v);
  });
  res.phases.fleet_ms = ms_since(t0);
  DisjointSet ds(g.node_count());
  for (const auto& e : edges) {
    ++res.comparisons;
    if (ds.unite(e.u, e.v)) res.edges.push_back(e);
  }
  res.clusters = ds.sets();
  res.phases.merge_ms = ms_since(t0) - res.phases.fleet_ms;
  finish(res);
  return res;
}

MstResult prim(const Graph& g, NodeId seed) {
  if (seed >= g.node_count()) throw Error(ErrorKind::IdOutOfRange, "seed " + std::to_string(seed));
  const auto t0 = std::chrono::steady_clock::now();
  MstResult res;
  std::vector<bool> in_tree(g.node_count(), false);
  grow(g, seed, in_tree, res);
  res.clusters = 1;
  res.phases.merge_ms = ms_since(t0);
  finish(res);
  return res;
}

MstResult prim_forest(const Graph& g) {
  const auto t0 = std::chrono::steady_clock::now();
  MstResult res;
  std::vector<bool> in_tree(g.node_count(), false);
  for (NodeId r = 0; r < g.node_count(); ++r) {
    if (in_tree[r]) continue;
    grow(g, r, in_tree, res);
    ++res.clusters;
  }
  res.phases.merge_ms = ms_since(t0);
  finish(res);
  return res;
}

std::size_t component_count(const Graph& g) {
  DisjointSet ds(g.node_count());
  for (const auto& e : g.edges()) ds.unite(e.u, e.v);
  return ds.sets();
}

Weight brute_force(const Graph& g) {
  const NodeId n = g.node_count();
  if (n > kBruteForceLimit) {
    throw Error(ErrorKind::TooLarge, "brute force limited to " + std::to_string(kBruteForceLimit) + " nodes");
  }
  const auto edges = g.edges();
  const std::size_t need = n - component_count(g);
  const std::size_t m = edges.size();

  // Depth-first over edge subsets in index order. Each depth keeps its own
  // component labelling; an edge joining two equal labels would close a
  // cycle and is skipped.
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::vector<std::vector<NodeId>> labels(need + 1, std::vector<NodeId>(n));
  for (NodeId i = 0; i < n; ++i) labels[0][i] = i;
  std::function<void(std::size_t, std::size_t, std::int64_t)> search = [&](std::size_t depth, std::size_t next,
                                                                          std::int64_t sum) {
    if (depth == need) {
      best = std::min(best, sum);
      return;
    }
    const auto& cur = labels[depth];
    for (std::size_t i = next; i + (need - depth) <= m; ++i) {
      const NodeId a = cur[edges[i].u];
      const NodeId b = cur[edges[i].v];
      if (a == b) continue;
      auto& nxt = labels[depth + 1];
      for (NodeId x = 0; x < n; ++x) nxt[x] = cur[x] == b ? a : cur[x];
      search(depth + 1, i + 1, sum + edges[i].w.raw());
    }
  };
  search(0, 0, 0);
  return Weight::from_raw(need == 0 ? 0 : best);
}

}  // namespace oag::baselines
