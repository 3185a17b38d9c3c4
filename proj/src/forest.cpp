#include "oag/forest.hpp"

#include <algorithm>

namespace oag {

std::vector<std::vector<NodeId>> Forest::picked_adjacency() const {
  std::vector<std::vector<NodeId>> adj(node_count());
  for (const auto& e : picked_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

ForestBuilder::ForestBuilder(NodeId n) : cluster_of_(n, kUnclaimed) {}

Forest ForestBuilder::finish() && {
  const NodeId n = static_cast<NodeId>(cluster_of_.size());
  for (NodeId r = 0; r < n; ++r) {
    if (cluster_of_[r] == kUnclaimed) cluster_of_[r] = counter_++;
  }

  Forest f;
  f.first_id_ = 0;
  f.counter_ = counter_;
  f.stage_touches_ = touches_;
  const std::size_t k = counter_;
  f.offsets_.assign(k + 1, 0);
  for (NodeId r = 0; r < n; ++r) ++f.offsets_[cluster_of_[r] + 1];
  for (std::size_t c = 0; c < k; ++c) f.offsets_[c + 1] += f.offsets_[c];
  f.members_.resize(n);
  {
    std::vector<std::size_t> fill(f.offsets_.begin(), f.offsets_.end() - 1);
    for (NodeId r = 0; r < n; ++r) f.members_[fill[cluster_of_[r]]++] = r;
  }
  f.spare_.resize(n);
  f.scan_ = f.members_;
  f.scan_offsets_ = f.offsets_;
  f.cluster_of_ = std::move(cluster_of_);
  f.picked_ = std::move(picked_);
  return f;
}

}  // namespace oag
