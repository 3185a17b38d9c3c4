#include "oag/simd/reduce.hpp"

namespace oag::simd::scalar {

ArcMin min_arc(std::span<const std::int64_t> weights) {
  ArcMin best;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < best.weight) best = {weights[i], i};
  }
  return best;
}

ArcMin min_foreign_arc(std::span<const std::int64_t> weights, std::span<const std::uint32_t> leaves,
                       const std::uint32_t* cluster_of, std::uint32_t own) {
  ArcMin best;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (cluster_of[leaves[i]] != own && weights[i] < best.weight) best = {weights[i], i};
  }
  return best;
}

}  // namespace oag::simd::scalar
