#include <immintrin.h>

#include "oag/simd/reduce.hpp"

namespace oag::simd::avx2 {
namespace {

// Folds the four lane winners into `best`, preferring the lower index on ties.
void fold_lanes(__m256i vmin, __m256i vidx, ArcMin& best) {
  alignas(32) std::int64_t mins[4];
  alignas(32) std::int64_t idxs[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(mins), vmin);
  _mm256_store_si256(reinterpret_cast<__m256i*>(idxs), vidx);
  for (int lane = 0; lane < 4; ++lane) {
    if (idxs[lane] < 0) continue;
    const auto idx = static_cast<std::size_t>(idxs[lane]);
    if (mins[lane] < best.weight || (mins[lane] == best.weight && idx < best.index)) {
      best = {mins[lane], idx};
    }
  }
}

}  // namespace

ArcMin min_arc(std::span<const std::int64_t> weights) {
  const std::size_t n = weights.size();
  const std::int64_t* w = weights.data();
  ArcMin best;
  std::size_t i = 0;
  if (n >= 4) {
    __m256i vmin = _mm256_set1_epi64x(kNoWeight);
    __m256i vidx = _mm256_set1_epi64x(-1);
    __m256i cur = _mm256_setr_epi64x(0, 1, 2, 3);
    const __m256i step = _mm256_set1_epi64x(4);
    for (; i + 4 <= n; i += 4) {
      const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + i));
      const __m256i lt = _mm256_cmpgt_epi64(vmin, v);
      vmin = _mm256_blendv_epi8(vmin, v, lt);
      vidx = _mm256_blendv_epi8(vidx, cur, lt);
      cur = _mm256_add_epi64(cur, step);
    }
    fold_lanes(vmin, vidx, best);
  }
  for (; i < n; ++i) {
    if (w[i] < best.weight) best = {w[i], i};
  }
  return best;
}

ArcMin min_foreign_arc(std::span<const std::int64_t> weights, std::span<const std::uint32_t> leaves,
                       const std::uint32_t* cluster_of, std::uint32_t own) {
  const std::size_t n = weights.size();
  const std::int64_t* w = weights.data();
  const std::uint32_t* l = leaves.data();
  ArcMin best;
  std::size_t i = 0;
  if (n >= 4) {
    const __m256i none = _mm256_set1_epi64x(kNoWeight);
    const __m128i own_v = _mm_set1_epi32(static_cast<int>(own));
    __m256i vmin = none;
    __m256i vidx = _mm256_set1_epi64x(-1);
    __m256i cur = _mm256_setr_epi64x(0, 1, 2, 3);
    const __m256i step = _mm256_set1_epi64x(4);
    for (; i + 4 <= n; i += 4) {
      const __m128i leaf = _mm_loadu_si128(reinterpret_cast<const __m128i*>(l + i));
      const __m128i cl = _mm_i32gather_epi32(reinterpret_cast<const int*>(cluster_of), leaf, 4);
      const __m256i same = _mm256_cvtepi32_epi64(_mm_cmpeq_epi32(cl, own_v));
      __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + i));
      v = _mm256_blendv_epi8(v, none, same);
      const __m256i lt = _mm256_cmpgt_epi64(vmin, v);
      vmin = _mm256_blendv_epi8(vmin, v, lt);
      vidx = _mm256_blendv_epi8(vidx, cur, lt);
      cur = _mm256_add_epi64(cur, step);
    }
    fold_lanes(vmin, vidx, best);
  }
  for (; i < n; ++i) {
    if (cluster_of[l[i]] != own && w[i] < best.weight) best = {w[i], i};
  }
  return best;
}

}  // namespace oag::simd::avx2
