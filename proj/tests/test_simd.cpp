#include <doctest.h>

#include <random>
#include <vector>

#include "oag/simd/reduce.hpp"

using namespace oag::simd;

namespace {

ArcMin naive_min(const std::vector<std::int64_t>& w) {
  ArcMin m;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] < m.weight) m = {w[i], i};
  }
  return m;
}

ArcMin naive_foreign(const std::vector<std::int64_t>& w, const std::vector<std::uint32_t>& leaves,
                     const std::vector<std::uint32_t>& cluster_of, std::uint32_t own) {
  ArcMin m;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (cluster_of[leaves[i]] != own && w[i] < m.weight) m = {w[i], i};
  }
  return m;
}

}  // namespace

TEST_CASE("scalar kernels match a naive scan") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t len = trial % 71;
    std::vector<std::int64_t> w(len);
    for (auto& x : w) x = 1 + static_cast<std::int64_t>(rng() % (1 + trial % 4));
    CHECK(scalar::min_arc(w) == naive_min(w));
  }
  CHECK_FALSE(scalar::min_arc({}).found());
}

TEST_CASE("avx2 kernels equal scalar kernels") {
  if (!isa_available(Isa::Avx2)) {
    MESSAGE("AVX2 not available on this machine; equivalence not exercised");
    return;
  }
  std::mt19937_64 rng(2);
  const std::uint32_t n = 200;
  std::vector<std::uint32_t> cluster_of(n);
  for (int trial = 0; trial < 20000; ++trial) {
    const std::size_t len = trial % 71;
    const int spread = 1 + trial % 5;
    std::vector<std::int64_t> w(len);
    std::vector<std::uint32_t> leaves(len);
    for (auto& x : w) {
      // Mix tiny and huge magnitudes so 64-bit compares matter.
      x = (trial % 7 == 0 ? (std::int64_t{1} << 40) : 1) * (1 + static_cast<std::int64_t>(rng() % spread));
    }
    for (auto& l : leaves) l = static_cast<std::uint32_t>(rng() % n);
    for (auto& c : cluster_of) c = static_cast<std::uint32_t>(rng() % (1 + trial % 3));
    const std::uint32_t own = static_cast<std::uint32_t>(rng() % 3);
    CAPTURE(trial);
    CHECK(avx2::min_arc(w) == scalar::min_arc(w));
    CHECK(avx2::min_foreign_arc(w, leaves, cluster_of.data(), own) ==
          scalar::min_foreign_arc(w, leaves, cluster_of.data(), own));
    CHECK(scalar::min_foreign_arc(w, leaves, cluster_of.data(), own) == naive_foreign(w, leaves, cluster_of, own));
  }
}

TEST_CASE("minimum position is the first among ties") {
  const std::vector<std::int64_t> w = {5, 3, 9, 3, 3, 1, 1, 4, 1, 7, 1, 2, 1, 1, 1, 1, 1, 1};
  for (Isa isa : {Isa::Scalar, Isa::Avx2}) {
    if (!set_isa(isa)) continue;
    CHECK(min_arc(w) == ArcMin{1, 5});
    const std::vector<std::uint32_t> leaves = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17};
    std::vector<std::uint32_t> cluster_of(18, 0);
    cluster_of[5] = cluster_of[6] = 1;
    CHECK(min_foreign_arc(w, leaves, cluster_of.data(), 1) == ArcMin{1, 8});
    for (auto& c : cluster_of) c = 1;
    CHECK_FALSE(min_foreign_arc(w, leaves, cluster_of.data(), 1).found());
  }
  set_isa(detect_isa());
}

TEST_CASE("dispatch") {
  CHECK(isa_available(Isa::Scalar));
  CHECK(set_isa(Isa::Scalar));
  CHECK(active_isa() == Isa::Scalar);
  CHECK(to_string(Isa::Scalar) == "scalar");
  CHECK(set_isa(detect_isa()));
}
