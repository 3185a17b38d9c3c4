#pragma once

// Min-reductions over one united-subgraph row.
//
// Both kernels return the lowest index among entries achieving the minimum,
// so results are identical across instruction sets. Rows are sorted by leaf
// id, which makes "lowest index" the same as "lowest leaf id".

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string_view>

namespace oag::simd {

inline constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
inline constexpr std::int64_t kNoWeight = std::numeric_limits<std::int64_t>::max();

struct ArcMin {
  std::int64_t weight = kNoWeight;
  std::size_t index = kNone;

  bool found() const { return index != kNone; }
  bool operator==(const ArcMin&) const = default;
};

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

/// Minimum weight of a row and its first position.
ArcMin min_arc(std::span<const std::int64_t> weights);

/// Minimum over arcs whose leaf lies outside cluster `own`.
///
/// `cluster_of` is indexed by leaf id. Returns !found() when every leaf of
/// the row belongs to `own` (the node is interior to its cluster).
ArcMin min_foreign_arc(std::span<const std::int64_t> weights, std::span<const std::uint32_t> leaves,
                       const std::uint32_t* cluster_of, std::uint32_t own);

/// Best instruction set the running CPU supports among those compiled in.
Isa detect_isa();
Isa active_isa();
/// Forces a kernel family; returns false if `isa` is unavailable here.
bool set_isa(Isa isa);
bool isa_available(Isa isa);

namespace scalar {
ArcMin min_arc(std::span<const std::int64_t> weights);
ArcMin min_foreign_arc(std::span<const std::int64_t> weights, std::span<const std::uint32_t> leaves,
                       const std::uint32_t* cluster_of, std::uint32_t own);
}  // namespace scalar

namespace avx2 {
ArcMin min_arc(std::span<const std::int64_t> weights);
ArcMin min_foreign_arc(std::span<const std::int64_t> weights, std::span<const std::uint32_t> leaves,
                       const std::uint32_t* cluster_of, std::uint32_t own);
}  // namespace avx2

}  // namespace oag::simd
