#include <atomic>
#include <cstdlib>
#include <string>

#include "oag/simd/reduce.hpp"

namespace oag::simd {
namespace {

#if !defined(OAG_HAVE_AVX2)
[[noreturn]] void no_avx2() { std::abort(); }
#endif

bool cpu_has_avx2() {
#if defined(OAG_HAVE_AVX2)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa initial_isa() {
  if (const char* env = std::getenv("OAG_ISA")) {
    if (std::string(env) == "scalar") return Isa::Scalar;
  }
  return detect_isa();
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

#if !defined(OAG_HAVE_AVX2)
namespace avx2 {
ArcMin min_arc(std::span<const std::int64_t>) { no_avx2(); }
ArcMin min_foreign_arc(std::span<const std::int64_t>, std::span<const std::uint32_t>, const std::uint32_t*,
                       std::uint32_t) {
  no_avx2();
}
}  // namespace avx2
#endif

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

bool isa_available(Isa isa) { return isa == Isa::Scalar || (isa == Isa::Avx2 && cpu_has_avx2()); }

Isa detect_isa() { return cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar; }

Isa active_isa() { return current().load(std::memory_order_relaxed); }

bool set_isa(Isa isa) {
  if (!isa_available(isa)) return false;
  current().store(isa, std::memory_order_relaxed);
  return true;
}

ArcMin min_arc(std::span<const std::int64_t> weights) {
  return active_isa() == Isa::Avx2 ? avx2::min_arc(weights) : scalar::min_arc(weights);
}

ArcMin min_foreign_arc(std::span<const std::int64_t> weights, std::span<const std::uint32_t> leaves,
                       const std::uint32_t* cluster_of, std::uint32_t own) {
  return active_isa() == Isa::Avx2 ? avx2::min_foreign_arc(weights, leaves, cluster_of, own)
                                   : scalar::min_foreign_arc(weights, leaves, cluster_of, own);
}

}  // namespace oag::simd
