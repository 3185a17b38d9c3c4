#pragma once

// Deterministic instance generators.
//
// All randomness comes from Xorshift64Star seeded through SplitMix64, so a
// GenSpec produces the same graph on every platform. Weights are drawn
// uniformly from Q with a multiply-shift reduction (no modulo bias beyond
// 2^-64 per draw).

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "oag/graph.hpp"

namespace oag {

/// xorshift64* (Marsaglia shifts 12/25/27, multiplier 0x2545F4914F6CDD1D).
class Xorshift64Star {
 public:
  explicit Xorshift64Star(std::uint64_t seed);

  std::uint64_t next();
  /// Uniform integer in [0, bound). bound must be nonzero.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

std::uint64_t splitmix64(std::uint64_t& state);

enum class Family { Lattice8, RandomGnm, Complete, Path, Cycle };

std::string_view to_string(Family family);

struct GenSpec {
  Family family = Family::Lattice8;
  std::uint64_t p = 0;  ///< lattice side
  std::uint64_t n = 0;
  std::uint64_t m = 0;  ///< random_gnm only
  std::vector<Weight> q{Weight::from_units(1)};
  std::uint64_t seed = 0;
};

/// Parses "1:10" (integer range) or "1;2;2.5" (explicit list).
std::vector<Weight> parse_weight_set(std::string_view text);
/// Compact form of Q: "a:b" for a contiguous integer range, else ';'-joined.
std::string format_weight_set(const std::vector<Weight>& q);

/// Self-describing echo without commas, e.g. "lattice8 p=100 q=1:10 seed=42".
std::string describe(const GenSpec& spec);

Graph generate(const GenSpec& spec);

/// p x p grid, node id row*p + col, each cell linked to its 8 neighbours.
/// Edges are enumerated E, S, SE, SW from every node in id order and draw
/// their weights in that order. Edge count 4p^2 - 6p + 2.
Graph lattice8(std::uint64_t p, const std::vector<Weight>& q, std::uint64_t seed);
/// m distinct pairs chosen uniformly (Floyd's sampling), listed in pair order.
Graph random_gnm(std::uint64_t n, std::uint64_t m, const std::vector<Weight>& q, std::uint64_t seed);
Graph complete(std::uint64_t n, const std::vector<Weight>& q, std::uint64_t seed);
Graph path(std::uint64_t n, const std::vector<Weight>& q, std::uint64_t seed);
Graph cycle(std::uint64_t n, const std::vector<Weight>& q, std::uint64_t seed);

}  // namespace oag
