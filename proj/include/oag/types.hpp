#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace oag {

using NodeId = std::uint32_t;
using ClusterId = std::uint32_t;

inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();
inline constexpr ClusterId kUnclaimed = std::numeric_limits<ClusterId>::max();

/// Exact edge weight stored as a scaled integer (micro-units).
///
/// Equality between weights drives beam detection, so weights never go
/// through binary floating point. Text form is a decimal with at most
/// `kFractionDigits` digits after the point.
class Weight {
 public:
  static constexpr int kFractionDigits = 6;
  static constexpr std::int64_t kScale = 1'000'000;
  /// Largest accepted integer part; keeps sums of millions of edges in range.
  static constexpr std::int64_t kMaxUnits = 1'000'000'000;

  constexpr Weight() = default;
  static constexpr Weight from_raw(std::int64_t raw) { return Weight(raw); }
  static constexpr Weight from_units(std::int64_t units) { return Weight(units * kScale); }

  constexpr std::int64_t raw() const { return raw_; }
  constexpr bool positive() const { return raw_ > 0; }

  constexpr auto operator<=>(const Weight&) const = default;

  /// Overflow-checked sum.
  Weight& operator+=(Weight other);
  friend Weight operator+(Weight a, Weight b) { return a += b; }

 private:
  constexpr explicit Weight(std::int64_t raw) : raw_(raw) {}
  std::int64_t raw_ = 0;
};

/// Canonical decimal text: "5", "2.5", "0.000001".
std::string to_string(Weight w);

/// Parses a decimal weight; returns nullopt on malformed text. Sign is
/// accepted so callers can report non-positive values distinctly.
std::optional<Weight> parse_weight(std::string_view text);

enum class ErrorKind {
  DuplicateEdge,
  SelfLoop,
  NonPositiveWeight,
  IdOutOfRange,
  ParseError,
  UnknownEdge,
  IsolatedNode,
  InconsistentModel,
  AlreadyClaimed,
  NoProgress,
  TooLarge,
  TooManyEdges,
  Overflow,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, std::optional<std::size_t> line = std::nullopt);

  ErrorKind kind() const { return kind_; }
  /// 1-based source line for errors raised while reading files.
  std::optional<std::size_t> line() const { return line_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> line_;
};

/// Raised by build_graph; carries the 0-based position of the rejected edge.
class EdgeError : public Error {
 public:
  EdgeError(ErrorKind kind, const std::string& what, std::size_t edge_index)
      : Error(kind, what), edge_index_(edge_index) {}

  std::size_t edge_index() const { return edge_index_; }

 private:
  std::size_t edge_index_;
};

}  // namespace oag
