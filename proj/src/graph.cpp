#include "oag/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <utility>

namespace oag {

Weight& Weight::operator+=(Weight other) {
  if (__builtin_add_overflow(raw_, other.raw_, &raw_)) {
    throw Error(ErrorKind::Overflow, "weight sum overflow");
  }
  return *this;
}

std::string to_string(Weight w) {
  std::int64_t raw = w.raw();
  std::string out;
  if (raw < 0) {
    out.push_back('-');
    raw = -raw;
  }
  out += std::to_string(raw / Weight::kScale);
  std::int64_t frac = raw % Weight::kScale;
  if (frac != 0) {
    std::string digits = std::to_string(frac);
    digits.insert(0, Weight::kFractionDigits - digits.size(), '0');
    while (digits.back() == '0') digits.pop_back();
    out.push_back('.');
    out += digits;
  }
  return out;
}

std::optional<Weight> parse_weight(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto dot = text.find('.');
  const std::string_view int_part = text.substr(0, dot);
  const std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (int_part.empty() && frac_part.empty()) return std::nullopt;
  if (dot != std::string_view::npos && frac_part.empty()) return std::nullopt;
  if (frac_part.size() > static_cast<std::size_t>(Weight::kFractionDigits)) return std::nullopt;
  auto all_digits = [](std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  if (!all_digits(int_part) || !all_digits(frac_part)) return std::nullopt;

  std::int64_t units = 0;
  if (!int_part.empty()) {
    auto [ptr, ec] = std::from_chars(int_part.data(), int_part.data() + int_part.size(), units);
    if (ec != std::errc{} || units > Weight::kMaxUnits) return std::nullopt;
  }
  std::int64_t frac = 0;
  for (std::size_t i = 0; i < static_cast<std::size_t>(Weight::kFractionDigits); ++i) {
    frac = frac * 10 + (i < frac_part.size() ? frac_part[i] - '0' : 0);
  }
  std::int64_t raw = units * Weight::kScale + frac;
  return Weight::from_raw(negative ? -raw : raw);
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorKind::IdOutOfRange: return "IdOutOfRange";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownEdge: return "UnknownEdge";
    case ErrorKind::IsolatedNode: return "IsolatedNode";
    case ErrorKind::InconsistentModel: return "InconsistentModel";
    case ErrorKind::AlreadyClaimed: return "AlreadyClaimed";
    case ErrorKind::NoProgress: return "NoProgress";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::TooManyEdges: return "TooManyEdges";
    case ErrorKind::Overflow: return "Overflow";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what, std::optional<std::size_t> line)
    : std::runtime_error(line ? std::string(to_string(kind)) + " at line " + std::to_string(*line) + ": " + what
                              : std::string(to_string(kind)) + ": " + what),
      kind_(kind),
      line_(line) {}

std::optional<std::size_t> Graph::find_arc(NodeId r, NodeId l) const {
  if (r >= node_count()) return std::nullopt;
  const auto row = leaves(r);
  auto it = std::lower_bound(row.begin(), row.end(), l);
  if (it == row.end() || *it != l) return std::nullopt;
  return arc_begin(r) + static_cast<std::size_t>(it - row.begin());
}

std::optional<Weight> Graph::edge_weight(NodeId u, NodeId v) const {
  if (auto arc = find_arc(u, v)) return arc_weight(*arc);
  return std::nullopt;
}

std::vector<WeightedEdge> Graph::edges() const {
  std::vector<WeightedEdge> out;
  out.reserve(edge_count());
  for (NodeId u = 0; u < node_count(); ++u) {
    for (std::size_t a = arc_begin(u); a < arc_end(u); ++a) {
      if (leaves_[a] > u) out.push_back({u, leaves_[a], arc_weight(a)});
    }
  }
  return out;
}

Graph build_graph(NodeId n, std::span<const WeightedEdge> edges) {
  if (n > static_cast<NodeId>(std::numeric_limits<std::int32_t>::max())) {
    throw Error(ErrorKind::TooLarge, "node count exceeds 2^31-1");
  }
  if (edges.size() > std::numeric_limits<std::uint32_t>::max() / 2) {
    throw Error(ErrorKind::TooLarge, "edge count exceeds 2^31");
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if (e.u >= n || e.v >= n) {
      throw EdgeError(ErrorKind::IdOutOfRange,
                      "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " outside [0, " +
                          std::to_string(n) + ")",
                      i);
    }
    if (e.u == e.v) throw EdgeError(ErrorKind::SelfLoop, "self-loop on node " + std::to_string(e.u), i);
    if (!e.w.positive()) {
      throw EdgeError(ErrorKind::NonPositiveWeight, "weight " + to_string(e.w) + " is not positive", i);
    }
  }

  Graph g;
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& e : edges) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());

  const std::size_t arcs = 2 * edges.size();
  struct Slot {
    NodeId leaf;
    std::uint32_t edge;
    std::int64_t raw;
  };
  std::vector<Slot> slots(arcs);
  {
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto& e = edges[i];
      const auto idx = static_cast<std::uint32_t>(i);
      slots[fill[e.u]++] = {e.v, idx, e.w.raw()};
      slots[fill[e.v]++] = {e.u, idx, e.w.raw()};
    }
  }

  std::optional<std::size_t> duplicate;
  for (NodeId r = 0; r < n; ++r) {
    auto first = slots.begin() + static_cast<std::ptrdiff_t>(g.offsets_[r]);
    auto last = slots.begin() + static_cast<std::ptrdiff_t>(g.offsets_[r + 1]);
    std::sort(first, last, [](const Slot& a, const Slot& b) {
      return a.leaf != b.leaf ? a.leaf < b.leaf : a.edge < b.edge;
    });
    for (auto it = first; it + 1 < last; ++it) {
      if (it->leaf == (it + 1)->leaf) {
        const std::size_t later = std::max(it->edge, (it + 1)->edge);
        duplicate = duplicate ? std::min(*duplicate, later) : later;
      }
    }
  }
  if (duplicate) {
    const auto& e = edges[*duplicate];
    throw EdgeError(ErrorKind::DuplicateEdge,
                    "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " listed more than once", *duplicate);
  }

  g.leaves_.resize(arcs);
  g.weights_.resize(arcs);
  for (std::size_t a = 0; a < arcs; ++a) {
    g.leaves_[a] = slots[a].leaf;
    g.weights_[a] = slots[a].raw;
  }
  return g;
}

std::vector<Awt> united_subgraph(const Graph& g, NodeId r) {
  if (r >= g.node_count()) {
    throw Error(ErrorKind::IdOutOfRange, "node " + std::to_string(r) + " outside graph");
  }
  std::vector<Awt> out;
  out.reserve(g.degree(r));
  for (std::size_t a = g.arc_begin(r); a < g.arc_end(r); ++a) {
    out.push_back({r, g.arc_leaf(a), g.arc_weight(a)});
  }
  return out;
}

Weight total_weight(const Graph& g, std::span<const NodePair> edges) {
  std::set<std::pair<NodeId, NodeId>> seen;
  Weight sum;
  for (const auto& [u, v] : edges) {
    auto w = g.edge_weight(u, v);
    if (!w) {
      throw Error(ErrorKind::UnknownEdge, "no edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    if (seen.emplace(std::min(u, v), std::max(u, v)).second) sum += *w;
  }
  return sum;
}

}  // namespace oag
