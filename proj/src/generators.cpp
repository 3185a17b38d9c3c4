#include "oag/generators.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <unordered_set>

namespace oag {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Xorshift64Star::Xorshift64Star(std::uint64_t seed) {
  state_ = splitmix64(seed);
  if (state_ == 0) state_ = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t Xorshift64Star::next() {
  state_ ^= state_ >> 12;
  state_ ^= state_ << 25;
  state_ ^= state_ >> 27;
  return state_ * 0x2545F4914F6CDD1DULL;
}

std::uint64_t Xorshift64Star::below(std::uint64_t bound) {
  __extension__ using u128 = unsigned __int128;
  return static_cast<std::uint64_t>((static_cast<u128>(next()) * bound) >> 64);
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::Lattice8: return "lattice8";
    case Family::RandomGnm: return "random_gnm";
    case Family::Complete: return "complete";
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
  }
  return "?";
}

namespace {

void check_q(const std::vector<Weight>& q) {
  if (q.empty()) throw Error(ErrorKind::ParseError, "weight set is empty");
  for (Weight w : q) {
    if (!w.positive()) throw Error(ErrorKind::NonPositiveWeight, "weight set entry " + to_string(w));
  }
}

NodeId checked_nodes(std::uint64_t n) {
  if (n > static_cast<std::uint64_t>(std::numeric_limits<std::int32_t>::max())) {
    throw Error(ErrorKind::Overflow, std::to_string(n) + " nodes exceed the id range");
  }
  return static_cast<NodeId>(n);
}

Weight draw(Xorshift64Star& rng, const std::vector<Weight>& q) { return q[rng.below(q.size())]; }

std::uint64_t parse_u64(std::string_view s) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw Error(ErrorKind::ParseError, "bad integer '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::vector<Weight> parse_weight_set(std::string_view text) {
  std::vector<Weight> q;
  if (const auto colon = text.find(':'); colon != std::string_view::npos) {
    const std::uint64_t lo = parse_u64(text.substr(0, colon));
    const std::uint64_t hi = parse_u64(text.substr(colon + 1));
    if (lo == 0 || hi < lo || hi > static_cast<std::uint64_t>(Weight::kMaxUnits)) {
      throw Error(ErrorKind::ParseError, "bad weight range '" + std::string(text) + "'");
    }
    if (hi - lo >= 10'000'000) throw Error(ErrorKind::TooLarge, "weight range too wide");
    for (std::uint64_t v = lo; v <= hi; ++v) q.push_back(Weight::from_units(static_cast<std::int64_t>(v)));
    return q;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(';', start), text.size());
    const auto tok = text.substr(start, end - start);
    const auto w = parse_weight(tok);
    if (!w) throw Error(ErrorKind::ParseError, "bad weight '" + std::string(tok) + "'");
    q.push_back(*w);
    start = end + 1;
  }
  check_q(q);
  return q;
}

std::string format_weight_set(const std::vector<Weight>& q) {
  bool range = q.size() > 1;
  for (std::size_t i = 0; range && i < q.size(); ++i) {
    range = q[i].raw() % Weight::kScale == 0 && (i == 0 || q[i].raw() == q[i - 1].raw() + Weight::kScale);
  }
  if (range) return to_string(q.front()) + ":" + to_string(q.back());
  std::string out;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (i) out += ';';
    out += to_string(q[i]);
  }
  return out;
}

std::string describe(const GenSpec& spec) {
  std::ostringstream out;
  out << to_string(spec.family);
  if (spec.family == Family::Lattice8) {
    out << " p=" << spec.p;
  } else {
    out << " n=" << spec.n;
    if (spec.family == Family::RandomGnm) out << " m=" << spec.m;
  }
  out << " q=" << format_weight_set(spec.q) << " seed=" << spec.seed;
  return out.str();
}

Graph generate(const GenSpec& spec) {
  switch (spec.family) {
    case Family::Lattice8: return lattice8(spec.p, spec.q, spec.seed);
    case Family::RandomGnm: return random_gnm(spec.n, spec.m, spec.q, spec.seed);
    case Family::Complete: return complete(spec.n, spec.q, spec.seed);
    case Family::Path: return path(spec.n, spec.q, spec.seed);
    case Family::Cycle: return cycle(spec.n, spec.q, spec.seed);
  }
  throw Error(ErrorKind::ParseError, "unknown family");
}

Graph lattice8(std::uint64_t p, const std::vector<Weight>& q, std::uint64_t seed) {
  if (p < 2) throw Error(ErrorKind::ParseError, "lattice side must be at least 2");
  if (p > 46340) throw Error(ErrorKind::Overflow, "lattice side " + std::to_string(p) + " overflows node ids");
  check_q(q);
  const NodeId n = checked_nodes(p * p);
  Xorshift64Star rng(seed);
  std::vector<WeightedEdge> edges;
  edges.reserve(4 * p * p - 6 * p + 2);
  const auto side = static_cast<NodeId>(p);
  for (NodeId row = 0; row < side; ++row) {
    for (NodeId col = 0; col < side; ++col) {
      const NodeId id = row * side + col;
      if (col + 1 < side) edges.push_back({id, id + 1, draw(rng, q)});
      if (row + 1 < side) {
        edges.push_back({id, id + side, draw(rng, q)});
        if (col + 1 < side) edges.push_back({id, id + side + 1, draw(rng, q)});
        if (col > 0) edges.push_back({id, id + side - 1, draw(rng, q)});
      }
    }
  }
  return build_graph(n, edges);
}

Graph random_gnm(std::uint64_t n, std::uint64_t m, const std::vector<Weight>& q, std::uint64_t seed) {
  check_q(q);
  const NodeId nodes = checked_nodes(n);
  const std::uint64_t pairs = n < 2 ? 0 : n * (n - 1) / 2;
  if (m > pairs) {
    throw Error(ErrorKind::TooManyEdges,
                std::to_string(m) + " edges requested, " + std::to_string(pairs) + " pairs available");
  }
  Xorshift64Star rng(seed);
  // Floyd: for j in [pairs - m, pairs), take t in [0, j]; t if new, else j.
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(m * 2);
  std::vector<std::uint64_t> picks;
  picks.reserve(m);
  for (std::uint64_t j = pairs - m; j < pairs; ++j) {
    const std::uint64_t t = rng.below(j + 1);
    const std::uint64_t take = chosen.insert(t).second ? t : j;
    if (take == j) chosen.insert(j);
    picks.push_back(take);
  }
  std::sort(picks.begin(), picks.end());
  std::vector<WeightedEdge> edges;
  edges.reserve(m);
  // Pair index k enumerates (u, v), u < v, lexicographically.
  std::uint64_t u = 0;
  std::uint64_t row_start = 0;
  for (std::uint64_t k : picks) {
    while (k >= row_start + (n - 1 - u)) {
      row_start += n - 1 - u;
      ++u;
    }
    const std::uint64_t v = u + 1 + (k - row_start);
    edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v), draw(rng, q)});
  }
  return build_graph(nodes, edges);
}

Graph complete(std::uint64_t n, const std::vector<Weight>& q, std::uint64_t seed) {
  check_q(q);
  const NodeId nodes = checked_nodes(n);
  if (n > 65536) throw Error(ErrorKind::TooManyEdges, "complete graph on " + std::to_string(n) + " nodes");
  Xorshift64Star rng(seed);
  std::vector<WeightedEdge> edges;
  edges.reserve(n < 2 ? 0 : n * (n - 1) / 2);
  for (NodeId u = 0; u < nodes; ++u) {
    for (NodeId v = u + 1; v < nodes; ++v) edges.push_back({u, v, draw(rng, q)});
  }
  return build_graph(nodes, edges);
}

Graph path(std::uint64_t n, const std::vector<Weight>& q, std::uint64_t seed) {
  check_q(q);
  const NodeId nodes = checked_nodes(n);
  Xorshift64Star rng(seed);
  std::vector<WeightedEdge> edges;
  for (NodeId u = 0; u + 1 < nodes; ++u) edges.push_back({u, u + 1, draw(rng, q)});
  return build_graph(nodes, edges);
}

Graph cycle(std::uint64_t n, const std::vector<Weight>& q, std::uint64_t seed) {
  if (n < 3) throw Error(ErrorKind::TooManyEdges, "a simple cycle needs at least 3 nodes");
  check_q(q);
  const NodeId nodes = checked_nodes(n);
  Xorshift64Star rng(seed);
  std::vector<WeightedEdge> edges;
  for (NodeId u = 0; u + 1 < nodes; ++u) edges.push_back({u, u + 1, draw(rng, q)});
  edges.push_back({0, nodes - 1, draw(rng, q)});
  return build_graph(nodes, edges);
}

}  // namespace oag
