#include "oag/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace oag {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
bool parse_uint(std::string_view tok, T& out) {
  if (tok.empty() || tok.front() == '-' || tok.front() == '+') return false;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && ptr == tok.data() + tok.size();
}

bool is_blank_or_comment(std::string_view line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::vector<WeightedEdge> edges;
  std::vector<std::size_t> lines;

  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank_or_comment(line)) continue;
    const auto tok = split_ws(line);
    if (!have_header) {
      if (tok.size() != 2 || !parse_uint(tok[0], n) || !parse_uint(tok[1], m)) {
        throw Error(ErrorKind::ParseError, "expected header \"n m\"", lineno);
      }
      if (n > static_cast<std::uint64_t>(std::numeric_limits<std::int32_t>::max())) {
        throw Error(ErrorKind::TooLarge, "node count too large", lineno);
      }
      have_header = true;
      edges.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(m, 1u << 26)));
      continue;
    }
    if (tok.size() != 3) throw Error(ErrorKind::ParseError, "expected \"u v w\"", lineno);
    if (edges.size() == m) throw Error(ErrorKind::ParseError, "more edge lines than header announces", lineno);
    std::uint64_t u = 0;
    std::uint64_t v = 0;
    if (!parse_uint(tok[0], u) || !parse_uint(tok[1], v)) {
      throw Error(ErrorKind::ParseError, "malformed node id", lineno);
    }
    if (u >= n || v >= n) {
      throw Error(ErrorKind::IdOutOfRange, "node id outside [0, " + std::to_string(n) + ")", lineno);
    }
    auto w = parse_weight(tok[2]);
    if (!w) throw Error(ErrorKind::ParseError, "malformed weight \"" + std::string(tok[2]) + "\"", lineno);
    edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v), *w});
    lines.push_back(lineno);
  }
  if (!have_header) throw Error(ErrorKind::ParseError, "missing header", lineno + 1);
  if (edges.size() != m) {
    throw Error(ErrorKind::ParseError,
                "header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()),
                lineno + 1);
  }
  try {
    return build_graph(static_cast<NodeId>(n), edges);
  } catch (const EdgeError& e) {
    const std::string what = e.what();
    const auto colon = what.find(": ");
    throw Error(e.kind(), colon == std::string::npos ? what : what.substr(colon + 2), lines[e.edge_index()]);
  }
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

Graph read_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g, std::string_view comment) {
  if (!comment.empty()) out << "# " << comment << '\n';
  out << g.node_count() << ' ' << g.edge_count() << '\n';
  std::string buf;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    for (std::size_t a = g.arc_begin(u); a < g.arc_end(u); ++a) {
      const NodeId v = g.arc_leaf(a);
      if (v < u) continue;
      buf.clear();
      buf += std::to_string(u);
      buf.push_back(' ');
      buf += std::to_string(v);
      buf.push_back(' ');
      buf += to_string(g.arc_weight(a));
      buf.push_back('\n');
      out << buf;
    }
  }
}

void write_graph(const std::filesystem::path& path, const Graph& g, std::string_view comment) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path.string());
  write_graph(out, g, comment);
}

std::string format_graph(const Graph& g, std::string_view comment) {
  std::ostringstream out;
  write_graph(out, g, comment);
  return out.str();
}

}  // namespace oag
