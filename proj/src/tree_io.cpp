#include "oag/tree_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "oag/baselines.hpp"

namespace oag {

TreeFile to_tree_file(NodeId n, const MstResult& result) {
  TreeFile t;
  t.n = n;
  t.k = n - result.edges.size();
  t.total = result.total;
  t.rounds = result.rounds;
  t.edges = result.edges;
  return t;
}

void write_tree(std::ostream& out, const TreeFile& tree) {
  out << tree.n << ' ' << tree.k << ' ' << to_string(tree.total) << ' ' << tree.rounds << '\n';
  for (const auto& e : tree.edges) out << e.u << ' ' << e.v << ' ' << to_string(e.w) << '\n';
}

void write_tree(const std::filesystem::path& path, const TreeFile& tree) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, "cannot open " + path.string() + " for writing");
  write_tree(out, tree);
  if (!out) throw Error(ErrorKind::ParseError, "write to " + path.string() + " failed");
}

std::string format_tree(const TreeFile& tree) {
  std::ostringstream out;
  write_tree(out, tree);
  return out.str();
}

namespace {

template <class T>
T read_count(std::istringstream& in, std::size_t line, const char* what) {
  long long v = -1;
  if (!(in >> v) || v < 0 || static_cast<unsigned long long>(v) > std::numeric_limits<T>::max()) {
    throw Error(ErrorKind::ParseError, std::string("bad ") + what, line);
  }
  return static_cast<T>(v);
}

Weight read_weight(std::istringstream& in, std::size_t line) {
  std::string tok;
  if (!(in >> tok)) throw Error(ErrorKind::ParseError, "missing weight", line);
  const auto w = parse_weight(tok);
  if (!w) throw Error(ErrorKind::ParseError, "bad weight '" + tok + "'", line);
  return *w;
}

void expect_end(std::istringstream& in, std::size_t line) {
  std::string extra;
  if (in >> extra) throw Error(ErrorKind::ParseError, "unexpected token '" + extra + "'", line);
}

}  // namespace

TreeFile parse_tree(std::istream& in) {
  TreeFile t;
  std::string text;
  std::size_t line = 0;
  bool header = false;
  while (std::getline(in, text)) {
    ++line;
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos || text[first] == '#') continue;
    std::istringstream row(text);
    if (!header) {
      t.n = read_count<NodeId>(row, line, "node count");
      t.k = read_count<std::size_t>(row, line, "tree count");
      t.total = read_weight(row, line);
      t.rounds = read_count<std::size_t>(row, line, "round count");
      expect_end(row, line);
      header = true;
      continue;
    }
    WeightedEdge e;
    e.u = read_count<NodeId>(row, line, "endpoint");
    e.v = read_count<NodeId>(row, line, "endpoint");
    e.w = read_weight(row, line);
    expect_end(row, line);
    t.edges.push_back(e);
  }
  if (!header) throw Error(ErrorKind::ParseError, "missing header", line + 1);
  return t;
}

TreeFile parse_tree(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_tree(in);
}

TreeFile read_tree(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  return parse_tree(in);
}

namespace {

Verdict fail(std::string violation, std::string detail) { return {false, std::move(violation), std::move(detail)}; }

std::string edge_text(const WeightedEdge& e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

}  // namespace

Verdict verify_tree(const Graph& g, const TreeFile& tree) {
  const NodeId n = g.node_count();
  if (tree.n != n) {
    return fail("node count", "tree has " + std::to_string(tree.n) + " nodes, graph has " + std::to_string(n));
  }
  for (const auto& e : tree.edges) {
    const auto w = e.u < n && e.v < n ? g.edge_weight(e.u, e.v) : std::nullopt;
    if (!w) return fail("unknown edge", edge_text(e));
    if (*w != e.w) return fail("weight mismatch", edge_text(e) + " listed " + to_string(e.w) + ", graph has " + to_string(*w));
  }
  baselines::DisjointSet ds(n);
  Weight sum;
  for (const auto& e : tree.edges) {
    if (!ds.unite(e.u, e.v)) return fail("cycle", "edge " + edge_text(e) + " closes a cycle");
    sum += e.w;
  }
  const std::size_t components = baselines::component_count(g);
  if (ds.sets() != components) {
    return fail("not spanning", std::to_string(ds.sets()) + " trees for " + std::to_string(components) + " components");
  }
  if (sum != tree.total) return fail("total mismatch", "header says " + to_string(tree.total) + ", edges sum to " + to_string(sum));
  const Weight best = baselines::kruskal(g).total;
  if (sum != best) return fail("not minimum", "weight " + to_string(sum) + ", minimum " + to_string(best));
  return {};
}

}  // namespace oag
