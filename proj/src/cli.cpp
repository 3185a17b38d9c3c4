#include "oag/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "oag/baselines.hpp"
#include "oag/graph_io.hpp"
#include "oag/kernels.hpp"
#include "oag/simd/reduce.hpp"
#include "oag/tree_io.hpp"

namespace oag::cli {

bool known_algo(const std::string& algo) {
  return parse_mode(algo).has_value() || algo == "kruskal" || algo == "prim";
}

MstResult run_algo(const Graph& g, const std::string& algo, bool snip) {
  if (algo == "kruskal") return baselines::kruskal(g);
  if (algo == "prim") return baselines::prim_forest(g);
  const auto mode = parse_mode(algo);
  if (!mode) throw Error(ErrorKind::ParseError, "unknown algorithm '" + algo + "'");
  RunOptions options;
  options.mode = *mode;
  options.snip = snip;
  return run(g, options);
}

namespace {

std::string fixed(double v, int digits) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

double ratio_of(std::size_t n, std::uint64_t comparisons) {
  return comparisons == 0 ? 0.0 : static_cast<double>(n) / static_cast<double>(comparisons);
}

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 ? v[mid] : (v[mid - 1] + v[mid]) / 2.0;
}

void write_text(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path.empty() || path == "-") {
    fallback << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::ParseError, "cannot open " + path + " for writing");
  f << text;
  if (!f) throw Error(ErrorKind::ParseError, "write to " + path + " failed");
}

}  // namespace

std::string stats_record(const std::string& algo, const Graph& g, const MstResult& r) {
  std::ostringstream s;
  s << "algo=" << algo << '\n'
    << "n=" << g.node_count() << '\n'
    << "arcs=" << g.arc_count() << '\n'
    << "edges=" << r.edges.size() << '\n'
    << "k=" << r.k_after_node_stage << '\n'
    << "rounds=" << r.rounds << '\n'
    << "comparisons_A=" << r.comparisons << '\n'
    << "ratio=" << fixed(ratio_of(g.node_count(), r.comparisons), 6) << '\n'
    << "node_stage_arc_touches=" << r.node_stage_arc_touches << '\n'
    << "clusters=" << r.clusters << '\n'
    << "phase1_ms=" << fixed(r.phases.fleet_ms, 3) << '\n'
    << "phase2_ms=" << fixed(r.phases.node_stage_ms, 3) << '\n'
    << "phase3_ms=" << fixed(r.phases.merge_ms, 3) << '\n'
    << "total_weight=" << to_string(r.total) << '\n'
    << "isa=" << simd::to_string(simd::active_isa()) << '\n';
  for (std::size_t i = 0; i < r.per_round.size(); ++i) {
    const auto& round = r.per_round[i];
    s << "round" << i + 1 << "=clusters:" << round.clusters_before << "->" << round.clusters_after
      << " arcs:" << round.arcs_scanned << " nodes:" << round.nodes_scanned << " rejected:" << round.rejected_bridges
      << '\n';
  }
  return s.str();
}

std::string csv_row(const BenchRecord& r) {
  std::ostringstream s;
  s << r.spec << ',' << r.algo << ',' << r.n << ',' << r.arcs << ',';
  if (r.failed) {
    s << "NA,NA,NA,NA,NA,NA,NA,FAILED";
    return s.str();
  }
  s << r.k << ',' << r.rounds << ',' << r.comparisons << ',' << fixed(r.ratio, 6) << ','
    << fixed(r.median.fleet_ms, 3) << ',' << fixed(r.median.node_stage_ms, 3) << ','
    << fixed(r.median.merge_ms, 3) << ',' << to_string(r.total);
  return s.str();
}

BenchRecord bench_one(const Graph& g, const std::string& spec, const std::string& algo, std::size_t repeats,
                      std::optional<Weight> expected) {
  BenchRecord rec;
  rec.spec = spec;
  rec.algo = algo;
  rec.n = g.node_count();
  rec.arcs = g.arc_count();
  std::vector<double> p1, p2, p3, total;
  try {
    for (std::size_t i = 0; i < std::max<std::size_t>(repeats, 1); ++i) {
      const auto t0 = std::chrono::steady_clock::now();
      const MstResult r = run_algo(g, algo);
      total.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
      p1.push_back(r.phases.fleet_ms);
      p2.push_back(r.phases.node_stage_ms);
      p3.push_back(r.phases.merge_ms);
      rec.k = r.k_after_node_stage;
      rec.rounds = r.rounds;
      rec.comparisons = r.comparisons;
      rec.total = r.total;
      if (expected && r.total != *expected) {
        throw Error(ErrorKind::InconsistentModel,
                    "total " + to_string(r.total) + " differs from Kruskal " + to_string(*expected));
      }
    }
  } catch (const std::exception& e) {
    rec.failed = true;
    rec.error = e.what();
    return rec;
  }
  rec.ratio = ratio_of(rec.n, rec.comparisons);
  rec.median = {median(p1), median(p2), median(p3)};
  rec.median_total_ms = median(total);
  return rec;
}

std::vector<std::uint64_t> parse_grid(const std::string& text) {
  auto number = [&](const std::string& tok) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tok.size()) throw Error(ErrorKind::ParseError, "bad grid value '" + tok + "'");
    return static_cast<std::uint64_t>(v);
  };
  std::vector<std::uint64_t> out;
  if (text.find(':') != std::string::npos) {
    std::vector<std::uint64_t> parts;
    std::stringstream ss(text);
    for (std::string tok; std::getline(ss, tok, ':');) parts.push_back(number(tok));
    if (parts.size() < 2 || parts.size() > 3) throw Error(ErrorKind::ParseError, "grid needs lo:hi[:step]");
    const std::uint64_t step = parts.size() == 3 ? parts[2] : 1;
    if (step == 0 || parts[1] < parts[0]) throw Error(ErrorKind::ParseError, "bad grid '" + text + "'");
    for (std::uint64_t p = parts[0]; p <= parts[1]; p += step) out.push_back(p);
    return out;
  }
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) out.push_back(number(tok));
  if (out.empty()) throw Error(ErrorKind::ParseError, "empty grid");
  return out;
}

int cmd_gen(const GenSpec& spec, const std::string& out_path, std::ostream& out, std::ostream& err) {
  try {
    const Graph g = generate(spec);
    write_text(out_path, format_graph(g, describe(spec)), out);
    return kOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

int cmd_build(const std::string& input, const std::string& algo, const std::string& output,
              const std::string& stats_path, bool snip, std::ostream& out, std::ostream& err) {
  try {
    if (!known_algo(algo)) throw Error(ErrorKind::ParseError, "unknown algorithm '" + algo + "'");
    const Graph g = read_graph(input);
    const MstResult r = run_algo(g, algo, snip);
    write_text(output, format_tree(to_tree_file(g.node_count(), r)), out);
    if (!stats_path.empty()) write_text(stats_path, stats_record(algo, g, r), err);
    return kOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

int cmd_verify(const std::string& input, const std::string& tree, std::ostream& out, std::ostream& err) {
  Verdict v;
  try {
    v = verify_tree(read_graph(input), read_tree(tree));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  if (!v.ok) {
    out << v.violation << ": " << v.detail << '\n';
    return kVerifyFailed;
  }
  out << "ok\n";
  return kOk;
}

int cmd_bench(const std::vector<std::uint64_t>& grid, const std::vector<Weight>& q, std::uint64_t seed,
              const std::vector<std::string>& algos, std::size_t repeats, const std::string& csv_path,
              std::ostream& out, std::ostream& err) {
  for (const auto& a : algos) {
    if (!known_algo(a)) {
      err << "error: unknown algorithm '" << a << "'\n";
      return kInputError;
    }
  }
  std::ostringstream csv;
  csv << kCsvHeader << '\n';
  bool any_failed = false;
  for (std::uint64_t p : grid) {
    const GenSpec spec{.family = Family::Lattice8, .p = p, .q = q, .seed = seed};
    const std::string echo = describe(spec);
    Graph g;
    std::optional<Weight> expected;
    try {
      g = generate(spec);
      expected = baselines::kruskal(g).total;
    } catch (const std::exception& e) {
      err << "error: " << echo << ": " << e.what() << '\n';
      for (const auto& a : algos) {
        BenchRecord rec;
        rec.spec = echo;
        rec.algo = a;
        rec.failed = true;
        csv << csv_row(rec) << '\n';
      }
      any_failed = true;
      continue;
    }
    for (const auto& a : algos) {
      const BenchRecord rec = bench_one(g, echo, a, repeats, expected);
      if (rec.failed) {
        err << "error: " << echo << " " << a << ": " << rec.error << '\n';
        any_failed = true;
      }
      csv << csv_row(rec) << '\n';
    }
  }
  try {
    write_text(csv_path, csv.str(), out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return any_failed ? kVerifyFailed : kOk;
}

int cmd_kvalue(const std::string& input, bool strict, bool list, std::ostream& out, std::ostream& err) {
  KernelReport report;
  try {
    report = analyze_kernels(read_graph(input), strict ? KernelRule::PureBeam : KernelRule::TowboatFree);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  out << "k=" << report.k << '\n';
  std::map<std::size_t, std::size_t> sizes;
  for (const auto& kernel : report.kernels) ++sizes[kernel.size()];
  for (const auto& [size, count] : sizes) out << "size " << size << ": " << count << '\n';
  if (list) out << dump_kernels(report);
  return kOk;
}

namespace {

std::optional<Family> parse_family(const std::string& name) {
  if (name == "lattice" || name == "lattice8") return Family::Lattice8;
  if (name == "gnm" || name == "random_gnm") return Family::RandomGnm;
  if (name == "complete") return Family::Complete;
  if (name == "path") return Family::Path;
  if (name == "cycle") return Family::Cycle;
  return std::nullopt;
}

bool apply_isa(const std::string& isa, std::ostream& err) {
  if (isa.empty()) return true;  // keep the environment's choice
  if (isa == "auto") return simd::set_isa(simd::detect_isa());
  const auto chosen = isa == "scalar" ? std::optional(simd::Isa::Scalar)
                      : isa == "avx2" ? std::optional(simd::Isa::Avx2)
                                      : std::nullopt;
  if (!chosen) {
    err << "error: unknown isa '" << isa << "'\n";
    return false;
  }
  if (!simd::set_isa(*chosen)) {
    err << "error: isa '" << isa << "' is not available on this machine\n";
    return false;
  }
  return true;
}

}  // namespace

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum spanning forests by subjection-driven aggregation"};
  app.require_subcommand(1);
  std::string isa;
  app.add_option("--isa", isa, "Reduction kernels: auto, scalar or avx2 (default: OAG_ISA or auto)");

  std::string family = "lattice";
  std::uint64_t p = 0, n = 0, m = 0, seed = 0;
  std::string q_text = "1:10", out_path;
  auto* gen = app.add_subcommand("gen", "Generate a graph");
  gen->add_option("family", family, "lattice, gnm, complete, path or cycle");
  gen->add_option("--p", p, "Lattice side length");
  gen->add_option("--n", n, "Node count");
  gen->add_option("--m", m, "Edge count (gnm)");
  gen->add_option("--q", q_text, "Weight set: lo:hi or a;b;c");
  gen->add_option("--seed", seed);
  gen->add_option("--out", out_path, "Output file (default stdout)");

  std::string input, algo = "ooag", tree_out, stats_path;
  bool no_snip = false;
  auto* build = app.add_subcommand("build", "Build a minimum spanning forest");
  build->add_option("--input", input)->required();
  build->add_option("--algo", algo, "ooag, oag_then_merge, koag_seeded, kruskal or prim");
  build->add_option("--out", tree_out, "Tree file (default stdout)");
  build->add_option("--stats", stats_path, "Stats record file ('-' for stderr)");
  build->add_flag("--no-snip", no_snip, "Scan every member in each merge round");

  std::string tree_in;
  auto* verify = app.add_subcommand("verify", "Check a tree file against its graph");
  verify->add_option("--input", input)->required();
  verify->add_option("--tree", tree_in)->required();

  std::string grid_text = "100:300:100", algos_text = "ooag,kruskal", csv_path;
  std::size_t repeats = 3;
  auto* bench = app.add_subcommand("bench", "Benchmark lattice instances");
  bench->add_option("--p", grid_text, "Side lengths: lo:hi:step or a,b,c");
  bench->add_option("--q", q_text, "Weight set");
  bench->add_option("--seed", seed);
  bench->add_option("--algos", algos_text, "Comma separated algorithm list");
  bench->add_option("--repeats", repeats);
  bench->add_option("--csv", csv_path, "CSV file (default stdout)");

  bool strict = false, list = false;
  auto* kvalue = app.add_subcommand("kvalue", "Count kernels");
  kvalue->add_option("--input", input)->required();
  kvalue->add_flag("--strict", strict, "Also require empty boat lists");
  kvalue->add_flag("--list", list, "Print every kernel");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  if (!apply_isa(isa, err)) return kInputError;

  try {
    if (gen->parsed()) {
      const auto fam = parse_family(family);
      if (!fam) throw Error(ErrorKind::ParseError, "unknown family '" + family + "'");
      GenSpec spec{.family = *fam, .p = p, .n = n, .m = m, .q = parse_weight_set(q_text), .seed = seed};
      return cmd_gen(spec, out_path, out, err);
    }
    if (build->parsed()) return cmd_build(input, algo, tree_out, stats_path, !no_snip, out, err);
    if (verify->parsed()) return cmd_verify(input, tree_in, out, err);
    if (bench->parsed()) {
      std::vector<std::string> algos;
      std::stringstream ss(algos_text);
      for (std::string a; std::getline(ss, a, ',');) {
        if (!a.empty()) algos.push_back(a);
      }
      return cmd_bench(parse_grid(grid_text), parse_weight_set(q_text), seed, algos, repeats, csv_path, out, err);
    }
    if (kvalue->parsed()) return cmd_kvalue(input, strict, list, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace oag::cli
