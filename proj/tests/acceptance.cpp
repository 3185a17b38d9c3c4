// Acceptance suite: one PASS/FAIL line per criterion; exit status is the
// number of failing criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "oag/baselines.hpp"
#include "oag/fleet.hpp"
#include "oag/generators.hpp"
#include "oag/kernels.hpp"
#include "oag/msf.hpp"
#include "oag/tree_io.hpp"
#include "oracles.hpp"

using namespace oag;

namespace {

using Clock = std::chrono::steady_clock;

constexpr Mode kModes[] = {Mode::OagThenMerge, Mode::Ooag, Mode::KoagSeeded};

struct Outcome {
  bool pass = true;
  std::string note;
  std::size_t violations = 0;
  std::string first;

  void violate(const std::string& what) {
    if (violations++ == 0) first = what;
    pass = false;
  }
};

int failures = 0;

void report(int id, const char* title, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.first = std::string("exception: ") + e.what();
  }
  const double s = std::chrono::duration<double>(Clock::now() - t0).count();
  std::printf("%s AC%d %s (%.1fs)", o.pass ? "PASS" : "FAIL", id, title, s);
  if (!o.note.empty()) std::printf(" %s", o.note.c_str());
  if (o.violations) std::printf(" violations=%zu first: %s", o.violations, o.first.c_str());
  else if (!o.pass && !o.first.empty()) std::printf(" %s", o.first.c_str());
  std::printf("\n");
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

std::size_t round_bound(NodeId n) {
  return n < 2 ? 1 : static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(n)))) + 1;
}

// Exhaustive weight assignments over Q = {1,2,3} on K_n.
template <class F>
void each_complete_assignment(NodeId n, F&& fn) {
  std::vector<WeightedEdge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) edges.push_back({u, v, Weight::from_units(1)});
  }
  std::vector<int> digit(edges.size(), 0);
  for (;;) {
    for (std::size_t i = 0; i < edges.size(); ++i) edges[i].w = Weight::from_units(1 + digit[i]);
    fn(build_graph(n, edges));
    std::size_t i = 0;
    while (i < digit.size() && ++digit[i] == 3) digit[i++] = 0;
    if (i == digit.size()) break;
  }
}

struct LatticeRun {
  std::uint64_t p = 0;
  double median_ms = 0;
  std::size_t n = 0;
  std::uint64_t comparisons = 0;
  std::size_t k = 0;
  std::size_t rounds = 0;
  bool correct = false;
  Graph graph;
};

std::vector<LatticeRun> lattice_runs;

}  // namespace

int main() {
  const auto& samples = corpus::standard();
  std::printf("corpus: %zu graphs\n", samples.size());

  report(1, "oracle equivalence, all modes vs Kruskal and verify", [&] {
    Outcome o;
    for (const auto& s : samples) {
      const Weight expected = oracle::mst_total(s.graph);
      if (baselines::kruskal(s.graph).total != expected) o.violate(s.name + " kruskal disagrees with reference");
      for (Mode m : kModes) {
        const MstResult r = run(s.graph, m);
        if (r.total != expected) o.violate(s.name + " " + std::string(to_string(m)) + " total " + to_string(r.total));
        const TreeFile t = parse_tree(format_tree(to_tree_file(s.graph.node_count(), r)));
        const Verdict v = verify_tree(s.graph, t);
        if (!v.ok) o.violate(s.name + " " + std::string(to_string(m)) + " verify: " + v.violation);
      }
    }
    o.note = "graphs=" + std::to_string(samples.size()) + " runs=" + std::to_string(3 * samples.size());
    return o;
  });

  report(2, "brute-force ground truth (n<=7 x500, exhaustive K4/K5 over {1,2,3})", [&] {
    Outcome o;
    std::size_t count = 0;
    for (std::uint64_t seed = 1; seed <= 500; ++seed) {
      const Graph g = corpus::small_connected(seed);
      ++count;
      if (run(g, Mode::Ooag).total != baselines::brute_force(g)) o.violate("seed " + std::to_string(seed));
    }
    for (NodeId n : {NodeId{4}, NodeId{5}}) {
      each_complete_assignment(n, [&](const Graph& g) {
        ++count;
        if (run(g, Mode::Ooag).total != baselines::brute_force(g)) o.violate("K" + std::to_string(n) + " assignment");
      });
    }
    o.note = "graphs=" + std::to_string(count);
    return o;
  });

  report(3, "chains end at a beam member within n steps, MVC non-increasing", [&] {
    Outcome o;
    std::size_t chains = 0;
    for (const auto& s : samples) {
      const Graph& g = s.graph;
      const FleetModel f = build_fleet(g);
      const auto ref = oracle::mvc_table(g);
      std::vector<bool> beam(g.node_count(), false);
      for (const auto& e : g.edges()) {
        if (e.w == ref[e.u].mvc && e.w == ref[e.v].mvc) beam[e.u] = beam[e.v] = true;
      }
      for (NodeId r = 0; r < g.node_count(); ++r) {
        if (ref[r].isolated) continue;
        ++chains;
        const auto chain = trace_chain(f, r);
        bool ok = !chain.empty() && chain.size() <= g.node_count() && chain.front() == r && beam[chain.back()];
        for (std::size_t i = 0; ok && i + 1 < chain.size(); ++i) {
          ok = !beam[chain[i]] && ref[chain[i]].target == chain[i + 1] && ref[chain[i + 1]].mvc <= ref[chain[i]].mvc;
        }
        if (!ok) o.violate(s.name + " start " + std::to_string(r));
      }
    }
    o.note = "chains=" + std::to_string(chains);
    return o;
  });

  report(4, "every cluster is a tree after the node stage and every round", [&] {
    Outcome o;
    std::size_t checks = 0;
    for (const auto& s : samples) {
      for (Mode m : kModes) {
        RunOptions opt;
        opt.mode = m;
        opt.observer = [&](const Forest& f, std::size_t round) {
          ++checks;
          const auto problem = oracle::forest_problem(f);
          if (!problem.empty()) {
            o.violate(s.name + " " + std::string(to_string(m)) + " round " + std::to_string(round) + ": " + problem);
          }
        };
        run(s.graph, opt);
      }
    }
    o.note = "forest states=" + std::to_string(checks);
    return o;
  });

  report(5, "rounds <= ceil(log2 n) + 1", [&] {
    Outcome o;
    std::size_t worst_slack = 1000;
    for (const auto& s : samples) {
      const std::size_t bound = round_bound(s.graph.node_count());
      for (Mode m : kModes) {
        const auto r = run(s.graph, m);
        if (r.rounds > bound) o.violate(s.name + " rounds " + std::to_string(r.rounds));
        else worst_slack = std::min(worst_slack, bound - r.rounds);
      }
    }
    o.note = "min slack=" + std::to_string(worst_slack);
    return o;
  });

  report(6, "snip on/off produce identical edges (1000 graphs)", [&] {
    Outcome o;
    const int qs[] = {1, 2, 3, 5};
    for (std::uint64_t i = 0; i < 1000; ++i) {
      GenSpec spec;
      if (i % 4 == 3) {
        spec = {.family = Family::Lattice8, .p = 2 + i % 15, .q = corpus::q_range(qs[i % 4]), .seed = 50'000 + i};
      } else {
        const std::uint64_t n = 2 + i % 60;
        spec = {.family = Family::RandomGnm, .n = n, .m = std::min(n * (n - 1) / 2, n * (1 + i % 5)),
                .q = corpus::q_range(qs[i % 4]), .seed = 50'000 + i};
      }
      const Graph g = generate(spec);
      for (Mode m : kModes) {
        RunOptions on, off;
        on.mode = off.mode = m;
        off.snip = false;
        if (run(g, on).edges != run(g, off).edges) o.violate(describe(spec) + " " + std::string(to_string(m)));
      }
    }
    return o;
  });

  report(7, "lattice scaling p=100..1000, elapsed(1000)/elapsed(500) <= 6", [&] {
    Outcome o;
    constexpr int kRepeats = 3;
    std::string note;
    double t500 = 0, t1000 = 0;
    for (std::uint64_t p : {100, 300, 500, 700, 1000}) {
      LatticeRun lr;
      lr.p = p;
      lr.graph = lattice8(p, corpus::q_range(10), 42);
      const Weight expected = baselines::kruskal(lr.graph).total;
      std::vector<double> times;
      MstResult r;
      for (int i = 0; i < kRepeats; ++i) {
        const auto t0 = Clock::now();
        r = run(lr.graph, Mode::Ooag);
        times.push_back(std::chrono::duration<double, std::milli>(Clock::now() - t0).count());
      }
      std::sort(times.begin(), times.end());
      lr.median_ms = times[kRepeats / 2];
      lr.n = lr.graph.node_count();
      lr.comparisons = r.comparisons;
      lr.k = r.k_after_node_stage;
      lr.rounds = r.rounds;
      lr.correct = r.total == expected;
      if (!lr.correct) o.violate("p=" + std::to_string(p) + " total differs from Kruskal");
      if (p == 500) t500 = lr.median_ms;
      if (p == 1000) t1000 = lr.median_ms;
      char buf[160];
      std::snprintf(buf, sizeof buf, "p=%llu:%.1fms/k=%zu/rounds=%zu ", static_cast<unsigned long long>(p),
                    lr.median_ms, lr.k, lr.rounds);
      note += buf;
      lattice_runs.push_back(std::move(lr));
    }
    const double ratio = t500 > 0 ? t1000 / t500 : 0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "ratio=%.2f", ratio);
    o.note = note + buf;
    if (!(ratio > 0 && ratio <= 6.0)) {
      o.pass = false;
      o.first = "elapsed ratio above 6";
    }
    return o;
  });

  report(8, "ratio n/A at p=1000 strictly exceeds p=100", [&] {
    Outcome o;
    const auto find = [&](std::uint64_t p) -> const LatticeRun* {
      for (const auto& lr : lattice_runs) {
        if (lr.p == p) return &lr;
      }
      return nullptr;
    };
    const LatticeRun* small = find(100);
    const LatticeRun* large = find(1000);
    if (!small || !large) {
      o.pass = false;
      o.first = "lattice runs missing";
      return o;
    }
    const double r100 = static_cast<double>(small->n) / static_cast<double>(small->comparisons);
    const double r1000 = static_cast<double>(large->n) / static_cast<double>(large->comparisons);
    char buf[160];
    std::snprintf(buf, sizeof buf, "ratio(100)=%.6f A=%llu ratio(1000)=%.6f A=%llu", r100,
                  static_cast<unsigned long long>(small->comparisons), r1000,
                  static_cast<unsigned long long>(large->comparisons));
    o.note = buf;
    o.pass = r1000 > r100;
    return o;
  });

  report(9, "kernels equal the brute-force enumerator", [&] {
    Outcome o;
    std::size_t graphs = 0;
    auto check = [&](const std::string& name, const Graph& g) {
      ++graphs;
      const FleetModel f = build_fleet(g);
      for (KernelRule rule : {KernelRule::TowboatFree, KernelRule::PureBeam}) {
        const auto report = detect_kernels(f, rule);
        if (report.kernels != oracle::kernels(g, rule == KernelRule::PureBeam) || report.k != report.kernels.size()) {
          o.violate(name);
        }
      }
    };
    for (const auto& s : samples) check(s.name, s.graph);
    for (const auto& lr : lattice_runs) check("lattice8 p=" + std::to_string(lr.p), lr.graph);
    o.note = "graphs=" + std::to_string(graphs);
    return o;
  });

  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
