#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "oag/generators.hpp"
#include "oag/msf.hpp"

namespace oag::cli {

inline constexpr int kOk = 0;
inline constexpr int kVerifyFailed = 1;
inline constexpr int kInputError = 2;

/// "ooag", "oag_then_merge", "koag_seeded" run the engine; "kruskal" and
/// "prim" run the baselines (prim restarts per component).
MstResult run_algo(const Graph& g, const std::string& algo, bool snip = true);
bool known_algo(const std::string& algo);

/// Flat "key=value" lines.
std::string stats_record(const std::string& algo, const Graph& g, const MstResult& result);

struct BenchRecord {
  std::string spec;
  std::string algo;
  std::size_t n = 0;
  std::size_t arcs = 0;
  std::size_t k = 0;
  std::size_t rounds = 0;
  std::uint64_t comparisons = 0;
  double ratio = 0.0;  ///< n / comparisons
  PhaseTimes median;   ///< per-phase medians over repeats
  double median_total_ms = 0.0;
  Weight total;
  bool failed = false;
  std::string error;
};

inline constexpr const char* kCsvHeader =
    "spec,algo,n,arcs,k,rounds,comparisons_A,ratio,phase1_ms,phase2_ms,phase3_ms,total_weight";

std::string csv_row(const BenchRecord& r);

/// Runs `algo` `repeats` times on `g`; non-timing fields come from the last
/// run, timings are medians. Totals are checked against Kruskal when
/// `expected` is given.
BenchRecord bench_one(const Graph& g, const std::string& spec, const std::string& algo, std::size_t repeats,
                      std::optional<Weight> expected = std::nullopt);

/// Side lengths from "lo:hi:step", "lo:hi" (step 1) or "a,b,c".
std::vector<std::uint64_t> parse_grid(const std::string& text);

int cmd_gen(const GenSpec& spec, const std::string& out_path, std::ostream& out, std::ostream& err);
int cmd_build(const std::string& input, const std::string& algo, const std::string& output,
              const std::string& stats_path, bool snip, std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& input, const std::string& tree, std::ostream& out, std::ostream& err);
int cmd_bench(const std::vector<std::uint64_t>& grid, const std::vector<Weight>& q, std::uint64_t seed,
              const std::vector<std::string>& algos, std::size_t repeats, const std::string& csv_path,
              std::ostream& out, std::ostream& err);
int cmd_kvalue(const std::string& input, bool strict, bool list, std::ostream& out, std::ostream& err);

/// Full command line front end. argv[0] is the program name.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oag::cli
