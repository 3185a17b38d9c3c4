#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "oag/cli.hpp"
#include "oag/tree_io.hpp"

namespace fs = std::filesystem;
using namespace oag;

namespace {

struct Workdir {
  fs::path dir;
  Workdir() {
    dir = fs::temp_directory_path() / ("oag-cli-test-" + std::to_string(std::rand()));
    fs::create_directories(dir);
  }
  ~Workdir() { fs::remove_all(dir); }
  std::string file(const std::string& name, const std::string& text) const {
    const auto p = dir / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir / name).string(); }
};

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run oag_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "oag");
  std::ostringstream out, err;
  const int code = cli::main(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

const char* kTriangle = "3 3\n0 1 1\n1 2 2\n0 2 3\n";
const char* kSquare = "4 4\n0 1 1\n1 2 1\n2 3 1\n0 3 2\n";

}  // namespace

TEST_CASE("build writes a tree and stats") {
  Workdir wd;
  const auto g = wd.file("tri.txt", kTriangle);
  for (const std::string algo : {"ooag", "oag_then_merge", "koag_seeded", "kruskal", "prim"}) {
    CAPTURE(algo);
    const auto r = oag_cli({"build", "--input", g, "--algo", algo, "--out", wd.path("t.txt"), "--stats", wd.path("s.txt")});
    CHECK(r.code == 0);
    const TreeFile t = read_tree(wd.path("t.txt"));
    CHECK(t.total == Weight::from_units(3));
    CHECK(t.k == 1);
    CHECK(slurp(wd.path("s.txt")).find("total_weight=3\n") != std::string::npos);
    CHECK(oag_cli({"verify", "--input", g, "--tree", wd.path("t.txt")}).code == 0);
  }
  const auto stdout_tree = oag_cli({"build", "--input", g});
  CHECK(stdout_tree.code == 0);
  CHECK(stdout_tree.out == "3 1 3 0\n0 1 1\n1 2 2\n");
}

TEST_CASE("build input errors exit 2 with the line") {
  Workdir wd;
  const auto bad = wd.file("bad.txt", "3 2\n0 1 1\n1 x 2\n");
  const auto r = oag_cli({"build", "--input", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 3") != std::string::npos);
  CHECK(oag_cli({"build", "--input", wd.path("missing.txt")}).code == 2);
  CHECK(oag_cli({"build", "--input", wd.file("tri.txt", kTriangle), "--algo", "boruvka"}).code == 2);
  CHECK(oag_cli({"frobnicate"}).code == 2);
  CHECK(oag_cli({}).code == 2);
  CHECK(oag_cli({"--help"}).code == 0);
}

TEST_CASE("verify names the first violated property") {
  Workdir wd;
  const auto tri = wd.file("tri.txt", kTriangle);
  const auto cyc = wd.file("cyc.txt", "3 0 6 0\n0 1 1\n0 2 3\n1 2 2\n");
  auto r = oag_cli({"verify", "--input", tri, "--tree", cyc});
  CHECK(r.code == 1);
  CHECK(r.out.rfind("cycle", 0) == 0);
  const auto sq = wd.file("sq.txt", kSquare);
  const auto heavy = wd.file("heavy.txt", "4 1 4 0\n0 1 1\n0 3 2\n1 2 1\n");
  r = oag_cli({"verify", "--input", sq, "--tree", heavy});
  CHECK(r.code == 1);
  CHECK(r.out.rfind("not minimum", 0) == 0);
  const auto partial = wd.file("partial.txt", "4 2 2 0\n0 1 1\n1 2 1\n");
  CHECK(oag_cli({"verify", "--input", sq, "--tree", partial}).out.rfind("not spanning", 0) == 0);
  const auto unknown = wd.file("unknown.txt", "4 1 3 0\n0 1 1\n1 2 1\n1 3 1\n");
  CHECK(oag_cli({"verify", "--input", sq, "--tree", unknown}).out.rfind("unknown edge", 0) == 0);
  const auto wrongw = wd.file("wrongw.txt", "4 1 3 0\n0 1 1\n1 2 1\n2 3 2\n");
  CHECK(oag_cli({"verify", "--input", sq, "--tree", wrongw}).out.rfind("weight mismatch", 0) == 0);
  const auto badtotal = wd.file("badtotal.txt", "4 1 4 0\n0 1 1\n1 2 1\n2 3 1\n");
  CHECK(oag_cli({"verify", "--input", sq, "--tree", badtotal}).out.rfind("total mismatch", 0) == 0);
  const auto good = wd.file("good.txt", "4 1 3 0\n0 1 1\n1 2 1\n2 3 1\n");
  CHECK(oag_cli({"verify", "--input", sq, "--tree", good}).code == 0);
  CHECK(oag_cli({"verify", "--input", sq, "--tree", wd.file("junk.txt", "4 x\n")}).code == 2);
}

TEST_CASE("gen echoes the spec") {
  Workdir wd;
  auto r = oag_cli({"gen", "lattice", "--p", "3", "--q", "1:10", "--seed", "42", "--out", wd.path("g.txt")});
  CHECK(r.code == 0);
  const auto text = slurp(wd.path("g.txt"));
  CHECK(text.rfind("# lattice8 p=3 q=1:10 seed=42\n9 20\n", 0) == 0);
  r = oag_cli({"gen", "gnm", "--n", "5", "--m", "20"});
  CHECK(r.code == 2);
  r = oag_cli({"gen", "path", "--n", "4", "--q", "1"});
  CHECK(r.out == "# path n=4 q=1 seed=0\n4 3\n0 1 1\n1 2 1\n2 3 1\n");
}

TEST_CASE("bench rows") {
  Workdir wd;
  const auto r = oag_cli({"bench", "--p", "100:300:100", "--q", "1:10", "--seed", "42", "--algos", "ooag,kruskal",
                      "--repeats", "1", "--csv", wd.path("b.csv")});
  CHECK(r.code == 0);
  std::istringstream csv(slurp(wd.path("b.csv")));
  std::vector<std::string> lines;
  for (std::string line; std::getline(csv, line);) lines.push_back(line);
  REQUIRE(lines.size() == 7);
  CHECK(lines[0] == cli::kCsvHeader);
  CHECK(lines[1].rfind("lattice8 p=100 q=1:10 seed=42,ooag,10000,", 0) == 0);

  // Non-timing columns are reproducible.
  auto strip = [](const std::string& row) {
    std::vector<std::string> cols;
    std::stringstream s(row);
    for (std::string c; std::getline(s, c, ',');) cols.push_back(c);
    return std::vector<std::string>{cols[0], cols[1], cols[2], cols[3], cols[4], cols[5], cols[6], cols[7], cols[11]};
  };
  const auto again = oag_cli({"bench", "--p", "100", "--algos", "ooag", "--seed", "42", "--repeats", "2"});
  std::istringstream again_csv(again.out);
  std::string header, row;
  std::getline(again_csv, header);
  std::getline(again_csv, row);
  CHECK(strip(row) == strip(lines[1]));
  CHECK(oag_cli({"bench", "--p", "1", "--algos", "ooag"}).code == 1);
  CHECK(oag_cli({"bench", "--algos", "nope"}).code == 2);
}

TEST_CASE("kvalue") {
  Workdir wd;
  auto r = oag_cli({"kvalue", "--input", wd.file("p.txt", "4 3\n0 1 3\n1 2 2\n2 3 1\n")});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("k=1\n", 0) == 0);
  r = oag_cli({"kvalue", "--input", wd.file("d.txt", "6 3\n0 1 1\n2 3 1\n4 5 2\n")});
  CHECK(r.out.rfind("k=3\n", 0) == 0);
  CHECK(r.out.find("size 2: 3") != std::string::npos);
  oag_cli({"gen", "lattice", "--p", "100", "--seed", "5", "--out", wd.path("l.txt")});
  const auto a = oag_cli({"kvalue", "--input", wd.path("l.txt")});
  const auto b = oag_cli({"kvalue", "--input", wd.path("l.txt")});
  CHECK(a.out == b.out);
  CHECK(oag_cli({"kvalue", "--input", wd.path("nothing.txt")}).code == 2);
}

TEST_CASE("isa flag") {
  Workdir wd;
  const auto g = wd.file("tri.txt", kTriangle);
  CHECK(oag_cli({"--isa", "scalar", "build", "--input", g}).code == 0);
  CHECK(oag_cli({"--isa", "sse9", "build", "--input", g}).code == 2);
  CHECK(oag_cli({"--isa", "auto", "build", "--input", g}).code == 0);
}

TEST_CASE("installed binary exit codes") {
  const char* bin = std::getenv("OAG_CLI");
  if (!bin) {
    MESSAGE("OAG_CLI not set; skipping subprocess check");
    return;
  }
  Workdir wd;
  const auto bad = wd.file("bad.txt", "2 1\n0 0 3\n");
  const int status = std::system((std::string(bin) + " build --input " + bad + " > /dev/null 2>&1").c_str());
  CHECK(WEXITSTATUS(status) == 2);
  const auto tri = wd.file("tri.txt", kTriangle);
  const int ok = std::system((std::string(bin) + " build --input " + tri + " --out " + wd.path("t.txt")).c_str());
  CHECK(WEXITSTATUS(ok) == 0);
}
