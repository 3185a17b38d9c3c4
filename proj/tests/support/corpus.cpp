#include "corpus.hpp"

#include "oag/generators.hpp"
#include "oracles.hpp"

namespace corpus {

std::vector<oag::Weight> q_range(int k) {
  std::vector<oag::Weight> q;
  for (int i = 1; i <= k; ++i) q.push_back(oag::Weight::from_units(i));
  return q;
}

namespace {

std::vector<Sample> build() {
  using namespace oag;
  std::vector<Sample> out;
  const int qs[] = {1, 2, 3, 5};
  std::uint64_t seed = 1;
  auto add = [&](const GenSpec& spec) { out.push_back({describe(spec), generate(spec)}); };
  // 1210 random graphs, densities from sparse to nearly complete.
  for (int i = 0; i < 1210; ++i) {
    const std::uint64_t n = 2 + (i * 7) % 63;
    const std::uint64_t pairs = n * (n - 1) / 2;
    const std::uint64_t m = std::min<std::uint64_t>(pairs, (n * (1 + i % 6)) / 2 + i % 3);
    add({.family = Family::RandomGnm, .n = n, .m = m, .q = q_range(qs[i % 4]), .seed = seed++});
  }
  for (int i = 0; i < 300; ++i) {
    add({.family = Family::Lattice8, .p = 2 + static_cast<std::uint64_t>(i % 19), .q = q_range(qs[i % 4] * (1 + i % 2)),
         .seed = seed++});
  }
  for (int i = 0; i < 250; ++i) {
    add({.family = Family::Complete, .n = 1 + static_cast<std::uint64_t>(i % 12), .q = q_range(qs[i % 4]), .seed = seed++});
  }
  for (int i = 0; i < 120; ++i) {
    add({.family = Family::Path, .n = 1 + static_cast<std::uint64_t>(i % 40), .q = q_range(qs[i % 4]), .seed = seed++});
  }
  for (int i = 0; i < 120; ++i) {
    add({.family = Family::Cycle, .n = 3 + static_cast<std::uint64_t>(i % 40), .q = q_range(qs[i % 4]), .seed = seed++});
  }
  // Hand-built shapes: isolated nodes, several components, no edges.
  const auto w = [](int v) { return Weight::from_units(v); };
  out.push_back({"empty n=5", build_graph(5, {})});
  out.push_back({"two triangles with bridge",
                 build_graph(6, {{0, 1, w(1)}, {1, 2, w(2)}, {0, 2, w(3)}, {3, 4, w(1)}, {4, 5, w(2)}, {3, 5, w(2)},
                                 {2, 5, w(10)}})});
  out.push_back({"triangle plus isolated",
                 build_graph(5, {{0, 1, w(1)}, {1, 2, w(2)}, {0, 2, w(3)}})});
  out.push_back({"disjoint edges", build_graph(6, {{0, 1, w(4)}, {2, 3, w(4)}, {4, 5, w(4)}})});
  out.push_back({"star", build_graph(6, {{0, 1, w(5)}, {0, 2, w(4)}, {0, 3, w(3)}, {0, 4, w(2)}, {0, 5, w(1)}})});
  out.push_back({"decimal weights", build_graph(4, {{0, 1, *parse_weight("0.5")}, {1, 2, *parse_weight("0.25")},
                                                    {2, 3, *parse_weight("0.5")}, {0, 3, *parse_weight("0.25")}})});
  return out;
}

}  // namespace

const std::vector<Sample>& standard() {
  static const std::vector<Sample> samples = build();
  return samples;
}

oag::Graph small_connected(std::uint64_t seed) {
  using namespace oag;
  Xorshift64Star rng(seed);
  for (std::uint64_t attempt = 0;; ++attempt) {
    const std::uint64_t n = 2 + rng.below(6);
    const std::uint64_t pairs = n * (n - 1) / 2;
    const std::uint64_t m = n - 1 + rng.below(pairs - (n - 1) + 1);
    const auto q = q_range(1 + static_cast<int>(rng.below(4)));
    Graph g = random_gnm(n, m, q, seed * 1000 + attempt);
    if (oracle::components(g) == 1) return g;
  }
}

}  // namespace corpus
