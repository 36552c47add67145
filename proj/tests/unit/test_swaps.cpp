#include <doctest.h>

#include "d2k/swaps.hpp"
#include "support.hpp"

using namespace d2k;
using namespace d2k::testing;

namespace {

bool contains(const std::vector<BipartiteGraph>& list, const BipartiteGraph& b) {
  return std::ranges::find(list, b) != list.end();
}

}  // namespace

TEST_CASE("swap shapes") {
  const auto s = double_swap(SwapKind::DegreeDouble, {0, 1}, {2, 3});
  CHECK(s.removed == std::vector<Edge>{{0, 1}, {2, 3}});
  CHECK(s.added == std::vector<Edge>{{0, 3}, {2, 1}});
  const auto c = c6_reverse(0, 1, 2);
  CHECK(c.added == std::vector<Edge>{{1, 0}, {2, 1}, {0, 2}});
  CHECK_THROWS_AS(double_swap(SwapKind::C6Reverse, {0, 1}, {2, 3}), InvalidArgument);
}

TEST_CASE("degree-preserving double swap") {
  auto g = graph_of(4, {{0, 1}, {2, 3}});
  const auto before = extract_dds(g);
  CHECK(apply_swap(g, double_swap(SwapKind::DegreeDouble, {0, 1}, {2, 3})) == SwapStatus::Applied);
  CHECK(g == graph_of(4, {{0, 3}, {2, 1}}));
  CHECK(extract_dds(g) == before);
}

TEST_CASE("swaps that would break simplicity are refused") {
  auto g = graph_of(3, {{0, 1}, {1, 2}, {0, 2}});
  const auto before = g;
  // (0,1),(1,2) -> (0,2),(1,1): parallel edge and self-loop.
  CHECK(apply_swap(g, double_swap(SwapKind::DegreeDouble, {0, 1}, {1, 2})) ==
        SwapStatus::NotSimple);
  CHECK(g == before);
  CHECK(apply_swap(g, double_swap(SwapKind::DegreeDouble, {0, 1}, {0, 2})) ==
        SwapStatus::NoChange);
  CHECK_THROWS_AS(apply_swap(g, double_swap(SwapKind::DegreeDouble, {2, 0}, {0, 1})),
                  InvalidArgument);
}

TEST_CASE("jdam swap keeps cell pairs or is refused") {
  // Out-degrees: 0 -> 1, 2 -> 2, 5 -> 1. In-degrees: 1 -> 1, 3 -> 1, 4 -> 2.
  auto g = graph_of(6, {{0, 1}, {2, 3}, {2, 4}, {5, 4}});
  const auto t = extract_d2k(g, PartitionMode::D2K);
  const auto before = g;
  // (out 1, in 1), (out 2, in 2) would become (out 1, in 2), (out 2, in 1).
  CHECK(apply_swap(g, double_swap(SwapKind::JdamDouble, {0, 1}, {2, 4})) ==
        SwapStatus::BreaksInvariant);
  CHECK(g == before);
  // 0 and 5 share the out cell of degree 1.
  CHECK(apply_swap(g, double_swap(SwapKind::JdamDouble, {0, 1}, {5, 4})) == SwapStatus::Applied);
  CHECK(g == graph_of(6, {{0, 4}, {2, 3}, {2, 4}, {5, 1}}));
  CHECK(extract_d2k(g, PartitionMode::D2K) == t);
}

TEST_CASE("C6 reversal flips a directed 3-cycle") {
  auto g = graph_of(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(apply_swap(g, c6_reverse(0, 1, 2)) == SwapStatus::Applied);
  CHECK(g == graph_of(3, {{1, 0}, {2, 1}, {0, 2}}));
  auto m = graph_of(3, {{0, 1}, {1, 2}, {2, 0}, {1, 0}});
  CHECK(apply_swap(m, c6_reverse(0, 1, 2)) == SwapStatus::NotSimple);
}

TEST_CASE("the 3-cycle has no double-swap neighbor but C6 connects the orientations") {
  const auto fwd = graph_of(3, {{0, 1}, {1, 2}, {2, 0}});
  const auto bwd = graph_of(3, {{1, 0}, {2, 1}, {0, 2}});
  CHECK(enumerate_jdam_swaps(to_bipartite(fwd)).empty());
  auto g = fwd;
  apply_swap(g, c6_reverse(0, 1, 2));
  CHECK(g == bwd);
}

TEST_CASE("the two orientations of a directed 4-cycle share a target but no swap joins them") {
  const auto fwd = graph_of(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const auto bwd = graph_of(4, {{1, 0}, {2, 1}, {3, 2}, {0, 3}});
  for (auto mode : {PartitionMode::D2K, PartitionMode::D2Km}) {
    CHECK(extract_d2k(fwd, mode) == extract_d2k(bwd, mode));
    const SwapOptions options{mode, false};
    CHECK_FALSE(contains(enumerate_jdam_swaps(to_bipartite(fwd), options), to_bipartite(bwd)));
    CHECK_FALSE(contains(enumerate_jdam_swaps(to_bipartite(bwd), options), to_bipartite(fwd)));
  }
}

TEST_CASE("enumerated neighbors keep the target") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto g = random_digraph(8, 0.3, seed);
    const auto t = extract_d2k(g, PartitionMode::D2K);
    for (const auto& b : enumerate_jdam_swaps(to_bipartite(g))) {
      CHECK(extract_d2k(collapse_bipartite(b), PartitionMode::D2K) == t);
    }
  }
}

TEST_CASE("allowing non-chords admits swaps that create self-loops") {
  const auto g = graph_of(2, {{0, 1}, {1, 0}});
  const auto b = to_bipartite(g);
  CHECK(enumerate_jdam_swaps(b).empty());
  CHECK(enumerate_jdam_swaps(b, {PartitionMode::D2K, true}).size() == 1);
}
