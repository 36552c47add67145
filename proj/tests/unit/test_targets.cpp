#include <doctest.h>

#include "support.hpp"

using namespace d2k;
using d2k::testing::all_digraphs;
using d2k::testing::graph_of;
using d2k::testing::random_digraph;

namespace {

CellKey in_cell(Degree d) { return {Side::In, d, 0}; }
CellKey out_cell(Degree d) { return {Side::Out, 0, d}; }

}  // namespace

TEST_CASE("3-cycle target") {
  const auto g = graph_of(3, {{0, 1}, {1, 2}, {2, 0}});
  const auto t = extract_d2k(g, PartitionMode::D2K);
  CHECK(t.n == 3);
  CHECK(t.edge_count() == 3);
  CHECK(t.jdam_at(out_cell(1), in_cell(1)) == 3);
  CHECK(t.jdam_at(in_cell(1), out_cell(1)) == 3);
  CHECK(t.jdam.size() == 2);
  CHECK(t.cell_sizes().at(in_cell(1)) == 3);
  CHECK(t.non_chords().at({out_cell(1), in_cell(1)}) == 3);
}

TEST_CASE("star target keeps the two sides apart") {
  const auto g = graph_of(3, {{0, 1}, {0, 2}});
  const auto t = extract_d2k(g, PartitionMode::D2K);
  CHECK(t.jdam_at(out_cell(2), in_cell(1)) == 2);
  CHECK(t.non_chords().empty());
  const auto m = extract_d2k(g, PartitionMode::D2Km);
  CHECK(m.jdam_at({Side::Out, 0, 2}, {Side::In, 1, 0}) == 2);
}

TEST_CASE("targets are symmetric and sum to 2m") {
  for (const auto& g : all_digraphs(3)) {
    for (auto mode : {PartitionMode::D2K, PartitionMode::D2Km}) {
      const auto t = extract_d2k(g, mode);
      Count total = 0;
      for (const auto& [pair, c] : t.jdam) {
        CHECK(t.jdam_at(pair.second, pair.first) == c);
        CHECK(well_formed(mode, pair.first));
        total += c;
      }
      CHECK(total == 2 * g.num_edges());
    }
  }
}

TEST_CASE("D2Km refines D2K") {
  for (std::uint64_t seed = 0; seed < 64; ++seed) {
    const auto g = random_digraph(30, 0.1, seed);
    CHECK(coarsen(extract_d2k(g, PartitionMode::D2Km)) == extract_d2k(g, PartitionMode::D2K));
  }
}

TEST_CASE("equivalence ignores node order") {
  const auto a = extract_d2k(graph_of(3, {{0, 1}, {0, 2}}), PartitionMode::D2K);
  const auto b = extract_d2k(graph_of(3, {{2, 0}, {2, 1}}), PartitionMode::D2K);
  CHECK_FALSE(a == b);
  CHECK(equivalent(a, b));
}

TEST_CASE("uman, size and dds extraction") {
  const auto g = graph_of(4, {{0, 1}, {1, 0}, {1, 2}});
  const auto u = extract_uman(g);
  CHECK(u == UmanTargets{4, 1, 1, 4});
  CHECK(extract_size(g) == SizeTargets{4, 3});
  const auto d = extract_dds(g);
  CHECK(d.dds[1].in == 1);
  CHECK(d.dds[1].out == 2);
}

TEST_CASE("empty graph") {
  const DirectedGraph g(0);
  const auto t = extract_d2k(g, PartitionMode::D2K);
  CHECK(t.n == 0);
  CHECK(t.jdam.empty());
  CHECK(extract_uman(g) == UmanTargets{});
}
