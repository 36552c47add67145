#include <doctest.h>

#include <sstream>

#include "support.hpp"

using namespace d2k;
using d2k::testing::all_digraphs;
using d2k::testing::graph_of;
using d2k::testing::random_digraph;

TEST_CASE("mutators refuse loops and parallel edges") {
  DirectedGraph g(3);
  CHECK(g.add_edge(0, 1));
  CHECK_FALSE(g.add_edge(0, 1));
  CHECK_FALSE(g.add_edge(2, 2));
  CHECK_THROWS_AS(g.add_edge(0, 3), InvalidArgument);
  CHECK(g.num_edges() == 1);
  CHECK(g.remove_edge(0, 1));
  CHECK_FALSE(g.remove_edge(0, 1));
  CHECK(g.num_edges() == 0);
}

TEST_CASE("from_edges rejects non-simple input") {
  const std::vector<Edge> loop{{0, 0}};
  const std::vector<Edge> dup{{0, 1}, {0, 1}};
  CHECK_THROWS_AS(DirectedGraph::from_edges(2, loop), InvalidArgument);
  CHECK_THROWS_AS(DirectedGraph::from_edges(2, dup), InvalidArgument);
}

TEST_CASE("dyad states") {
  const auto g = graph_of(3, {{0, 1}, {1, 0}, {1, 2}});
  CHECK(dyad_state(g, 0, 1) == DyadState::Mutual);
  CHECK(dyad_state(g, 2, 1) == DyadState::Asymmetric);
  CHECK(dyad_state(g, 0, 2) == DyadState::Null);
  CHECK_THROWS_AS(dyad_state(g, 1, 1), InvalidArgument);
}

TEST_CASE("ingestion cleans self-loops and duplicates and remaps ids") {
  std::istringstream in("# comment\n\n10 20\n20 30\n30 10\n10 10\n10 20\n");
  const auto raw = read_edge_list(in);
  CHECK(raw.size() == 5);
  const auto r = from_edge_list(raw);
  CHECK(r.self_loops_removed == 1);
  CHECK(r.duplicates_removed == 1);
  CHECK(r.graph.num_nodes() == 3);
  CHECK(r.graph.num_edges() == 3);
  CHECK(r.original_ids == std::vector<std::uint64_t>{10, 20, 30});
  CHECK(r.graph.has_edge(0, 1));
  CHECK(r.graph.has_edge(2, 0));
}

TEST_CASE("malformed edge lists report the line") {
  auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      read_edge_list(in);
    } catch (const ParseError& e) {
      return e.position();
    }
    return 0;
  };
  CHECK(line_of("0 1\n1\n") == 2);
  CHECK(line_of("0 1\n# x\n1 x\n") == 3);
  CHECK(line_of("0 1 2\n") == 1);
  const std::vector<RawEdge> negative{{0, 1}, {-1, 2}};
  CHECK_THROWS_AS(from_edge_list(negative), ParseError);
}

TEST_CASE("empty input gives the empty graph") {
  std::istringstream in("# nothing\n");
  const auto r = from_edge_list(read_edge_list(in));
  CHECK(r.graph.num_nodes() == 0);
  CHECK(r.graph.num_edges() == 0);
}

TEST_CASE("edge list write then read is the identity") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = random_digraph(25, 0.1, seed);
    g.add_edge(3, 4);
    std::ostringstream out;
    write_edge_list(out, g);
    std::istringstream in(out.str());
    const auto text = parse_edge_list(in);
    CHECK(text.declared_nodes == 25u);
    CHECK(from_edge_list(text.pairs, text.declared_nodes).graph == g);
  }
  DirectedGraph isolated(5);
  isolated.add_edge(4, 0);
  std::ostringstream out;
  write_edge_list(out, isolated);
  std::istringstream in(out.str());
  const auto text = parse_edge_list(in);
  CHECK(from_edge_list(text.pairs, text.declared_nodes).graph == isolated);
}

TEST_CASE("node count header keeps ids only when every id fits") {
  std::istringstream fits("# Directed graph\n# Nodes: 4 Edges: 1\n3 1\n");
  const auto a = parse_edge_list(fits);
  const auto ra = from_edge_list(a.pairs, a.declared_nodes);
  CHECK(ra.graph.num_nodes() == 4);
  CHECK(ra.graph.has_edge(3, 1));

  std::istringstream too_big("# Nodes: 2\n7 9\n");
  const auto b = parse_edge_list(too_big);
  const auto rb = from_edge_list(b.pairs, b.declared_nodes);
  CHECK(rb.graph.num_nodes() == 2);
  CHECK(rb.graph.has_edge(0, 1));
  CHECK(rb.original_ids == std::vector<std::uint64_t>{7, 9});

  std::istringstream late("5 6\n# Nodes: 100\n");
  CHECK_FALSE(parse_edge_list(late).declared_nodes);
}

TEST_CASE("bipartite round trip on every digraph with up to 3 nodes") {
  for (NodeId n = 0; n <= 3; ++n) {
    for (const auto& g : all_digraphs(n)) {
      const auto b = to_bipartite(g);
      CHECK(b.num_edges() == g.num_edges());
      for (NodeId v = 0; v < n; ++v) {
        CHECK(b.degree(b.out_node(v)) == g.out_degree(v));
        CHECK(b.degree(b.in_node(v)) == g.in_degree(v));
        CHECK(b.has_non_chord(v) == (g.in_degree(v) > 0 && g.out_degree(v) > 0));
      }
      CHECK(collapse_bipartite(b) == g);
      CHECK(to_bipartite(collapse_bipartite(b)) == b);
    }
  }
}

TEST_CASE("bipartite round trip on random graphs") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = random_digraph(60, 0.08, seed);
    CHECK(collapse_bipartite(to_bipartite(g)) == g);
  }
}

TEST_CASE("bipartite mutators enforce the split") {
  BipartiteGraph b(2, {true, false});
  CHECK_THROWS_AS(b.add_edge(0, 1), InvalidArgument);  // both out-side
  CHECK_THROWS_AS(b.add_edge(0, 2), InvalidArgument);  // non-chord of node 0
  b.add_edge(0, 3);
  CHECK_THROWS_AS(b.add_edge(3, 0), InvalidArgument);  // parallel
  CHECK(b.is_non_chord(0, 2));
  CHECK_FALSE(b.is_non_chord(1, 3));
  CHECK(b.num_non_chords() == 1);

  BipartiteGraph loop(1, {false});
  loop.add_edge(0, 1, true);
  CHECK_THROWS_AS(collapse_bipartite(loop), InvalidArgument);
}
