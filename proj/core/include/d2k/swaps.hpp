#pragma once

#include <vector>

#include "d2k/graph.hpp"
#include "d2k/targets.hpp"

namespace d2k {

enum class SwapKind : std::uint8_t {
  JdamDouble,    ///< double-edge swap whose endpoints share a cell; keeps the jdam
  DegreeDouble,  ///< double-edge swap; keeps every in- and out-degree
  C6Reverse      ///< reverses a directed 3-cycle; keeps every in- and out-degree
};

/// Edges removed and added by one swap. For a DirectedGraph an edge is
/// (source, target); for a BipartiteGraph it is (out-side node, in-side node).
struct SwapProposal {
  SwapKind kind = SwapKind::DegreeDouble;
  std::vector<Edge> removed;
  std::vector<Edge> added;
};

/// (a,b), (c,d) -> (a,d), (c,b).
SwapProposal double_swap(SwapKind kind, Edge first, Edge second);

/// a->b->c->a becomes a->c->b->a.
SwapProposal c6_reverse(NodeId a, NodeId b, NodeId c);

enum class SwapStatus : std::uint8_t {
  Applied,
  NoChange,         ///< the added edges equal the removed ones
  NotSimple,        ///< result would hold a parallel edge, self-loop or non-chord edge
  BreaksInvariant   ///< the kind's invariant would not be preserved
};

struct SwapOptions {
  /// Partition used by JdamDouble to decide whether endpoints share a cell.
  PartitionMode mode = PartitionMode::D2K;
  /// Bipartite form only: treat non-chords as ordinary pairs (self-loops allowed).
  bool allow_non_chords = false;
};

/// Applies `p` if the result stays simple and keeps the kind's invariant;
/// otherwise leaves the graph untouched. Throws InvalidArgument when a removed
/// edge does not exist or the proposal does not have the shape of its kind.
SwapStatus apply_swap(DirectedGraph& g, const SwapProposal& p, const SwapOptions& options = {});
SwapStatus apply_swap(BipartiteGraph& b, const SwapProposal& p, const SwapOptions& options = {});

/// Every distinct graph reachable from `b` by one accepted JdamDouble swap.
std::vector<BipartiteGraph> enumerate_jdam_swaps(const BipartiteGraph& b,
                                                 const SwapOptions& options = {});

}  // namespace d2k
