#include "d2k/swaps.hpp"

#include <algorithm>
#include <set>

namespace d2k {

namespace {

void check_shape(const SwapProposal& p) {
  auto fail = [] { throw InvalidArgument("swap proposal does not match its kind"); };
  if (p.kind == SwapKind::C6Reverse) {
    if (p.removed.size() != 3 || p.added.size() != 3) fail();
    const auto& r = p.removed;
    const bool cycle = r[0].second == r[1].first && r[1].second == r[2].first &&
                       r[2].second == r[0].first && r[0].first != r[1].first &&
                       r[1].first != r[2].first && r[0].first != r[2].first;
    if (!cycle) fail();
    std::vector<Edge> reversed;
    for (const auto& [u, v] : r) reversed.emplace_back(v, u);
    auto added = p.added;
    std::sort(reversed.begin(), reversed.end());
    std::sort(added.begin(), added.end());
    if (added != reversed) fail();
    return;
  }
  if (p.removed.size() != 2 || p.added.size() != 2) fail();
  const auto [a, b] = p.removed[0];
  const auto [c, d] = p.removed[1];
  if (p.added[0] != Edge{a, d} || p.added[1] != Edge{c, b}) fail();
}

bool is_no_change(const SwapProposal& p) {
  auto removed = p.removed;
  auto added = p.added;
  std::sort(removed.begin(), removed.end());
  std::sort(added.begin(), added.end());
  return removed == added;
}

/// Multiset of (source cell, target cell) pairs under `cell_fn`.
template <typename CellFn>
bool preserves_cell_pairs(const SwapProposal& p, CellFn cell_fn) {
  std::multiset<CellPair> before;
  std::multiset<CellPair> after;
  for (const auto& [u, v] : p.removed) before.insert({cell_fn(u, Side::Out), cell_fn(v, Side::In)});
  for (const auto& [u, v] : p.added) after.insert({cell_fn(u, Side::Out), cell_fn(v, Side::In)});
  return before == after;
}

template <typename Graph>
void require_removed(const Graph& g, const SwapProposal& p) {
  for (std::size_t i = 0; i < p.removed.size(); ++i) {
    const auto [u, v] = p.removed[i];
    if (!g.has_edge(u, v)) {
      throw InvalidArgument("swap removes nonexistent edge " + std::to_string(u) + "," +
                            std::to_string(v));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (p.removed[j] == p.removed[i]) throw InvalidArgument("swap removes an edge twice");
    }
  }
}

}  // namespace

SwapProposal double_swap(SwapKind kind, Edge first, Edge second) {
  if (kind == SwapKind::C6Reverse) throw InvalidArgument("double_swap needs a double kind");
  return {kind, {first, second}, {{first.first, second.second}, {second.first, first.second}}};
}

SwapProposal c6_reverse(NodeId a, NodeId b, NodeId c) {
  return {SwapKind::C6Reverse, {{a, b}, {b, c}, {c, a}}, {{b, a}, {c, b}, {a, c}}};
}

SwapStatus apply_swap(DirectedGraph& g, const SwapProposal& p, const SwapOptions& options) {
  require_removed(g, p);
  check_shape(p);
  if (is_no_change(p)) return SwapStatus::NoChange;
  if (p.kind == SwapKind::JdamDouble) {
    auto cell = [&](NodeId x, Side side) {
      return cell_of(options.mode, side, {g.in_degree(x), g.out_degree(x)});
    };
    if (!preserves_cell_pairs(p, cell)) return SwapStatus::BreaksInvariant;
  }

  for (const auto& [u, v] : p.removed) g.remove_edge(u, v);
  std::size_t added = 0;
  for (; added < p.added.size(); ++added) {
    const auto [u, v] = p.added[added];
    if (!g.add_edge(u, v)) break;
  }
  if (added == p.added.size()) return SwapStatus::Applied;

  for (std::size_t i = 0; i < added; ++i) g.remove_edge(p.added[i].first, p.added[i].second);
  for (const auto& [u, v] : p.removed) g.add_edge(u, v);
  return SwapStatus::NotSimple;
}

SwapStatus apply_swap(BipartiteGraph& b, const SwapProposal& p, const SwapOptions& options) {
  require_removed(b, p);
  check_shape(p);
  for (const auto& [u, v] : p.added) {
    if (u >= b.num_nodes() || v >= b.num_nodes() || b.side(u) != Side::Out ||
        b.side(v) != Side::In) {
      throw InvalidArgument("bipartite swap edges must be (out-side, in-side)");
    }
  }
  if (is_no_change(p)) return SwapStatus::NoChange;
  if (p.kind == SwapKind::JdamDouble) {
    auto cell = [&](NodeId x, Side side) {
      const NodeId v = b.original(x);
      return cell_of(options.mode, side, {b.degree(b.in_node(v)), b.degree(b.out_node(v))});
    };
    if (!preserves_cell_pairs(p, cell)) return SwapStatus::BreaksInvariant;
  }

  for (const auto& [u, v] : p.removed) b.remove_edge(u, v);
  bool simple = true;
  for (const auto& [u, v] : p.added) {
    if (b.has_edge(u, v) || (!options.allow_non_chords && b.original(u) == b.original(v))) {
      simple = false;
    }
  }
  // Added edges are pairwise distinct by shape, so checking against the
  // graph with the removed edges taken out is enough.
  if (!simple) {
    for (const auto& [u, v] : p.removed) b.add_edge(u, v, true);
    return SwapStatus::NotSimple;
  }
  for (const auto& [u, v] : p.added) b.add_edge(u, v, true);
  return SwapStatus::Applied;
}

std::vector<BipartiteGraph> enumerate_jdam_swaps(const BipartiteGraph& b,
                                                 const SwapOptions& options) {
  const auto edges = b.edges();
  std::vector<BipartiteGraph> neighbors;
  std::set<std::vector<Edge>> seen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      BipartiteGraph next = b;
      const auto status =
          apply_swap(next, double_swap(SwapKind::JdamDouble, edges[i], edges[j]), options);
      if (status != SwapStatus::Applied) continue;
      auto key = next.edges();
      std::sort(key.begin(), key.end());
      if (seen.insert(std::move(key)).second) neighbors.push_back(std::move(next));
    }
  }
  return neighbors;
}

}  // namespace d2k
