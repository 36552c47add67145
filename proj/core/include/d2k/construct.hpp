#pragma once

#include <optional>
#include <random>
#include <span>
#include <vector>

#include <absl/container/flat_hash_map.h>

#include "d2k/graph.hpp"
#include "d2k/targets.hpp"

namespace d2k {

using Rng = std::mt19937_64;

/// Outcome of one edge insertion.
struct EdgePlacement {
  NodeId out_node = 0;  ///< out-side endpoint actually used
  NodeId in_node = 0;   ///< in-side endpoint actually used
  bool out_switched = false;     ///< a neighbor switch freed a stub on the out endpoint
  bool in_switched = false;
  bool out_substituted = false;  ///< the out endpoint was replaced by a same-cell node
  bool in_substituted = false;
};

/// Bookkeeping for building a bipartite realization of a D2K target one edge
/// at a time.
///
/// Bipartite node ids follow BipartiteGraph: original node v is the out-side
/// node v and the in-side node n + v. Cells are indexed densely in canonical
/// CellKey order. A "cell pair" is an (out-cell, in-cell) combination with a
/// positive target count.
///
/// Invariants, checked by `verify()`:
///   - current(p) <= target(p) and |candidates(p)| >= target(p) - current(p)
///   - every candidate is neither an edge nor a non-chord
///   - free_stubs(x) = degree(cell(x)) - degree of x in the partial graph
///   - the roster of a cell holds exactly its members with free stubs
class ConstructionState {
 public:
  static constexpr std::uint32_t kNoCell = 0xffffffffu;

  /// Sets up nodes, stubs, non-chords and candidate sets for `t`. The target
  /// must be realizable. `rng` randomizes candidate selection and roster order.
  ConstructionState(const D2KTargets& t, Rng& rng);

  const BipartiteGraph& graph() const noexcept { return bip_; }
  NodeId original_nodes() const noexcept { return bip_.original_nodes(); }

  std::uint32_t num_cells() const noexcept { return static_cast<std::uint32_t>(cells_.size()); }
  const CellKey& cell_key(std::uint32_t cell) const { return cells_.at(cell); }
  /// Cell of a bipartite node, or kNoCell for zero-degree images.
  std::uint32_t cell(NodeId b) const { return nodes_.at(b).cell; }
  /// Dense id of a cell key, or kNoCell.
  std::uint32_t find_cell(const CellKey& key) const;
  std::span<const NodeId> members(std::uint32_t cell) const { return members_.at(cell); }
  std::span<const NodeId> roster(std::uint32_t cell) const { return roster_.at(cell); }

  Degree free_stubs(NodeId b) const { return nodes_.at(b).free_stubs; }

  std::uint32_t num_pairs() const noexcept { return static_cast<std::uint32_t>(pairs_.size()); }
  /// Dense id of the (out-cell, in-cell) pair, or kNoCell if its target is zero.
  std::uint32_t find_pair(std::uint32_t out_cell, std::uint32_t in_cell) const;
  std::uint32_t pair_out_cell(std::uint32_t p) const { return pairs_.at(p).out_cell; }
  std::uint32_t pair_in_cell(std::uint32_t p) const { return pairs_.at(p).in_cell; }
  Count target(std::uint32_t p) const { return pairs_.at(p).target; }
  Count current(std::uint32_t p) const { return pairs_.at(p).current; }
  std::size_t candidate_count(std::uint32_t p) const { return pairs_.at(p).candidates.size(); }
  bool is_candidate(NodeId out_b, NodeId in_b) const;

  Count edges_added() const noexcept { return edges_added_; }
  Count switches_performed() const noexcept { return switches_; }

  /// Adds {out_b, in_b} directly, with full bookkeeping. Both endpoints must
  /// have free stubs and the pair's target must not be reached yet. Intended
  /// for replaying scripted states.
  void force_edge(NodeId out_b, NodeId in_b);

  /// Throws InternalError describing the first broken invariant.
  void verify() const;

 private:
  struct CellPairState {
    std::uint32_t out_cell = 0;
    std::uint32_t in_cell = 0;
    Count target = 0;
    Count current = 0;
    std::vector<std::uint64_t> candidates;  // packed (out_b, in_b)
  };

  friend std::optional<NodeId> neighbor_switch(ConstructionState&, NodeId, NodeId, Rng&);
  friend EdgePlacement add_edge_for_pair(ConstructionState&, NodeId, NodeId, Rng&);
  friend EdgePlacement add_next_edge(ConstructionState&, std::uint32_t, Rng&);

  std::uint32_t pair_of_nodes(NodeId a, NodeId b) const;
  void candidate_insert(std::uint32_t p, std::uint64_t key);
  void candidate_erase(std::uint32_t p, std::uint64_t key);
  void roster_insert(NodeId b);
  void roster_erase(NodeId b);
  void take_stub(NodeId b);
  void give_stub(NodeId b);
  void place_edge(NodeId out_b, NodeId in_b, std::uint32_t p);

  BipartiteGraph bip_;
  std::vector<CellKey> cells_;
  /// Per bipartite node; kept together so one lookup touches one cache line.
  struct NodeState {
    std::uint32_t cell;
    Degree free_stubs;
    std::uint32_t roster_pos;
  };
  std::vector<NodeState> nodes_;
  std::vector<std::vector<NodeId>> members_;
  std::vector<std::vector<NodeId>> roster_;
  std::vector<CellPairState> pairs_;
  absl::flat_hash_map<std::uint64_t, std::uint32_t> pair_index_;
  /// Candidate key -> position inside its cell pair's candidate vector.
  absl::flat_hash_map<std::uint64_t, std::uint32_t> candidate_pos_;
  Count edges_added_ = 0;
  Count switches_ = 0;
  std::vector<NodeId> scratch_;
};

/// Moves one neighbor t of the saturated node `v` to `substitute`, a node of
/// the same cell with free stubs: removes {v, t}, adds {substitute, t}. The
/// pair {substitute, t} must be neither an edge nor a non-chord; t is chosen
/// uniformly among feasible neighbors. Joint counts are unchanged.
///
/// Returns the moved neighbor, or nullopt (state untouched) when no neighbor
/// qualifies. Throws InvalidArgument on precondition violations.
std::optional<NodeId> neighbor_switch(ConstructionState& state, NodeId v, NodeId substitute,
                                      Rng& rng);

/// Inserts one edge for the cell pair of the candidate {out_b, in_b}: frees
/// saturated endpoints by neighbor switches, falls back to a same-cell
/// substitute from the free-stub roster when a switch is impossible, then
/// adds the edge and increments the pair's current count.
EdgePlacement add_edge_for_pair(ConstructionState& state, NodeId out_b, NodeId in_b, Rng& rng);

/// Picks a random candidate of cell pair `p` and runs add_edge_for_pair on it.
EdgePlacement add_next_edge(ConstructionState& state, std::uint32_t p, Rng& rng);

/// Builds a simple digraph realizing `t` exactly. Throws Unrealizable when
/// `check(t)` fails. Deterministic for a fixed (t, seed).
DirectedGraph generate(const D2KTargets& t, std::uint64_t seed);

}  // namespace d2k
