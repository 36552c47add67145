#include "d2k/construct.hpp"

#include <algorithm>
#include <numeric>

#include "d2k/realizability.hpp"

namespace d2k {

namespace {

constexpr std::uint32_t kAbsent = 0xffffffffu;

std::size_t pick_index(std::size_t size, Rng& rng) {
  return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng);
}

}  // namespace

ConstructionState::ConstructionState(const D2KTargets& t, Rng& rng) {
  if (t.dds.size() != t.n) throw InvalidArgument("dds length does not match n");
  const NodeId n = t.n;

  std::vector<bool> non_chord(n);
  for (NodeId v = 0; v < n; ++v) non_chord[v] = t.dds[v].in > 0 && t.dds[v].out > 0;
  bip_ = BipartiteGraph(n, std::move(non_chord));
  bip_.reserve_edges(t.edge_count());
  for (NodeId v = 0; v < n; ++v) {
    bip_.reserve(bip_.out_node(v), t.dds[v].out);
    bip_.reserve(bip_.in_node(v), t.dds[v].in);
  }

  for (const auto& [key, size] : t.cell_sizes()) cells_.push_back(key);
  members_.resize(cells_.size());
  nodes_.assign(2 * static_cast<std::size_t>(n), {kNoCell, 0, kAbsent});
  for (NodeId v = 0; v < n; ++v) {
    const auto& d = t.dds[v];
    if (d.out > 0) {
      const auto c = find_cell(cell_of(t.mode, Side::Out, d));
      nodes_[bip_.out_node(v)].cell = c;
      members_[c].push_back(bip_.out_node(v));
      nodes_[bip_.out_node(v)].free_stubs = d.out;
    }
    if (d.in > 0) {
      const auto c = find_cell(cell_of(t.mode, Side::In, d));
      nodes_[bip_.in_node(v)].cell = c;
      members_[c].push_back(bip_.in_node(v));
      nodes_[bip_.in_node(v)].free_stubs = d.in;
    }
  }

  roster_ = members_;
  for (auto& r : roster_) {
    std::shuffle(r.begin(), r.end(), rng);
    for (std::uint32_t i = 0; i < r.size(); ++i) nodes_[r[i]].roster_pos = i;
  }

  Count total_target = 0;
  for (const auto& [pair, count] : t.jdam) {
    const auto& [k, l] = pair;
    if (k.side != Side::Out || l.side != Side::In || count == 0) continue;
    const auto out_cell = find_cell(k);
    const auto in_cell = find_cell(l);
    if (out_cell == kNoCell || in_cell == kNoCell) {
      throw InvalidArgument("jdam references a cell with no nodes");
    }
    pair_index_.emplace(pack(out_cell, in_cell), static_cast<std::uint32_t>(pairs_.size()));
    pairs_.push_back({out_cell, in_cell, count, 0, {}});
    total_target += count;
  }
  candidate_pos_.reserve(total_target);

  // Candidate sets start with `target` random admissible pairs per cell pair.
  // Sparse pairs are sampled by rejection; dense ones (where the full product
  // is within a constant of target + f) are enumerated and shuffled.
  const auto f = t.non_chords();
  for (std::uint32_t p = 0; p < pairs_.size(); ++p) {
    const auto& state = pairs_[p];
    const auto& outs = members_[state.out_cell];
    const auto& ins = members_[state.in_cell];
    auto fit = f.find({cells_[state.out_cell], cells_[state.in_cell]});
    const Count blocked = fit == f.end() ? 0 : fit->second;
    const Count product = static_cast<Count>(outs.size()) * ins.size();
    const Count capacity = product - blocked;
    if (state.target > capacity) throw InvalidArgument("cell pair target exceeds capacity");
    pairs_[p].candidates.reserve(state.target);

    if (2 * state.target <= capacity) {
      std::uniform_int_distribution<std::size_t> pick_out(0, outs.size() - 1);
      std::uniform_int_distribution<std::size_t> pick_in(0, ins.size() - 1);
      while (pairs_[p].candidates.size() < state.target) {
        const NodeId a = outs[pick_out(rng)];
        const NodeId b = ins[pick_in(rng)];
        if (bip_.original(a) == bip_.original(b)) continue;
        candidate_insert(p, pack(a, b));
      }
    } else {
      std::vector<std::uint64_t> all;
      all.reserve(capacity);
      for (NodeId a : outs) {
        for (NodeId b : ins) {
          if (bip_.original(a) != bip_.original(b)) all.push_back(pack(a, b));
        }
      }
      std::shuffle(all.begin(), all.end(), rng);
      for (Count i = 0; i < state.target; ++i) candidate_insert(p, all[i]);
    }
  }
}

std::uint32_t ConstructionState::find_cell(const CellKey& key) const {
  auto it = std::lower_bound(cells_.begin(), cells_.end(), key);
  if (it == cells_.end() || *it != key) return kNoCell;
  return static_cast<std::uint32_t>(it - cells_.begin());
}

std::uint32_t ConstructionState::find_pair(std::uint32_t out_cell, std::uint32_t in_cell) const {
  auto it = pair_index_.find(pack(out_cell, in_cell));
  return it == pair_index_.end() ? kNoCell : it->second;
}

std::uint32_t ConstructionState::pair_of_nodes(NodeId a, NodeId b) const {
  if (bip_.side(a) == Side::In) std::swap(a, b);
  if (nodes_[a].cell == kNoCell || nodes_[b].cell == kNoCell) return kNoCell;
  return find_pair(nodes_[a].cell, nodes_[b].cell);
}

bool ConstructionState::is_candidate(NodeId out_b, NodeId in_b) const {
  return candidate_pos_.contains(pack(out_b, in_b));
}

void ConstructionState::candidate_insert(std::uint32_t p, std::uint64_t key) {
  auto& list = pairs_[p].candidates;
  if (!candidate_pos_.try_emplace(key, static_cast<std::uint32_t>(list.size())).second) return;
  list.push_back(key);
}

void ConstructionState::candidate_erase(std::uint32_t p, std::uint64_t key) {
  auto it = candidate_pos_.find(key);
  if (it == candidate_pos_.end()) return;
  auto& list = pairs_[p].candidates;
  const std::uint32_t pos = it->second;
  candidate_pos_.erase(it);
  if (pos + 1 != list.size()) {
    list[pos] = list.back();
    candidate_pos_[list[pos]] = pos;
  }
  list.pop_back();
}

void ConstructionState::roster_insert(NodeId b) {
  if (nodes_[b].roster_pos != kAbsent) return;
  auto& r = roster_[nodes_[b].cell];
  nodes_[b].roster_pos = static_cast<std::uint32_t>(r.size());
  r.push_back(b);
}

void ConstructionState::roster_erase(NodeId b) {
  const std::uint32_t pos = nodes_[b].roster_pos;
  if (pos == kAbsent) return;
  auto& r = roster_[nodes_[b].cell];
  r[pos] = r.back();
  nodes_[r[pos]].roster_pos = pos;
  r.pop_back();
  nodes_[b].roster_pos = kAbsent;
}

void ConstructionState::take_stub(NodeId b) {
  D2K_ENSURE(nodes_[b].free_stubs > 0, "node " + std::to_string(b) + " has no free stub");
  if (--nodes_[b].free_stubs == 0) roster_erase(b);
}

void ConstructionState::give_stub(NodeId b) {
  if (nodes_[b].free_stubs++ == 0) roster_insert(b);
  D2K_ENSURE(nodes_[b].free_stubs <= cells_[nodes_[b].cell].degree(), "free stubs exceed degree");
}

void ConstructionState::place_edge(NodeId out_b, NodeId in_b, std::uint32_t p) {
  bip_.add_edge(out_b, in_b);
  take_stub(out_b);
  take_stub(in_b);
  auto& state = pairs_[p];
  ++state.current;
  ++edges_added_;
  D2K_ENSURE(state.current <= state.target, "cell pair exceeded its target");
  candidate_erase(p, pack(out_b, in_b));
}

void ConstructionState::force_edge(NodeId out_b, NodeId in_b) {
  if (out_b >= bip_.num_nodes() || in_b >= bip_.num_nodes() ||
      bip_.side(out_b) != Side::Out || bip_.side(in_b) != Side::In) {
    throw InvalidArgument("force_edge expects (out-side node, in-side node)");
  }
  const auto p = pair_of_nodes(out_b, in_b);
  if (p == kNoCell) throw InvalidArgument("cell pair has no target");
  if (pairs_[p].current >= pairs_[p].target) throw InvalidArgument("cell pair already complete");
  if (nodes_[out_b].free_stubs == 0 || nodes_[in_b].free_stubs == 0) {
    throw InvalidArgument("force_edge endpoints need free stubs");
  }
  if (bip_.original(out_b) == bip_.original(in_b)) throw InvalidArgument("pair is a non-chord");
  if (bip_.has_edge(out_b, in_b)) throw InvalidArgument("edge already present");
  place_edge(out_b, in_b, p);
}

void ConstructionState::verify() const {
  std::vector<Count> current(pairs_.size(), 0);
  for (NodeId b = 0; b < bip_.num_nodes(); ++b) {
    const auto c = nodes_[b].cell;
    const Degree deg = c == kNoCell ? 0 : cells_[c].degree();
    D2K_ENSURE(bip_.degree(b) + nodes_[b].free_stubs == deg,
               "stub ledger of node " + std::to_string(b) + " is inconsistent");
    D2K_ENSURE((nodes_[b].roster_pos != kAbsent) == (nodes_[b].free_stubs > 0),
               "roster membership of node " + std::to_string(b) + " is stale");
    if (bip_.side(b) != Side::Out) continue;
    for (NodeId w : bip_.neighbors(b)) {
      D2K_ENSURE(bip_.original(w) != bip_.original(b), "edge on a non-chord");
      const auto p = pair_of_nodes(b, w);
      D2K_ENSURE(p != kNoCell, "edge outside every target cell pair");
      ++current[p];
    }
  }
  for (std::uint32_t p = 0; p < pairs_.size(); ++p) {
    const auto& s = pairs_[p];
    D2K_ENSURE(s.current == current[p], "current count drifted from the graph");
    D2K_ENSURE(s.current <= s.target, "current count exceeds target");
    D2K_ENSURE(s.candidates.size() >= s.target - s.current, "too few candidate pairs");
    for (auto key : s.candidates) {
      const auto [a, b] = unpack(key);
      D2K_ENSURE(!bip_.has_edge(a, b), "candidate pair is already an edge");
      D2K_ENSURE(bip_.original(a) != bip_.original(b), "candidate pair is a non-chord");
      D2K_ENSURE(pair_of_nodes(a, b) == p, "candidate filed under the wrong cell pair");
    }
  }
}

std::optional<NodeId> neighbor_switch(ConstructionState& state, NodeId v, NodeId substitute,
                                      Rng& rng) {
  auto& bip = state.bip_;
  if (v >= bip.num_nodes() || substitute >= bip.num_nodes() || v == substitute) {
    throw InvalidArgument("neighbor_switch needs two distinct bipartite nodes");
  }
  if (state.nodes_[v].cell == ConstructionState::kNoCell ||
      state.nodes_[v].cell != state.nodes_[substitute].cell) {
    throw InvalidArgument("neighbor_switch nodes must share a cell");
  }
  if (state.nodes_[v].free_stubs != 0) throw InvalidArgument("switched node still has free stubs");
  if (state.nodes_[substitute].free_stubs == 0) throw InvalidArgument("substitute has no free stub");

  // The first feasible neighbor of a uniform random order is uniform over
  // the feasible ones, and usually needs only a few membership probes.
  const auto neighbors = bip.neighbors(v);
  auto& order = state.scratch_;
  order.assign(neighbors.begin(), neighbors.end());
  std::optional<NodeId> chosen;
  for (std::size_t i = 0; i < order.size() && !chosen; ++i) {
    std::swap(order[i], order[i + pick_index(order.size() - i, rng)]);
    const NodeId t = order[i];
    if (bip.original(t) != bip.original(substitute) && !bip.has_edge(substitute, t)) chosen = t;
  }
  if (!chosen) return std::nullopt;
  const NodeId t = *chosen;

  const auto p = state.pair_of_nodes(v, t);
  D2K_ENSURE(p != ConstructionState::kNoCell, "switched edge has no cell pair");
  bip.remove_edge(v, t);
  bip.add_edge(substitute, t);
  state.give_stub(v);
  state.take_stub(substitute);

  auto oriented = [&](NodeId x) { return bip.side(x) == Side::Out ? pack(x, t) : pack(t, x); };
  state.candidate_erase(p, oriented(substitute));
  state.candidate_insert(p, oriented(v));
  ++state.switches_;
  return t;
}

EdgePlacement add_edge_for_pair(ConstructionState& state, NodeId out_b, NodeId in_b, Rng& rng) {
  const auto& bip = state.bip_;
  if (out_b >= bip.num_nodes() || in_b >= bip.num_nodes() || bip.side(out_b) != Side::Out ||
      bip.side(in_b) != Side::In) {
    throw InvalidArgument("add_edge_for_pair expects (out-side node, in-side node)");
  }
  const auto p = state.pair_of_nodes(out_b, in_b);
  if (p == ConstructionState::kNoCell) throw InvalidArgument("cell pair has no target");
  if (state.pairs_[p].current >= state.pairs_[p].target) {
    throw InvalidArgument("cell pair already reached its target");
  }
  if (bip.original(out_b) == bip.original(in_b) || bip.has_edge(out_b, in_b)) {
    throw InvalidArgument("pair is a non-chord or an existing edge");
  }

  EdgePlacement placed{out_b, in_b};
  auto free_endpoint = [&](NodeId& x, bool& switched, bool& substituted) {
    if (state.nodes_[x].free_stubs > 0) return;
    const auto& roster = state.roster_[state.nodes_[x].cell];
    D2K_ENSURE(!roster.empty(), "cell of node " + std::to_string(x) + " has no free stubs");
    const NodeId substitute = roster.front();
    if (neighbor_switch(state, x, substitute, rng)) {
      switched = true;
    } else {
      x = substitute;
      substituted = true;
    }
  };
  free_endpoint(placed.out_node, placed.out_switched, placed.out_substituted);
  free_endpoint(placed.in_node, placed.in_switched, placed.in_substituted);

  // Both substitutes forming a non-chord contradicts the failed switches.
  D2K_ENSURE(bip.original(placed.out_node) != bip.original(placed.in_node),
             "substitute endpoints form a non-chord");
  D2K_ENSURE(!bip.has_edge(placed.out_node, placed.in_node), "substitute endpoints adjacent");
  state.place_edge(placed.out_node, placed.in_node, p);
  return placed;
}

EdgePlacement add_next_edge(ConstructionState& state, std::uint32_t p, Rng& rng) {
  const auto& pair = state.pairs_.at(p);
  if (pair.current >= pair.target) throw InvalidArgument("cell pair already reached its target");
  D2K_ENSURE(!pair.candidates.empty(), "no candidate pair left below target");
  const auto [a, b] = unpack(pair.candidates[pick_index(pair.candidates.size(), rng)]);
  return add_edge_for_pair(state, a, b, rng);
}

DirectedGraph generate(const D2KTargets& t, std::uint64_t seed) {
  const auto report = check(t);
  if (!report.realizable) throw Unrealizable(describe(report, t.mode));

  Rng rng(seed);
  ConstructionState state(t, rng);
  std::vector<std::uint32_t> order(state.num_pairs());
  std::iota(order.begin(), order.end(), 0u);
  std::shuffle(order.begin(), order.end(), rng);

  Count iterations = 0;
  for (auto p : order) {
    while (state.current(p) < state.target(p)) {
      add_next_edge(state, p, rng);
      ++iterations;
    }
  }
  D2K_ENSURE(iterations == t.edge_count() && state.edges_added() == iterations,
             "edge loop did not add exactly one edge per iteration");
  return collapse_bipartite(state.graph());
}

}  // namespace d2k
