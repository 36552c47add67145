#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include <absl/container/flat_hash_set.h>

#include "d2k/common.hpp"

namespace d2k {

/// Simple directed graph over dense node ids 0..n-1.
///
/// Adjacency is kept in both directions together with a hashed edge set so
/// that membership tests are O(1) amortized. Self-loops and parallel edges
/// are refused by every mutator, so a DirectedGraph is always simple.
class DirectedGraph {
 public:
  DirectedGraph() = default;
  explicit DirectedGraph(NodeId n);

  /// Builds a graph from an edge list that must already be simple.
  static DirectedGraph from_edges(NodeId n, std::span<const Edge> edges);

  NodeId num_nodes() const noexcept { return static_cast<NodeId>(out_.size()); }
  Count num_edges() const noexcept { return edge_set_.size(); }

  std::span<const NodeId> out_neighbors(NodeId v) const { return out_.at(v); }
  std::span<const NodeId> in_neighbors(NodeId v) const { return in_.at(v); }
  Degree out_degree(NodeId v) const { return static_cast<Degree>(out_.at(v).size()); }
  Degree in_degree(NodeId v) const { return static_cast<Degree>(in_.at(v).size()); }

  bool has_edge(NodeId u, NodeId v) const { return edge_set_.contains(pack(u, v)); }

  /// Inserts u->v. Returns false (graph unchanged) for a self-loop or an
  /// existing edge; throws InvalidArgument for out-of-range ids.
  bool add_edge(NodeId u, NodeId v);
  bool remove_edge(NodeId u, NodeId v);

  /// Preallocates adjacency for node v and room for `edges` edges overall.
  void reserve(NodeId v, Degree in, Degree out);
  void reserve_edges(Count edges);

  /// All edges, grouped by source in out-adjacency order.
  std::vector<Edge> edges() const;

  /// Same node count and same edge set; adjacency order is ignored.
  friend bool operator==(const DirectedGraph& a, const DirectedGraph& b);

 private:
  void check_node(NodeId v) const;

  std::vector<std::vector<NodeId>> out_;
  std::vector<std::vector<NodeId>> in_;
  absl::flat_hash_set<std::uint64_t> edge_set_;
};

enum class DyadState : std::uint8_t { Null, Asymmetric, Mutual };

/// Classifies the unordered pair {u, v}; u == v is rejected.
DyadState dyad_state(const DirectedGraph& g, NodeId u, NodeId v);

// ---------------------------------------------------------------------------
// Ingestion

/// A raw (source, target) record as read from an edge list, before cleaning.
using RawEdge = std::pair<std::int64_t, std::int64_t>;

struct IngestResult {
  DirectedGraph graph;
  /// original_ids[v] is the input id that was remapped to dense id v.
  std::vector<std::uint64_t> original_ids;
  Count self_loops_removed = 0;
  Count duplicates_removed = 0;
};

/// Drops self-loops and collapses duplicate ordered pairs. With
/// `declared_nodes` = N and every id below N, ids are kept and the graph has
/// N nodes, isolated ones included. Otherwise ids are remapped to 0..n-1 in
/// first-appearance order. Negative ids raise ParseError carrying the 1-based
/// record index.
IngestResult from_edge_list(std::span<const RawEdge> pairs,
                            std::optional<std::uint64_t> declared_nodes = std::nullopt);

struct EdgeListText {
  std::vector<RawEdge> pairs;
  /// N from a "# Nodes: N" header comment, if one precedes the first edge.
  std::optional<std::uint64_t> declared_nodes;
};

/// Parses SNAP-style text: one "source target" pair per line, '#' comments
/// and blank lines skipped. ParseError positions are 1-based line numbers.
EdgeListText parse_edge_list(std::istream& in);
std::vector<RawEdge> read_edge_list(std::istream& in);
IngestResult load_edge_list(const std::filesystem::path& path);

/// Writes "source<TAB>target" lines preceded by a SNAP-style header comment.
/// With `labels`, node v is written as labels[v].
void write_edge_list(std::ostream& out, const DirectedGraph& g,
                     std::span<const std::uint64_t> labels = {});
void save_edge_list(const std::filesystem::path& path, const DirectedGraph& g);

// ---------------------------------------------------------------------------
// Bipartite split representation

enum class Side : std::uint8_t { In, Out };

constexpr Side opposite(Side s) noexcept { return s == Side::In ? Side::Out : Side::In; }

/// Undirected bipartite image of a digraph: original node v becomes the
/// out-side node `out_node(v) == v` and the in-side node `in_node(v) == n + v`.
/// A non-chord is the forbidden pair (v_in, v_out) for a node v that has both
/// in- and out-degree; an edge there would be the self-loop v->v.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  /// `non_chord[v]` marks the original nodes that carry a non-chord.
  BipartiteGraph(NodeId original_nodes, std::vector<bool> non_chord);

  NodeId original_nodes() const noexcept { return n_; }
  NodeId num_nodes() const noexcept { return 2 * n_; }
  NodeId out_node(NodeId v) const noexcept { return v; }
  NodeId in_node(NodeId v) const noexcept { return n_ + v; }
  Side side(NodeId b) const noexcept { return b < n_ ? Side::Out : Side::In; }
  NodeId original(NodeId b) const noexcept { return b < n_ ? b : b - n_; }
  /// The other-side image of the same original node.
  NodeId partner(NodeId b) const noexcept { return b < n_ ? b + n_ : b - n_; }

  bool has_non_chord(NodeId v) const { return non_chord_.at(v); }
  /// True when {a, b} is the non-chord of some original node.
  bool is_non_chord(NodeId a, NodeId b) const;
  Count num_non_chords() const noexcept;

  bool has_edge(NodeId a, NodeId b) const;

  /// Adds the edge {a, b}. Throws InvalidArgument if both endpoints lie on the
  /// same side, the edge exists, or it lies on a non-chord (unless
  /// `allow_non_chord`, the self-loop-permitting regime used by swap
  /// experiments).
  void add_edge(NodeId a, NodeId b, bool allow_non_chord = false);
  bool remove_edge(NodeId a, NodeId b);

  void reserve(NodeId b, Degree degree) { adj_.at(b).reserve(degree); }
  void reserve_edges(Count edges) { edge_set_.reserve(edges); }

  std::span<const NodeId> neighbors(NodeId b) const { return adj_.at(b); }
  Degree degree(NodeId b) const { return static_cast<Degree>(adj_.at(b).size()); }
  Count num_edges() const noexcept { return edge_set_.size(); }

  /// Edges as (out-side node, in-side node).
  std::vector<Edge> edges() const;

  friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b);

 private:
  std::uint64_t key(NodeId a, NodeId b) const;

  NodeId n_ = 0;
  std::vector<bool> non_chord_;
  std::vector<std::vector<NodeId>> adj_;
  absl::flat_hash_set<std::uint64_t> edge_set_;
};

/// Edge u->v becomes {u_out, v_in}; non-chords are placed on every node with
/// positive in- and out-degree.
BipartiteGraph to_bipartite(const DirectedGraph& g);

/// Inverse of to_bipartite. Throws InvalidArgument if an edge joins the two
/// images of one original node (a non-chord or an unflagged self-loop).
DirectedGraph collapse_bipartite(const BipartiteGraph& b);

}  // namespace d2k
