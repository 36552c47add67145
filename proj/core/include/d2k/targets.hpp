#pragma once

#include <compare>
#include <map>
#include <vector>

#include "d2k/common.hpp"
#include "d2k/graph.hpp"

namespace d2k {

/// How bipartite nodes are grouped into cells.
///   D2K:  by (side, degree on that side).
///   D2Km: by (side, full (in, out) degree pair).
enum class PartitionMode : std::uint8_t { D2K, D2Km };

/// Label of one cell of the bipartite partition.
///
/// In D2K mode only the component on `side` is meaningful and the other one is
/// always zero; in D2Km mode both components are the node's (in, out) degrees.
/// The defaulted ordering is lexicographic on (side, in, out), which makes
/// every container of cells canonical.
struct CellKey {
  Side side = Side::In;
  Degree in = 0;
  Degree out = 0;

  /// Bipartite degree of every node in the cell.
  Degree degree() const noexcept { return side == Side::In ? in : out; }

  auto operator<=>(const CellKey&) const = default;
};

struct DegreePair {
  Degree in = 0;
  Degree out = 0;

  auto operator<=>(const DegreePair&) const = default;
};

/// Cell of the `side` image of a node with the given degrees.
CellKey cell_of(PartitionMode mode, Side side, DegreePair degrees) noexcept;

/// True when the key has the shape `mode` produces (zero off-side component in D2K).
bool well_formed(PartitionMode mode, const CellKey& key) noexcept;

using CellPair = std::pair<CellKey, CellKey>;
using CellPairCounts = std::map<CellPair, Count>;

/// Directed degree sequence plus joint degree-attribute matrix.
///
/// `jdam` is stored symmetrically: every entry (k, l) is mirrored by (l, k)
/// with the same count. Zero entries are never stored.
struct D2KTargets {
  PartitionMode mode = PartitionMode::D2K;
  NodeId n = 0;
  std::vector<DegreePair> dds;
  CellPairCounts jdam;

  Count jdam_at(const CellKey& k, const CellKey& l) const;
  /// Adds `count` to both (k, l) and (l, k).
  void add_jdam(const CellKey& k, const CellKey& l, Count count);

  /// Number of edges, (sum of jdam) / 2.
  Count edge_count() const;
  Degree max_degree() const;
  /// |V_k| for every cell with positive degree, computed from the dds.
  std::map<CellKey, Count> cell_sizes() const;
  /// Non-chord counts f(k, l), symmetric, computed from the dds.
  CellPairCounts non_chords() const;

  friend bool operator==(const D2KTargets&, const D2KTargets&) = default;
};

/// Same mode, n and jdam, and dds equal as multisets.
bool equivalent(const D2KTargets& a, const D2KTargets& b);

/// Merges a D2Km target into the D2K target of the same graph by summing
/// entries whose one-sided degrees agree.
D2KTargets coarsen(const D2KTargets& d2km);

/// Dyad census (UMAN).
struct UmanTargets {
  NodeId n = 0;
  Count mutual = 0;
  Count asymmetric = 0;
  Count null = 0;

  friend bool operator==(const UmanTargets&, const UmanTargets&) = default;
};

/// Node and edge count (D0K).
struct SizeTargets {
  NodeId n = 0;
  Count m = 0;

  friend bool operator==(const SizeTargets&, const SizeTargets&) = default;
};

/// Directed degree sequence (D1K).
struct DdsTargets {
  NodeId n = 0;
  std::vector<DegreePair> dds;

  friend bool operator==(const DdsTargets&, const DdsTargets&) = default;
};

constexpr Count pairs_of(Count n) noexcept { return n < 2 ? 0 : n * (n - 1) / 2; }

D2KTargets extract_d2k(const DirectedGraph& g, PartitionMode mode);
UmanTargets extract_uman(const DirectedGraph& g);
SizeTargets extract_size(const DirectedGraph& g);
DdsTargets extract_dds(const DirectedGraph& g);

}  // namespace d2k
