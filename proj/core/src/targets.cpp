#include "d2k/targets.hpp"

#include <algorithm>

namespace d2k {

CellKey cell_of(PartitionMode mode, Side side, DegreePair degrees) noexcept {
  if (mode == PartitionMode::D2Km) return {side, degrees.in, degrees.out};
  return side == Side::In ? CellKey{side, degrees.in, 0} : CellKey{side, 0, degrees.out};
}

bool well_formed(PartitionMode mode, const CellKey& key) noexcept {
  if (mode == PartitionMode::D2Km) return true;
  return key.side == Side::In ? key.out == 0 : key.in == 0;
}

Count D2KTargets::jdam_at(const CellKey& k, const CellKey& l) const {
  auto it = jdam.find({k, l});
  return it == jdam.end() ? 0 : it->second;
}

void D2KTargets::add_jdam(const CellKey& k, const CellKey& l, Count count) {
  if (count == 0) return;
  jdam[{k, l}] += count;
  if (k != l) jdam[{l, k}] += count;
}

Count D2KTargets::edge_count() const {
  Count total = 0;
  for (const auto& [pair, count] : jdam) total += count;
  return total / 2;
}

Degree D2KTargets::max_degree() const {
  Degree d = 0;
  for (const auto& p : dds) d = std::max({d, p.in, p.out});
  return d;
}

std::map<CellKey, Count> D2KTargets::cell_sizes() const {
  std::map<CellKey, Count> sizes;
  for (const auto& p : dds) {
    if (p.in > 0) ++sizes[cell_of(mode, Side::In, p)];
    if (p.out > 0) ++sizes[cell_of(mode, Side::Out, p)];
  }
  return sizes;
}

CellPairCounts D2KTargets::non_chords() const {
  CellPairCounts f;
  for (const auto& p : dds) {
    if (p.in == 0 || p.out == 0) continue;
    const auto k = cell_of(mode, Side::In, p);
    const auto l = cell_of(mode, Side::Out, p);
    ++f[{k, l}];
    ++f[{l, k}];
  }
  return f;
}

bool equivalent(const D2KTargets& a, const D2KTargets& b) {
  if (a.mode != b.mode || a.n != b.n || a.jdam != b.jdam) return false;
  auto x = a.dds;
  auto y = b.dds;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

D2KTargets coarsen(const D2KTargets& d2km) {
  if (d2km.mode != PartitionMode::D2Km) throw InvalidArgument("coarsen expects a D2Km target");
  D2KTargets out;
  out.mode = PartitionMode::D2K;
  out.n = d2km.n;
  out.dds = d2km.dds;
  auto coarse = [](const CellKey& k) {
    return cell_of(PartitionMode::D2K, k.side, {k.in, k.out});
  };
  for (const auto& [pair, count] : d2km.jdam) {
    out.jdam[{coarse(pair.first), coarse(pair.second)}] += count;
  }
  return out;
}

D2KTargets extract_d2k(const DirectedGraph& g, PartitionMode mode) {
  D2KTargets t;
  t.mode = mode;
  t.n = g.num_nodes();
  t.dds.resize(t.n);
  for (NodeId v = 0; v < t.n; ++v) t.dds[v] = {g.in_degree(v), g.out_degree(v)};

  for (NodeId u = 0; u < t.n; ++u) {
    const auto k = cell_of(mode, Side::Out, t.dds[u]);
    for (NodeId v : g.out_neighbors(u)) t.add_jdam(k, cell_of(mode, Side::In, t.dds[v]), 1);
  }
  return t;
}

UmanTargets extract_uman(const DirectedGraph& g) {
  UmanTargets t;
  t.n = g.num_nodes();
  Count reciprocated = 0;
  for (NodeId u = 0; u < t.n; ++u) {
    for (NodeId v : g.out_neighbors(u)) {
      if (g.has_edge(v, u)) ++reciprocated;
    }
  }
  t.mutual = reciprocated / 2;
  t.asymmetric = g.num_edges() - reciprocated;
  t.null = pairs_of(t.n) - t.mutual - t.asymmetric;
  return t;
}

SizeTargets extract_size(const DirectedGraph& g) { return {g.num_nodes(), g.num_edges()}; }

DdsTargets extract_dds(const DirectedGraph& g) {
  DdsTargets t;
  t.n = g.num_nodes();
  t.dds.resize(t.n);
  for (NodeId v = 0; v < t.n; ++v) t.dds[v] = {g.in_degree(v), g.out_degree(v)};
  return t;
}

}  // namespace d2k
