#include <algorithm>

#include "d2k/metrics.hpp"
#include "parallel.hpp"

namespace d2k {

namespace {

constexpr std::array<std::string_view, 16> kTriadLabels = {
    "003", "012", "102", "021D", "021U", "021C", "111D", "111U",
    "030T", "030C", "201", "120D", "120U", "120C", "210", "300"};

// Maps the 6-bit code of a triad (v, u, w) to its class index. Bits:
// v->u 1, u->v 2, v->w 4, w->v 8, u->w 16, w->u 32.
constexpr std::array<std::uint8_t, 64> kTricodeClass = {
    0, 1, 1, 2, 1, 3, 5, 7, 1, 5, 4, 6, 2, 7, 6, 10,
    1, 5, 3, 7, 4, 8, 8, 12, 5, 9, 8, 13, 6, 13, 11, 14,
    1, 4, 5, 6, 5, 8, 9, 13, 3, 8, 8, 11, 7, 12, 13, 14,
    2, 6, 7, 10, 6, 11, 13, 14, 7, 13, 12, 14, 10, 14, 14, 15};

std::vector<std::vector<NodeId>> symmetrized(const DirectedGraph& g) {
  std::vector<std::vector<NodeId>> adj(g.num_nodes());
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    auto& list = adj[v];
    list.assign(g.out_neighbors(v).begin(), g.out_neighbors(v).end());
    list.insert(list.end(), g.in_neighbors(v).begin(), g.in_neighbors(v).end());
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return adj;
}

Count choose3(Count n) { return n < 3 ? 0 : n * (n - 1) / 2 * (n - 2) / 3; }

}  // namespace

DyadCensus dyad_census(const DirectedGraph& g) {
  Count reciprocated = 0;
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    for (NodeId v : g.out_neighbors(u)) reciprocated += g.has_edge(v, u);
  }
  DyadCensus c;
  c.mutual = reciprocated / 2;
  c.asymmetric = g.num_edges() - reciprocated;
  c.null = static_cast<Count>(g.num_nodes()) * (g.num_nodes() == 0 ? 0 : g.num_nodes() - 1) / 2 -
           c.mutual - c.asymmetric;
  return c;
}

const std::array<std::string_view, 16>& triad_labels() noexcept { return kTriadLabels; }

std::optional<std::size_t> triad_index(std::string_view label) noexcept {
  for (std::size_t i = 0; i < kTriadLabels.size(); ++i) {
    if (kTriadLabels[i] == label) return i;
  }
  return std::nullopt;
}

TriadCensus triad_census(const DirectedGraph& g) {
  const NodeId n = g.num_nodes();
  TriadCensus census{};
  const auto adj = symmetrized(g);
  std::vector<NodeId> mark(n, 0);  // mark[x] == v + 1 iff x is adjacent to v

  auto tricode = [&](NodeId v, NodeId u, NodeId w) {
    unsigned code = 0;
    if (g.has_edge(v, u)) code |= 1;
    if (g.has_edge(u, v)) code |= 2;
    if (g.has_edge(v, w)) code |= 4;
    if (g.has_edge(w, v)) code |= 8;
    if (g.has_edge(u, w)) code |= 16;
    if (g.has_edge(w, u)) code |= 32;
    return kTricodeClass[code];
  };

  for (NodeId v = 0; v < n; ++v) {
    for (NodeId x : adj[v]) mark[x] = v + 1;
    for (NodeId u : adj[v]) {
      if (u <= v) continue;
      // Joint neighborhood S = N(u) | N(v) minus {u, v}. Each connected triad
      // is counted once, from its lowest-labelled linked pair.
      Count joint = adj[v].size() - 1;
      for (NodeId w : adj[v]) {
        if (w != u && u < w) ++census[tricode(v, u, w)];
      }
      for (NodeId w : adj[u]) {
        if (w == v || mark[w] == v + 1) continue;
        ++joint;
        if (v < w) ++census[tricode(v, u, w)];
      }
      const bool mutual = g.has_edge(v, u) && g.has_edge(u, v);
      census[mutual ? 2 : 1] += n - joint - 2;
    }
  }
  Count connected = 0;
  for (std::size_t i = 1; i < census.size(); ++i) connected += census[i];
  census[0] = choose3(n) - connected;
  return census;
}

std::string_view dsp_name(DspVariant v) noexcept {
  switch (v) {
    case DspVariant::TwoPath: return "two_path";
    case DspVariant::Outgoing: return "outgoing";
    case DspVariant::Incoming: return "incoming";
  }
  return "?";
}

Histogram dsp(const DirectedGraph& g, DspVariant variant, unsigned threads) {
  const NodeId n = g.num_nodes();
  constexpr NodeId kBlock = 256;
  const std::size_t blocks = (static_cast<std::size_t>(n) + kBlock - 1) / kBlock;
  std::vector<Histogram> partial(blocks);
  std::vector<Count> touched_pairs(blocks, 0);

  detail::for_each_block(blocks, threads, [&](std::size_t block) {
    std::vector<Count> shared(n, 0);
    std::vector<NodeId> touched;
    auto& hist = partial[block];
    const NodeId begin = static_cast<NodeId>(block * kBlock);
    const NodeId end = static_cast<NodeId>(std::min<std::size_t>(n, begin + std::size_t{kBlock}));
    for (NodeId i = begin; i < end; ++i) {
      auto first = variant == DspVariant::Incoming ? g.in_neighbors(i) : g.out_neighbors(i);
      for (NodeId w : first) {
        auto second = variant == DspVariant::Outgoing ? g.in_neighbors(w) : g.out_neighbors(w);
        for (NodeId j : second) {
          if (j == i) continue;
          if (shared[j]++ == 0) touched.push_back(j);
        }
      }
      for (NodeId j : touched) {
        ++hist[shared[j]];
        shared[j] = 0;
      }
      touched_pairs[block] += touched.size();
      touched.clear();
    }
  });

  Histogram total;
  Count nonzero = 0;
  for (std::size_t b = 0; b < blocks; ++b) {
    for (const auto& [k, c] : partial[b]) total[k] += c;
    nonzero += touched_pairs[b];
  }
  const Count ordered = static_cast<Count>(n) * (n == 0 ? 0 : n - 1);
  if (ordered > 0) total[0] = ordered - nonzero;
  return total;
}

std::vector<ExpansionEntry> expansion(const DirectedGraph& g, Direction direction) {
  const NodeId n = g.num_nodes();
  std::vector<ExpansionEntry> result;
  std::vector<NodeId> stamp(n, 0);
  auto step = [&](NodeId x) {
    return direction == Direction::Out ? g.out_neighbors(x) : g.in_neighbors(x);
  };
  for (NodeId v = 0; v < n; ++v) {
    const auto first = step(v);
    if (first.empty()) continue;
    const NodeId tag = v + 1;
    stamp[v] = tag;
    for (NodeId w : first) stamp[w] = tag;
    Count second = 0;
    for (NodeId w : first) {
      for (NodeId x : step(w)) {
        if (stamp[x] != tag) {
          stamp[x] = tag;
          ++second;
        }
      }
    }
    result.push_back({v, first.size(), second});
  }
  return result;
}

NeighborDegreeProfile avg_neighbor_degree(const DirectedGraph& g, Side node_side,
                                          Side neighbor_side) {
  NeighborDegreeProfile profile;
  auto degree = [&](NodeId x, Side s) {
    return s == Side::Out ? g.out_degree(x) : g.in_degree(x);
  };
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    const Degree d = degree(v, node_side);
    if (d == 0) continue;
    auto& r = profile[d];
    const auto nbrs = node_side == Side::Out ? g.out_neighbors(v) : g.in_neighbors(v);
    for (NodeId w : nbrs) r.sum += degree(w, neighbor_side);
    r.count += d;
  }
  return profile;
}

JointDegreeCounts joint_degree_counts(const DirectedGraph& g) {
  JointDegreeCounts counts;
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    for (NodeId v : g.out_neighbors(u)) ++counts[{g.out_degree(u), g.in_degree(v)}];
  }
  return counts;
}

std::vector<Degree> core_numbers(const DirectedGraph& g) {
  // Bucket-based peeling on the symmetrized graph.
  const auto adj = symmetrized(g);
  const NodeId n = g.num_nodes();
  std::vector<Degree> deg(n);
  Degree max_deg = 0;
  for (NodeId v = 0; v < n; ++v) {
    deg[v] = static_cast<Degree>(adj[v].size());
    max_deg = std::max(max_deg, deg[v]);
  }
  std::vector<NodeId> bin(max_deg + 2, 0);
  for (NodeId v = 0; v < n; ++v) ++bin[deg[v]];
  NodeId start = 0;
  for (auto& b : bin) {
    const NodeId count = b;
    b = start;
    start += count;
  }
  std::vector<NodeId> order(n);
  std::vector<NodeId> pos(n);
  for (NodeId v = 0; v < n; ++v) {
    pos[v] = bin[deg[v]]++;
    order[pos[v]] = v;
  }
  for (Degree d = static_cast<Degree>(bin.size()) - 1; d > 0; --d) bin[d] = bin[d - 1];
  bin[0] = 0;
  for (NodeId i = 0; i < n; ++i) {
    const NodeId v = order[i];
    for (NodeId u : adj[v]) {
      if (deg[u] <= deg[v]) continue;
      const Degree du = deg[u];
      const NodeId pu = pos[u];
      const NodeId pw = bin[du];
      const NodeId w = order[pw];
      if (u != w) {
        std::swap(order[pu], order[pw]);
        pos[u] = pw;
        pos[w] = pu;
      }
      ++bin[du];
      --deg[u];
    }
  }
  return deg;
}

}  // namespace d2k
