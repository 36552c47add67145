#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "d2k/graph.hpp"
#include "d2k/metrics.hpp"
#include "d2k/targets.hpp"

namespace d2k::testing {

/// Ordered pairs (u, v), u != v, in a fixed order; bit i of a mask selects pair i.
inline std::vector<Edge> ordered_pairs(NodeId n) {
  std::vector<Edge> pairs;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = 0; v < n; ++v) {
      if (u != v) pairs.emplace_back(u, v);
    }
  }
  return pairs;
}

inline DirectedGraph digraph_from_mask(NodeId n, std::uint64_t mask) {
  DirectedGraph g(n);
  const auto pairs = ordered_pairs(n);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if ((mask >> i) & 1u) g.add_edge(pairs[i].first, pairs[i].second);
  }
  return g;
}

/// All 2^(n(n-1)) labelled digraphs on n nodes.
inline std::vector<DirectedGraph> all_digraphs(NodeId n) {
  const std::uint64_t total = std::uint64_t{1} << (n * (n - 1));
  std::vector<DirectedGraph> out;
  out.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) out.push_back(digraph_from_mask(n, mask));
  return out;
}

inline DirectedGraph random_digraph(NodeId n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  DirectedGraph g(n);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = 0; v < n; ++v) {
      if (u != v && coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

inline DirectedGraph graph_of(NodeId n, std::initializer_list<Edge> edges) {
  DirectedGraph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

// ---------------------------------------------------------------------------
// Brute-force oracles

/// Classifies {a, b, c} by its mutual/asymmetric/null dyad counts and, where
/// needed, the direction of the asymmetric edges.
inline std::string classify_triad(const DirectedGraph& g, NodeId a, NodeId b, NodeId c) {
  const std::array<NodeId, 3> nodes{a, b, c};
  int mutual = 0;
  int asym = 0;
  std::array<int, 3> asym_out{};  // asymmetric edges leaving each node
  std::array<int, 3> asym_in{};
  std::array<bool, 3> in_mutual{};
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const bool ij = g.has_edge(nodes[i], nodes[j]);
      const bool ji = g.has_edge(nodes[j], nodes[i]);
      if (ij && ji) {
        ++mutual;
        in_mutual[i] = in_mutual[j] = true;
      } else if (ij || ji) {
        ++asym;
        ++asym_out[ij ? i : j];
        ++asym_in[ij ? j : i];
      }
    }
  }
  const int null = 3 - mutual - asym;
  std::string label = std::to_string(mutual) + std::to_string(asym) + std::to_string(null);
  if (label == "021" || label == "030" || label == "120") {
    const bool someone_sends_two = std::ranges::find(asym_out, 2) != asym_out.end();
    const bool someone_gets_two = std::ranges::find(asym_in, 2) != asym_in.end();
    if (label == "030") return label + (someone_sends_two ? "T" : "C");
    if (someone_sends_two) return label + "D";
    if (someone_gets_two) return label + "U";
    return label + "C";
  }
  if (label == "111") {
    // D: the asymmetric edge points into the mutual dyad.
    for (int i = 0; i < 3; ++i) {
      if (in_mutual[i] && asym_in[i] == 1) return label + "D";
    }
    return label + "U";
  }
  return label;
}

inline TriadCensus brute_triad_census(const DirectedGraph& g) {
  TriadCensus census{};
  const NodeId n = g.num_nodes();
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = a + 1; b < n; ++b) {
      for (NodeId c = b + 1; c < n; ++c) ++census[*triad_index(classify_triad(g, a, b, c))];
    }
  }
  return census;
}

inline Histogram brute_dsp(const DirectedGraph& g, DspVariant variant) {
  const NodeId n = g.num_nodes();
  Histogram h;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = 0; j < n; ++j) {
      if (i == j) continue;
      Count shared = 0;
      for (NodeId w = 0; w < n; ++w) {
        switch (variant) {
          case DspVariant::TwoPath: shared += g.has_edge(i, w) && g.has_edge(w, j); break;
          case DspVariant::Outgoing: shared += g.has_edge(i, w) && g.has_edge(j, w); break;
          case DspVariant::Incoming: shared += g.has_edge(w, i) && g.has_edge(w, j); break;
        }
      }
      ++h[shared];
    }
  }
  return h;
}

constexpr Count kInf = ~Count{0};

/// All-pairs directed distances by Floyd-Warshall.
inline std::vector<std::vector<Count>> all_distances(const DirectedGraph& g) {
  const NodeId n = g.num_nodes();
  std::vector<std::vector<Count>> d(n, std::vector<Count>(n, kInf));
  for (NodeId v = 0; v < n; ++v) {
    d[v][v] = 0;
    for (NodeId w : g.out_neighbors(v)) d[v][w] = 1;
  }
  for (NodeId k = 0; k < n; ++k) {
    for (NodeId i = 0; i < n; ++i) {
      for (NodeId j = 0; j < n; ++j) {
        if (d[i][k] != kInf && d[k][j] != kInf) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
      }
    }
  }
  return d;
}

/// Expansion from the distance matrix: nodes at distance exactly 2.
inline std::vector<ExpansionEntry> brute_expansion(const DirectedGraph& g, Direction dir) {
  const NodeId n = g.num_nodes();
  const auto d = all_distances(g);
  auto dist = [&](NodeId v, NodeId w) { return dir == Direction::Out ? d[v][w] : d[w][v]; };
  std::vector<ExpansionEntry> out;
  for (NodeId v = 0; v < n; ++v) {
    Count h1 = 0;
    Count h2 = 0;
    for (NodeId w = 0; w < n; ++w) {
      h1 += dist(v, w) == 1;
      h2 += dist(v, w) == 2;
    }
    if (h1 > 0) out.push_back({v, h1, h2});
  }
  return out;
}

inline Histogram brute_path_histogram(const DirectedGraph& g) {
  const auto d = all_distances(g);
  Histogram h;
  for (NodeId i = 0; i < g.num_nodes(); ++i) {
    for (NodeId j = 0; j < g.num_nodes(); ++j) {
      if (i != j && d[i][j] != kInf) ++h[d[i][j]];
    }
  }
  return h;
}

/// Betweenness from shortest-path counts: sigma(s,t) is the number of walks
/// of length d(s,t), read off powers of the adjacency matrix, and v lies on
/// sigma(s,v) * sigma(v,t) of them whenever d(s,v) + d(v,t) = d(s,t).
/// Normalized by (n-1)(n-2).
inline std::vector<double> brute_betweenness(const DirectedGraph& g) {
  const NodeId n = g.num_nodes();
  const auto d = all_distances(g);
  std::vector<std::vector<std::vector<double>>> walks(n);  // walks[k][i][j]
  walks[0].assign(n, std::vector<double>(n, 0));
  for (NodeId i = 0; i < n; ++i) walks[0][i][i] = 1;
  for (NodeId k = 1; k < n; ++k) {
    walks[k].assign(n, std::vector<double>(n, 0));
    for (NodeId i = 0; i < n; ++i) {
      for (NodeId m = 0; m < n; ++m) {
        if (walks[k - 1][i][m] == 0) continue;
        for (NodeId j : g.out_neighbors(m)) walks[k][i][j] += walks[k - 1][i][m];
      }
    }
  }
  auto sigma = [&](NodeId s, NodeId t) { return d[s][t] == kInf ? 0.0 : walks[d[s][t]][s][t]; };
  std::vector<double> bc(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    for (NodeId s = 0; s < n; ++s) {
      for (NodeId t = 0; t < n; ++t) {
        if (s == v || t == v || s == t || d[s][t] == kInf) continue;
        if (d[s][v] == kInf || d[v][t] == kInf || d[s][v] + d[v][t] != d[s][t]) continue;
        bc[v] += sigma(s, v) * sigma(v, t) / sigma(s, t);
      }
    }
  }
  if (n > 2) {
    for (auto& x : bc) x /= static_cast<double>(n - 1) * (n - 2);
  }
  return bc;
}

/// True when some simple digraph on t.n nodes has exactly the target
/// (per-node dds and jdam). Exhaustive; n <= 4.
inline bool realizable_by_enumeration(const D2KTargets& t) {
  const std::uint64_t total = std::uint64_t{1} << (t.n * (t.n == 0 ? 0 : t.n - 1));
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (extract_d2k(digraph_from_mask(t.n, mask), t.mode) == t) return true;
  }
  return false;
}


/// Adds `delta` to jdam(k, l) and its mirror, dropping zero entries. Returns
/// false (target untouched) when the entry would go negative.
inline bool adjust_jdam(D2KTargets& t, const CellKey& k, const CellKey& l, int delta) {
  const Count current = t.jdam_at(k, l);
  if (delta < 0 && current < static_cast<Count>(-delta)) return false;
  const Count next = current + delta;
  for (const auto& key : {CellPair{k, l}, CellPair{l, k}}) {
    if (next == 0) {
      t.jdam.erase(key);
    } else {
      t.jdam[key] = next;
    }
  }
  return true;
}

/// Random well-formed cell on `side` with positive degree below n.
inline CellKey random_cell(PartitionMode mode, Side side, NodeId n, std::mt19937_64& rng) {
  std::uniform_int_distribution<Degree> deg(1, n - 1);
  std::uniform_int_distribution<Degree> any(0, n - 1);
  const Degree own = deg(rng);
  const Degree other = mode == PartitionMode::D2Km ? any(rng) : 0;
  return side == Side::In ? CellKey{side, own, other} : CellKey{side, other, own};
}

/// A randomly edited copy of `t`: a rectangle edit (+1 -1 -1 +1 on two out
/// cells and two in cells, which keeps every row sum), a single +-1 entry
/// edit, a +-1 edit of one node's degree, or a degree edit combined with a
/// rectangle edit. Requires t.n >= 2.
inline D2KTargets perturb(const D2KTargets& t, std::mt19937_64& rng) {
  D2KTargets p = t;
  const NodeId n = t.n;
  auto rectangle = [&] {
    for (int attempt = 0; attempt < 20; ++attempt) {
      const auto k1 = random_cell(t.mode, Side::Out, n, rng);
      const auto k2 = random_cell(t.mode, Side::Out, n, rng);
      const auto l1 = random_cell(t.mode, Side::In, n, rng);
      const auto l2 = random_cell(t.mode, Side::In, n, rng);
      if (k1 == k2 || l1 == l2) continue;
      D2KTargets q = p;
      if (adjust_jdam(q, k1, l1, 1) && adjust_jdam(q, k1, l2, -1) && adjust_jdam(q, k2, l1, -1) &&
          adjust_jdam(q, k2, l2, 1)) {
        p = std::move(q);
        return;
      }
    }
  };
  auto single = [&] {
    const int delta = std::bernoulli_distribution(0.5)(rng) ? 1 : -1;
    adjust_jdam(p, random_cell(t.mode, Side::Out, n, rng), random_cell(t.mode, Side::In, n, rng),
                delta);
  };
  auto degree_edit = [&] {
    const NodeId v = std::uniform_int_distribution<NodeId>(0, n - 1)(rng);
    Degree& d = std::bernoulli_distribution(0.5)(rng) ? p.dds[v].in : p.dds[v].out;
    if (d == 0 || (d + 1 < n && std::bernoulli_distribution(0.5)(rng))) {
      ++d;
    } else {
      --d;
    }
  };
  switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
    case 0: rectangle(); break;
    case 1: single(); break;
    case 2: degree_edit(); break;
    default:
      degree_edit();
      rectangle();
      break;
  }
  return p;
}

}  // namespace d2k::testing
