#include "d2k/baselines.hpp"

#include <algorithm>
#include <random>
#include <set>

#include <absl/container/flat_hash_map.h>
#include <absl/container/flat_hash_set.h>

#include "d2k/swaps.hpp"

namespace d2k {

namespace {

using Rng = std::mt19937_64;

NodeId pick_node(NodeId n, Rng& rng) { return std::uniform_int_distribution<NodeId>(0, n - 1)(rng); }

/// Uniform sample of `k` distinct unordered pairs {u < v}, in random order.
std::vector<Edge> sample_unordered_pairs(NodeId n, Count k, Rng& rng) {
  const Count total = pairs_of(n);
  std::vector<Edge> pairs;
  pairs.reserve(k);
  auto draw = [&] {
    NodeId u = pick_node(n, rng);
    NodeId v = pick_node(n, rng);
    while (u == v) v = pick_node(n, rng);
    return u < v ? Edge{u, v} : Edge{v, u};
  };
  if (2 * k <= total) {
    absl::flat_hash_set<std::uint64_t> taken;
    while (pairs.size() < k) {
      const auto e = draw();
      if (taken.insert(pack(e.first, e.second)).second) pairs.push_back(e);
    }
  } else {
    absl::flat_hash_set<std::uint64_t> excluded;
    while (excluded.size() < total - k) {
      const auto e = draw();
      excluded.insert(pack(e.first, e.second));
    }
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = u + 1; v < n; ++v) {
        if (!excluded.contains(pack(u, v))) pairs.emplace_back(u, v);
      }
    }
    std::shuffle(pairs.begin(), pairs.end(), rng);
  }
  return pairs;
}

void validate_dds(const DdsTargets& t) {
  if (t.dds.size() != t.n) throw InvalidArgument("dds length does not match n");
  Count in_sum = 0;
  Count out_sum = 0;
  for (NodeId v = 0; v < t.n; ++v) {
    in_sum += t.dds[v].in;
    out_sum += t.dds[v].out;
    if (t.dds[v].in >= t.n || t.dds[v].out >= t.n) {
      throw Unrealizable("node " + std::to_string(v) + " has degree above n-1");
    }
  }
  if (in_sum != out_sum) throw Unrealizable("in-degree and out-degree sums differ");
}

DirectedGraph kleitman_wang_impl(const DdsTargets& t, Rng& rng) {
  validate_dds(t);
  const NodeId n = t.n;
  std::vector<std::uint64_t> tie(n);
  for (auto& x : tie) x = rng();
  std::vector<Degree> in_rem(n);
  std::vector<Degree> out_rem(n);
  for (NodeId v = 0; v < n; ++v) {
    in_rem[v] = t.dds[v].in;
    out_rem[v] = t.dds[v].out;
  }

  // Targets are taken in order of largest remaining in-degree, then largest
  // remaining out-degree; only fully tied nodes are ordered at random.
  struct Key {
    Degree in;
    Degree out;
    std::uint64_t tie;
    NodeId v;
    bool operator<(const Key& o) const {
      if (in != o.in) return in > o.in;
      if (out != o.out) return out > o.out;
      if (tie != o.tie) return tie < o.tie;
      return v < o.v;
    }
  };
  auto key = [&](NodeId v) { return Key{in_rem[v], out_rem[v], tie[v], v}; };
  std::set<Key> pool;
  for (NodeId v = 0; v < n; ++v) {
    if (in_rem[v] > 0) pool.insert(key(v));
  }

  std::vector<NodeId> order;
  for (NodeId v = 0; v < n; ++v) {
    if (out_rem[v] > 0) order.push_back(v);
  }
  std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    if (out_rem[a] != out_rem[b]) return out_rem[a] > out_rem[b];
    return tie[a] < tie[b];
  });

  DirectedGraph g(n);
  std::vector<NodeId> chosen;
  for (NodeId u : order) {
    if (in_rem[u] > 0) pool.erase(key(u));
    chosen.clear();
    for (auto it = pool.begin(); it != pool.end() && chosen.size() < out_rem[u]; ++it) {
      chosen.push_back(it->v);
    }
    if (chosen.size() < out_rem[u]) {
      throw Unrealizable("directed degree sequence is not graphical (node " + std::to_string(u) +
                         " cannot place " + std::to_string(out_rem[u]) + " out-edges)");
    }
    for (NodeId w : chosen) {
      pool.erase(key(w));
      --in_rem[w];
      g.add_edge(u, w);
      if (in_rem[w] > 0) pool.insert(key(w));
    }
    out_rem[u] = 0;
    if (in_rem[u] > 0) pool.insert(key(u));
  }
  return g;
}

}  // namespace

DirectedGraph gen_d0k(const SizeTargets& t, std::uint64_t seed) {
  const Count slots = static_cast<Count>(t.n) * (t.n == 0 ? 0 : t.n - 1);
  if (t.m > slots) {
    throw Unrealizable("m = " + std::to_string(t.m) + " exceeds n(n-1) = " + std::to_string(slots));
  }
  Rng rng(seed);
  DirectedGraph g(t.n);
  if (2 * t.m <= slots) {
    while (g.num_edges() < t.m) g.add_edge(pick_node(t.n, rng), pick_node(t.n, rng));
    return g;
  }
  absl::flat_hash_set<std::uint64_t> excluded;
  while (excluded.size() < slots - t.m) {
    const NodeId u = pick_node(t.n, rng);
    const NodeId v = pick_node(t.n, rng);
    if (u != v) excluded.insert(pack(u, v));
  }
  for (NodeId u = 0; u < t.n; ++u) {
    for (NodeId v = 0; v < t.n; ++v) {
      if (u != v && !excluded.contains(pack(u, v))) g.add_edge(u, v);
    }
  }
  return g;
}

DirectedGraph gen_uman(const UmanTargets& t, std::uint64_t seed) {
  if (t.mutual + t.asymmetric + t.null != pairs_of(t.n)) {
    throw Unrealizable("dyad counts do not sum to n(n-1)/2");
  }
  Rng rng(seed);
  const auto pairs = sample_unordered_pairs(t.n, t.mutual + t.asymmetric, rng);
  DirectedGraph g(t.n);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [u, v] = pairs[i];
    if (i < t.mutual) {
      g.add_edge(u, v);
      g.add_edge(v, u);
    } else if (coin(rng)) {
      g.add_edge(u, v);
    } else {
      g.add_edge(v, u);
    }
  }
  return g;
}

DirectedGraph kleitman_wang(const DdsTargets& t, std::uint64_t seed) {
  Rng rng(seed);
  return kleitman_wang_impl(t, rng);
}

DirectedGraph gen_d1k(const DdsTargets& t, std::uint64_t seed, const D1kOptions& options) {
  Rng rng(seed);
  DirectedGraph g = kleitman_wang_impl(t, rng);
  const Count m = g.num_edges();
  const Count rounds = options.swap_rounds.value_or(10 * m);
  if (m < 2 || rounds == 0) return g;

  auto edges = g.edges();
  absl::flat_hash_map<std::uint64_t, std::size_t> index;
  index.reserve(m);
  for (std::size_t i = 0; i < edges.size(); ++i) index[pack(edges[i].first, edges[i].second)] = i;
  auto replace = [&](const Edge& old_edge, const Edge& new_edge) {
    auto node = index.extract(pack(old_edge.first, old_edge.second));
    D2K_ENSURE(!node.empty(), "edge index out of sync");
    edges[node.mapped()] = new_edge;
    index[pack(new_edge.first, new_edge.second)] = node.mapped();
  };

  std::uniform_int_distribution<std::size_t> pick_edge(0, m - 1);
  std::bernoulli_distribution try_c6(options.c6_probability);
  constexpr int kCycleProbes = 8;
  std::vector<NodeId> closers;

  for (Count r = 0; r < rounds; ++r) {
    if (try_c6(rng)) {
      for (int probe = 0; probe < kCycleProbes; ++probe) {
        const auto [u, v] = edges[pick_edge(rng)];
        closers.clear();
        for (NodeId w : g.out_neighbors(v)) {
          if (w != u && g.has_edge(w, u)) closers.push_back(w);
        }
        if (closers.empty()) continue;
        const NodeId w = closers[std::uniform_int_distribution<std::size_t>(0, closers.size() - 1)(rng)];
        if (apply_swap(g, c6_reverse(u, v, w)) == SwapStatus::Applied) {
          replace({u, v}, {v, u});
          replace({v, w}, {w, v});
          replace({w, u}, {u, w});
        }
        break;
      }
      continue;
    }
    const std::size_t i = pick_edge(rng);
    const std::size_t j = pick_edge(rng);
    if (i == j) continue;
    const Edge first = edges[i];
    const Edge second = edges[j];
    if (apply_swap(g, double_swap(SwapKind::DegreeDouble, first, second)) == SwapStatus::Applied) {
      replace(first, {first.first, second.second});
      replace(second, {second.first, first.second});
    }
  }
  D2K_ENSURE(extract_dds(g) == t, "swap phase changed a degree");
  return g;
}

}  // namespace d2k
