#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <numeric>
#include <random>
#include <thread>

#include <Eigen/Dense>

#include "d2k/metrics.hpp"
#include "parallel.hpp"

namespace d2k {

namespace {

constexpr std::size_t kSourcesPerBlock = 32;

std::vector<NodeId> pick_sources(const DirectedGraph& g, const MeasureConfig& config,
                                 bool& sampled) {
  const NodeId n = g.num_nodes();
  std::vector<NodeId> sources(n);
  std::iota(sources.begin(), sources.end(), 0u);
  sampled = n > config.exact_threshold && config.sample_sources < n;
  if (sampled) {
    std::mt19937_64 rng(config.seed);
    // Partial Fisher-Yates: the first sample_sources entries are the sample.
    for (Count i = 0; i < config.sample_sources; ++i) {
      const auto j = std::uniform_int_distribution<std::size_t>(i, n - 1)(rng);
      std::swap(sources[i], sources[j]);
    }
    sources.resize(config.sample_sources);
    std::sort(sources.begin(), sources.end());
  }
  return sources;
}

std::size_t blocks_for(std::size_t items) {
  return (items + kSourcesPerBlock - 1) / kSourcesPerBlock;
}

// y = A x for the chosen operator.
void apply_adjacency(const DirectedGraph& g, SpectrumOperator op, const Eigen::VectorXd& x,
                     Eigen::VectorXd& y) {
  y.setZero(x.size());
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    double acc = 0;
    for (NodeId v : g.out_neighbors(u)) acc += x[v];
    if (op == SpectrumOperator::Symmetrized) {
      for (NodeId v : g.in_neighbors(u)) {
        if (!g.has_edge(u, v)) acc += x[v];
      }
    }
    y[u] = acc;
  }
}

std::vector<double> sorted_magnitudes(const Eigen::VectorXcd& values, std::size_t k) {
  std::vector<double> mags(values.size());
  for (Eigen::Index i = 0; i < values.size(); ++i) mags[i] = std::abs(values[i]);
  std::sort(mags.begin(), mags.end(), std::greater<>());
  if (mags.size() > k) mags.resize(k);
  return mags;
}

Spectrum dense_spectrum(const DirectedGraph& g, const MeasureConfig& config) {
  const NodeId n = g.num_nodes();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : g.out_neighbors(u)) {
      a(u, v) = 1;
      if (config.spectrum == SpectrumOperator::Symmetrized) a(v, u) = 1;
    }
  }
  Spectrum s;
  s.op = config.spectrum;
  s.method = "dense";
  if (n == 0) return s;
  if (config.spectrum == SpectrumOperator::Symmetrized) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    s.magnitudes = sorted_magnitudes(solver.eigenvalues().cast<std::complex<double>>(),
                                     config.eigen_k);
  } else {
    Eigen::EigenSolver<Eigen::MatrixXd> solver(a, false);
    s.magnitudes = sorted_magnitudes(solver.eigenvalues(), config.eigen_k);
  }
  return s;
}

// Arnoldi iteration with explicit restarts on the sum of the wanted Ritz
// vectors. Converged when every wanted Ritz pair has residual below
// tol * |largest Ritz value|.
Spectrum arnoldi_spectrum(const DirectedGraph& g, const MeasureConfig& config) {
  const Eigen::Index n = g.num_nodes();
  const Eigen::Index k = std::min<Eigen::Index>(config.eigen_k, n);
  const Eigen::Index p = std::min<Eigen::Index>(n, std::max<Eigen::Index>(3 * k, 60));
  constexpr int kMaxRestarts = 40;
  constexpr double kTol = 1e-8;

  Spectrum s;
  s.op = config.spectrum;
  s.method = "arnoldi";
  s.converged = false;
  if (k == 0) {
    s.converged = true;
    return s;
  }

  std::mt19937_64 rng(config.seed);
  std::normal_distribution<double> normal;
  Eigen::VectorXd start(n);
  for (Eigen::Index i = 0; i < n; ++i) start[i] = normal(rng);
  start.normalize();

  Eigen::MatrixXd basis(n, p + 1);
  Eigen::MatrixXd h(p + 1, p);
  Eigen::VectorXd w(n);
  for (int restart = 0; restart < kMaxRestarts; ++restart) {
    h.setZero();
    basis.col(0) = start;
    Eigen::Index dim = p;
    for (Eigen::Index j = 0; j < p; ++j) {
      apply_adjacency(g, config.spectrum, basis.col(j), w);
      for (int pass = 0; pass < 2; ++pass) {
        const Eigen::VectorXd coeffs = basis.leftCols(j + 1).transpose() * w;
        w -= basis.leftCols(j + 1) * coeffs;
        h.col(j).head(j + 1) += coeffs;
      }
      h(j + 1, j) = w.norm();
      if (h(j + 1, j) < 1e-12) {
        dim = j + 1;
        break;
      }
      basis.col(j + 1) = w / h(j + 1, j);
    }

    Eigen::EigenSolver<Eigen::MatrixXd> solver(h.topLeftCorner(dim, dim));
    const Eigen::VectorXcd values = solver.eigenvalues();
    const Eigen::MatrixXcd vectors = solver.eigenvectors();
    std::vector<Eigen::Index> idx(dim);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](auto a, auto b) { return std::abs(values[a]) > std::abs(values[b]); });
    const Eigen::Index wanted = std::min(k, dim);

    const bool exhausted = dim < p || dim == n;
    const double scale = std::max(1.0, std::abs(values[idx[0]]));
    bool converged = true;
    for (Eigen::Index i = 0; i < wanted && !exhausted; ++i) {
      const double residual = std::abs(h(dim, dim - 1)) * std::abs(vectors(dim - 1, idx[i]));
      if (residual > kTol * scale) converged = false;
    }

    if (converged || exhausted || restart + 1 == kMaxRestarts) {
      Eigen::VectorXcd top(wanted);
      for (Eigen::Index i = 0; i < wanted; ++i) top[i] = values[idx[i]];
      s.magnitudes = sorted_magnitudes(top, config.eigen_k);
      s.converged = converged || exhausted;
      return s;
    }

    Eigen::VectorXcd combo = Eigen::VectorXcd::Zero(dim);
    for (Eigen::Index i = 0; i < wanted; ++i) combo += vectors.col(idx[i]);
    Eigen::VectorXd next = basis.leftCols(dim) * (combo.real() + combo.imag());
    if (next.norm() < 1e-12) {
      for (Eigen::Index i = 0; i < n; ++i) next[i] = normal(rng);
    }
    start = next.normalized();
  }
  return s;
}

}  // namespace

unsigned effective_threads(const MeasureConfig& config) {
  unsigned threads = config.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("D2K_THREADS")) {
    const long value = std::strtol(cap, nullptr, 10);
    if (value > 0) threads = std::min<unsigned>(threads, static_cast<unsigned>(value));
  }
  return threads;
}

std::vector<std::uint32_t> strongly_connected_components(const DirectedGraph& g) {
  // Iterative Tarjan.
  const NodeId n = g.num_nodes();
  constexpr std::uint32_t kUnset = 0xffffffffu;
  std::vector<std::uint32_t> index(n, kUnset);
  std::vector<std::uint32_t> low(n, 0);
  std::vector<std::uint32_t> component(n, kUnset);
  std::vector<NodeId> stack;
  std::vector<std::pair<NodeId, std::size_t>> frames;
  std::uint32_t next_index = 0;
  std::uint32_t next_component = 0;

  for (NodeId root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    frames.emplace_back(root, 0);
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    while (!frames.empty()) {
      auto& [v, edge] = frames.back();
      const auto nbrs = g.out_neighbors(v);
      if (edge < nbrs.size()) {
        const NodeId w = nbrs[edge++];
        if (index[w] == kUnset) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          frames.emplace_back(w, 0);
        } else if (component[w] == kUnset) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const NodeId done = v;
      frames.pop_back();
      if (!frames.empty()) {
        const NodeId parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        NodeId x;
        do {
          x = stack.back();
          stack.pop_back();
          component[x] = next_component;
        } while (x != done);
        ++next_component;
      }
    }
  }
  return component;
}

PathHistogram shortest_path_histogram(const DirectedGraph& g, const MeasureConfig& config) {
  PathHistogram result;
  const auto sources = pick_sources(g, config, result.sampled);
  result.sources = sources.size();
  const NodeId n = g.num_nodes();
  const std::size_t blocks = blocks_for(sources.size());
  std::vector<Histogram> partial(blocks);

  detail::for_each_block(blocks, effective_threads(config), [&](std::size_t block) {
    constexpr std::uint32_t kUnseen = 0xffffffffu;
    std::vector<std::uint32_t> dist(n, kUnseen);
    std::vector<NodeId> queue;
    queue.reserve(n);
    const std::size_t end = std::min(sources.size(), (block + 1) * kSourcesPerBlock);
    for (std::size_t i = block * kSourcesPerBlock; i < end; ++i) {
      queue.clear();
      queue.push_back(sources[i]);
      dist[sources[i]] = 0;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const NodeId v = queue[head];
        for (NodeId w : g.out_neighbors(v)) {
          if (dist[w] != kUnseen) continue;
          dist[w] = dist[v] + 1;
          ++partial[block][dist[w]];
          queue.push_back(w);
        }
      }
      for (NodeId v : queue) dist[v] = kUnseen;
    }
  });

  for (const auto& h : partial) {
    for (const auto& [d, c] : h) result.counts[d] += c;
  }
  return result;
}

Betweenness betweenness(const DirectedGraph& g, const MeasureConfig& config) {
  Betweenness result;
  const auto sources = pick_sources(g, config, result.sampled);
  result.pivots = sources.size();
  const NodeId n = g.num_nodes();
  const std::size_t blocks = blocks_for(sources.size());
  std::vector<std::vector<double>> partial(blocks);

  // Brandes accumulation per source, one partial vector per block so the
  // final sum runs in a fixed order regardless of thread count.
  detail::for_each_block(blocks, effective_threads(config), [&](std::size_t block) {
    constexpr std::int64_t kUnseen = -1;
    auto& acc = partial[block];
    acc.assign(n, 0.0);
    std::vector<std::int64_t> dist(n, kUnseen);
    std::vector<double> sigma(n, 0.0);
    std::vector<double> delta(n, 0.0);
    std::vector<NodeId> order;
    order.reserve(n);
    const std::size_t end = std::min(sources.size(), (block + 1) * kSourcesPerBlock);
    for (std::size_t i = block * kSourcesPerBlock; i < end; ++i) {
      const NodeId s = sources[i];
      order.clear();
      order.push_back(s);
      dist[s] = 0;
      sigma[s] = 1;
      for (std::size_t head = 0; head < order.size(); ++head) {
        const NodeId v = order[head];
        for (NodeId w : g.out_neighbors(v)) {
          if (dist[w] == kUnseen) {
            dist[w] = dist[v] + 1;
            order.push_back(w);
          }
          if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
        }
      }
      for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const NodeId w = *it;
        for (NodeId v : g.in_neighbors(w)) {
          if (dist[v] == dist[w] - 1) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
        }
        if (w != s) acc[w] += delta[w];
      }
      for (NodeId v : order) {
        dist[v] = kUnseen;
        sigma[v] = 0;
        delta[v] = 0;
      }
    }
  });

  result.values.assign(n, 0.0);
  for (const auto& acc : partial) {
    for (NodeId v = 0; v < n; ++v) result.values[v] += acc[v];
  }
  double scale = n > 2 ? 1.0 / (static_cast<double>(n - 1) * (n - 2)) : 1.0;
  if (result.sampled && result.pivots > 0) scale *= static_cast<double>(n) / result.pivots;
  for (auto& x : result.values) x *= scale;
  return result;
}

Spectrum top_eigenvalues(const DirectedGraph& g, const MeasureConfig& config) {
  if (g.num_nodes() <= config.dense_eigen_threshold) return dense_spectrum(g, config);
  return arnoldi_spectrum(g, config);
}

}  // namespace d2k
