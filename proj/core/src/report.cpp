#include <algorithm>
#include <array>

#include "d2k/metrics.hpp"

namespace d2k {

namespace {

constexpr std::array<Metric, 12> kAllMetrics = {
    Metric::DegreeDistribution, Metric::DegreeCorrelation, Metric::AvgNeighborDegree,
    Metric::DyadCensus,         Metric::TriadCensus,       Metric::Dsp,
    Metric::Expansion,          Metric::ShortestPaths,     Metric::Scc,
    Metric::KCore,              Metric::Betweenness,       Metric::Eigenvalues};

constexpr std::array<std::string_view, 12> kMetricNames = {
    "degree_distribution", "degree_correlation", "avg_neighbor_degree", "dyad_census",
    "triad_census",        "dsp",                "expansion",           "shortest_paths",
    "scc",                 "kcore",              "betweenness",         "eigenvalues"};

template <typename Values>
Histogram histogram_of(const Values& values) {
  Histogram h;
  for (auto v : values) ++h[v];
  return h;
}

}  // namespace

std::span<const Metric> all_metrics() noexcept { return kAllMetrics; }

std::string_view metric_name(Metric m) noexcept {
  return kMetricNames[static_cast<std::size_t>(m)];
}

std::optional<Metric> parse_metric(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kMetricNames.size(); ++i) {
    if (kMetricNames[i] == name) return kAllMetrics[i];
  }
  return std::nullopt;
}

CensusReport measure(const DirectedGraph& g, std::span<const Metric> metrics,
                     const MeasureConfig& config) {
  CensusReport r;
  r.n = g.num_nodes();
  r.m = g.num_edges();
  r.config = config;
  const unsigned threads = effective_threads(config);
  auto wanted = [&](Metric m) { return std::find(metrics.begin(), metrics.end(), m) != metrics.end(); };

  if (wanted(Metric::DegreeDistribution)) {
    DegreeDistribution d;
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      ++d.in[g.in_degree(v)];
      ++d.out[g.out_degree(v)];
    }
    r.degree_distribution = std::move(d);
  }
  if (wanted(Metric::DegreeCorrelation)) {
    r.degree_correlation = joint_degree_counts(g);
    r.notes["degree_correlation"] = "edge counts keyed by (source out-degree, target in-degree)";
  }
  if (wanted(Metric::AvgNeighborDegree)) {
    r.avg_neighbor_degree = NeighborDegreeProfiles{
        avg_neighbor_degree(g, Side::Out, Side::In), avg_neighbor_degree(g, Side::Out, Side::Out),
        avg_neighbor_degree(g, Side::In, Side::Out), avg_neighbor_degree(g, Side::In, Side::In)};
  }
  if (wanted(Metric::DyadCensus)) r.dyad_census = d2k::dyad_census(g);
  if (wanted(Metric::TriadCensus)) r.triad_census = d2k::triad_census(g);
  if (wanted(Metric::Dsp)) {
    r.dsp = DspHistograms{d2k::dsp(g, DspVariant::TwoPath, threads),
                          d2k::dsp(g, DspVariant::Outgoing, threads),
                          d2k::dsp(g, DspVariant::Incoming, threads)};
    r.notes["dsp"] = "histograms over ordered pairs i != j, zero bin included";
  }
  if (wanted(Metric::Expansion)) {
    r.expansion = ExpansionProfiles{d2k::expansion(g, Direction::Out),
                                    d2k::expansion(g, Direction::In)};
    r.notes["expansion"] =
        "second hop excludes the node and its first hop; nodes with empty first hop omitted";
  }
  if (wanted(Metric::ShortestPaths)) {
    r.shortest_paths = shortest_path_histogram(g, config);
    if (r.shortest_paths->sampled) r.notes["shortest_paths"] = "sampled sources";
  }
  if (wanted(Metric::Scc)) {
    const auto component = strongly_connected_components(g);
    std::vector<Count> sizes;
    for (auto c : component) {
      if (c >= sizes.size()) sizes.resize(c + 1, 0);
      ++sizes[c];
    }
    r.scc_sizes = histogram_of(sizes);
  }
  if (wanted(Metric::KCore)) {
    r.core_numbers = histogram_of(d2k::core_numbers(g));
    r.notes["kcore"] = "computed on the symmetrized simple graph";
  }
  if (wanted(Metric::Betweenness)) {
    r.betweenness = d2k::betweenness(g, config);
    r.notes["betweenness"] = r.betweenness->sampled
                                 ? "normalized by (n-1)(n-2); sampled pivots scaled by n/pivots"
                                 : "normalized by (n-1)(n-2)";
  }
  if (wanted(Metric::Eigenvalues)) {
    r.eigenvalues = top_eigenvalues(g, config);
    r.notes["eigenvalues"] = std::string(config.spectrum == SpectrumOperator::Directed
                                             ? "directed adjacency"
                                             : "symmetrized adjacency") +
                             " magnitudes, " + r.eigenvalues->method +
                             (r.eigenvalues->converged ? "" : ", not converged");
  }
  return r;
}

CensusReport structural_suite(const DirectedGraph& g, const MeasureConfig& config) {
  return measure(g, all_metrics(), config);
}

}  // namespace d2k
