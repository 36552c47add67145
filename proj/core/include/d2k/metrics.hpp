#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "d2k/graph.hpp"

namespace d2k {

/// Value -> number of occurrences.
using Histogram = std::map<std::uint64_t, Count>;

/// Exact mean kept as an integer sum and count.
struct Ratio {
  Count sum = 0;
  Count count = 0;

  double value() const noexcept { return count == 0 ? 0.0 : static_cast<double>(sum) / count; }
  /// Equality of the rational values sum/count.
  friend bool operator==(const Ratio& a, const Ratio& b) noexcept {
    return static_cast<WideCount>(a.sum) * b.count ==
           static_cast<WideCount>(b.sum) * a.count;
  }
};

// ---------------------------------------------------------------------------
// Local structure

struct DyadCensus {
  Count mutual = 0;
  Count asymmetric = 0;
  Count null = 0;

  friend bool operator==(const DyadCensus&, const DyadCensus&) = default;
};

DyadCensus dyad_census(const DirectedGraph& g);

/// Triad class counts, indexed like `triad_labels()`:
/// 003 012 102 021D 021U 021C 111D 111U 030T 030C 201 120D 120U 120C 210 300.
using TriadCensus = std::array<Count, 16>;

const std::array<std::string_view, 16>& triad_labels() noexcept;
std::optional<std::size_t> triad_index(std::string_view label) noexcept;

/// Counts connected triads by scanning each linked pair's joint
/// neighborhood; the edge-free and single-dyad classes follow arithmetically.
/// Runs in O(m * max degree).
TriadCensus triad_census(const DirectedGraph& g);

enum class DspVariant : std::uint8_t {
  TwoPath,   ///< w with i->w->j
  Outgoing,  ///< w with i->w and j->w
  Incoming   ///< w with w->i and w->j
};

std::string_view dsp_name(DspVariant v) noexcept;

/// Histogram over all n(n-1) ordered pairs (i, j), i != j, of the number of
/// shared partners. Bin 0 is included.
Histogram dsp(const DirectedGraph& g, DspVariant variant, unsigned threads = 1);

enum class Direction : std::uint8_t { Out, In };

struct ExpansionEntry {
  NodeId node = 0;
  Count first_hop = 0;
  Count second_hop = 0;

  double ratio() const noexcept { return static_cast<double>(second_hop) / first_hop; }
  friend bool operator==(const ExpansionEntry&, const ExpansionEntry&) = default;
};

/// For every node with a nonempty first hop H1 (out- or in-neighbors):
/// |H2| / |H1| where H2 holds the nodes at exact directed distance 2, i.e.
/// two-hop nodes other than the node itself and H1. Nodes with empty H1 are
/// omitted.
std::vector<ExpansionEntry> expansion(const DirectedGraph& g, Direction direction);

/// degree d on `node_side` -> mean `neighbor_side` degree over all edges
/// leaving (Out) or entering (In) nodes of that degree.
using NeighborDegreeProfile = std::map<Degree, Ratio>;

NeighborDegreeProfile avg_neighbor_degree(const DirectedGraph& g, Side node_side,
                                          Side neighbor_side);

/// Edge counts keyed by (out-degree of source, in-degree of target).
using JointDegreeCounts = std::map<std::pair<Degree, Degree>, Count>;

JointDegreeCounts joint_degree_counts(const DirectedGraph& g);

// ---------------------------------------------------------------------------
// Global structure

/// Component id per node; ids are dense and assigned in completion order.
std::vector<std::uint32_t> strongly_connected_components(const DirectedGraph& g);

/// Core number of every node in the symmetrized simple graph.
std::vector<Degree> core_numbers(const DirectedGraph& g);

enum class SpectrumOperator : std::uint8_t { Directed, Symmetrized };

struct MeasureConfig {
  std::uint64_t seed = 1;
  /// Shortest paths and betweenness use every source up to this many nodes.
  NodeId exact_threshold = 5000;
  /// Source or pivot sample size above exact_threshold.
  Count sample_sources = 100;
  std::uint32_t eigen_k = 20;
  /// Dense eigensolver up to this many nodes, Arnoldi iteration above.
  NodeId dense_eigen_threshold = 2000;
  SpectrumOperator spectrum = SpectrumOperator::Directed;
  /// 0 picks the hardware concurrency. D2K_THREADS caps it either way.
  unsigned threads = 0;

  friend bool operator==(const MeasureConfig&, const MeasureConfig&) = default;
};

/// Worker count after applying the D2K_THREADS cap.
unsigned effective_threads(const MeasureConfig& config);

struct PathHistogram {
  /// distance -> number of ordered reachable pairs (s, t), s != t
  Histogram counts;
  bool sampled = false;
  Count sources = 0;

  friend bool operator==(const PathHistogram&, const PathHistogram&) = default;
};

PathHistogram shortest_path_histogram(const DirectedGraph& g, const MeasureConfig& config);

struct Betweenness {
  /// Normalized by (n-1)(n-2); sampled runs are scaled by n / pivots.
  std::vector<double> values;
  bool sampled = false;
  Count pivots = 0;

  friend bool operator==(const Betweenness&, const Betweenness&) = default;
};

Betweenness betweenness(const DirectedGraph& g, const MeasureConfig& config);

struct Spectrum {
  /// Largest eigenvalue magnitudes, descending.
  std::vector<double> magnitudes;
  SpectrumOperator op = SpectrumOperator::Directed;
  std::string method;  ///< "dense" or "arnoldi"
  bool converged = true;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

Spectrum top_eigenvalues(const DirectedGraph& g, const MeasureConfig& config);

// ---------------------------------------------------------------------------
// Report

enum class Metric : std::uint8_t {
  DegreeDistribution,
  DegreeCorrelation,
  AvgNeighborDegree,
  DyadCensus,
  TriadCensus,
  Dsp,
  Expansion,
  ShortestPaths,
  Scc,
  KCore,
  Betweenness,
  Eigenvalues,
};

std::span<const Metric> all_metrics() noexcept;
std::string_view metric_name(Metric m) noexcept;
std::optional<Metric> parse_metric(std::string_view name) noexcept;

struct DegreeDistribution {
  Histogram in;
  Histogram out;

  friend bool operator==(const DegreeDistribution&, const DegreeDistribution&) = default;
};

/// The four (node side, neighbor side) combinations.
struct NeighborDegreeProfiles {
  NeighborDegreeProfile out_in;
  NeighborDegreeProfile out_out;
  NeighborDegreeProfile in_out;
  NeighborDegreeProfile in_in;

  friend bool operator==(const NeighborDegreeProfiles&, const NeighborDegreeProfiles&) = default;
};

struct DspHistograms {
  Histogram two_path;
  Histogram outgoing;
  Histogram incoming;

  friend bool operator==(const DspHistograms&, const DspHistograms&) = default;
};

struct ExpansionProfiles {
  std::vector<ExpansionEntry> out;
  std::vector<ExpansionEntry> in;

  friend bool operator==(const ExpansionProfiles&, const ExpansionProfiles&) = default;
};

/// Measurements of one graph. Only requested metrics are populated.
struct CensusReport {
  NodeId n = 0;
  Count m = 0;
  MeasureConfig config;
  /// Modelling assumptions behind some metrics, keyed by metric name.
  std::map<std::string, std::string> notes;

  std::optional<DegreeDistribution> degree_distribution;
  std::optional<JointDegreeCounts> degree_correlation;
  std::optional<NeighborDegreeProfiles> avg_neighbor_degree;
  std::optional<DyadCensus> dyad_census;
  std::optional<TriadCensus> triad_census;
  std::optional<DspHistograms> dsp;
  std::optional<ExpansionProfiles> expansion;
  std::optional<PathHistogram> shortest_paths;
  std::optional<Histogram> scc_sizes;
  std::optional<Histogram> core_numbers;
  std::optional<Betweenness> betweenness;
  std::optional<Spectrum> eigenvalues;

  friend bool operator==(const CensusReport&, const CensusReport&) = default;
};

CensusReport measure(const DirectedGraph& g, std::span<const Metric> metrics,
                     const MeasureConfig& config);

/// Every metric.
CensusReport structural_suite(const DirectedGraph& g, const MeasureConfig& config);

}  // namespace d2k
