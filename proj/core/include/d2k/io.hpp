#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "d2k/baselines.hpp"
#include "d2k/metrics.hpp"
#include "d2k/realizability.hpp"
#include "d2k/targets.hpp"

namespace d2k {

enum class Model : std::uint8_t { D0K, Uman, D1K, D2K, D2Km };

std::string_view model_name(Model m) noexcept;
std::optional<Model> parse_model(std::string_view name) noexcept;

using TargetPayload = std::variant<SizeTargets, UmanTargets, DdsTargets, D2KTargets>;

/// A target of any model, as exchanged between CLI commands.
struct TargetFile {
  Model model = Model::D2K;
  TargetPayload payload;

  NodeId n() const noexcept;
  friend bool operator==(const TargetFile&, const TargetFile&) = default;
};

TargetFile extract_target(const DirectedGraph& g, Model model);

/// One realization of `t` with the model's generator.
DirectedGraph generate_target(const TargetFile& t, std::uint64_t seed,
                              const D1kOptions& d1k = {});

// JSON documents carry "v": 1 and sorted keys. Loading throws ParseError on
// malformed text or payloads that fail the structural checks.

std::string target_to_json(const TargetFile& t);
TargetFile target_from_json(std::string_view text);
void save_target(const std::filesystem::path& path, const TargetFile& t);
TargetFile load_target(const std::filesystem::path& path);

std::string realizability_to_json(const RealizabilityReport& report, PartitionMode mode);

std::string report_to_json(const CensusReport& r);
CensusReport report_from_json(std::string_view text);
void save_report(const std::filesystem::path& path, const CensusReport& r);
CensusReport load_report(const std::filesystem::path& path);

/// One CSV document per populated metric, keyed by file stem.
std::map<std::string, std::string> report_to_csv(const CensusReport& r);
void write_report_csv(const std::filesystem::path& dir, const CensusReport& r);

/// Distance between an original and each generated instance for one metric.
struct MetricComparison {
  std::vector<double> per_instance;
  double mean = 0;
  /// Population standard deviation over instances.
  double stddev = 0;

  friend bool operator==(const MetricComparison&, const MetricComparison&) = default;
};

struct CompareReport {
  Count instances = 0;
  /// Keyed by metric name; covers exactly the requested metrics.
  std::map<std::string, MetricComparison> distances;

  friend bool operator==(const CompareReport&, const CompareReport&) = default;
};

/// Sup-norm of the difference of the two normalized cumulative distributions.
/// 0 when both are empty, 1 when exactly one is.
double cdf_distance(const Histogram& a, const Histogram& b);
/// Same over lexicographically ordered keys of any map with counts.
double cdf_distance(const JointDegreeCounts& a, const JointDegreeCounts& b);
/// Two-sample Kolmogorov-Smirnov statistic.
double sample_distance(std::vector<double> a, std::vector<double> b);
/// |a - b| / |a|, or |a - b| when a is 0.
double relative_error(double a, double b);

/// Distance for one metric; throws InvalidArgument when either report lacks it.
double metric_distance(const CensusReport& original, const CensusReport& generated, Metric m);

CompareReport compare_reports(const CensusReport& original, std::span<const CensusReport> generated,
                              std::span<const Metric> metrics);

std::string compare_to_json(const CompareReport& r);
CompareReport compare_from_json(std::string_view text);

}  // namespace d2k
