#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "d2k/io.hpp"

namespace d2k::cli {

/// Process exit codes.
enum ExitCode : int { kOk = 0, kFailure = 1, kUnrealizable = 2 };

/// Comma-separated metric names, or "all". Throws InvalidArgument on an unknown name.
std::vector<Metric> parse_metric_list(std::string_view list);

/// "<model>_seed<seed>.txt"
std::string instance_filename(Model model, std::uint64_t seed);

int cmd_extract(const std::filesystem::path& input, Model model,
                const std::filesystem::path& output, std::ostream& out, std::ostream& err);

int cmd_check(const std::filesystem::path& target, bool as_json, std::ostream& out,
              std::ostream& err);

struct GenerateOptions {
  std::uint64_t seed = 1;
  Count count = 1;
  std::optional<Count> swap_rounds;
  std::filesystem::path output_dir = ".";
};

/// Writes instances seed, seed+1, ..., seed+count-1.
int cmd_generate(const std::filesystem::path& target, const GenerateOptions& options,
                 std::ostream& out, std::ostream& err);

struct MeasureOptions {
  std::vector<Metric> metrics;
  MeasureConfig config;
  std::optional<std::filesystem::path> csv_dir;
};

int cmd_measure(const std::filesystem::path& graph, const MeasureOptions& options,
                const std::filesystem::path& output, std::ostream& out, std::ostream& err);

/// Inputs ending in ".json" are read as metrics files, anything else as edge
/// lists measured with `options`.
int cmd_compare(const std::filesystem::path& original,
                const std::vector<std::filesystem::path>& generated, const MeasureOptions& options,
                const std::filesystem::path& output, std::ostream& out, std::ostream& err);

}  // namespace d2k::cli
