#include <iostream>

#include <CLI11.hpp>

#include "d2k/commands.hpp"

namespace {

std::string model_choices() {
  std::string s;
  for (int i = 0; i < 5; ++i) {
    if (i > 0) s += ", ";
    s += d2k::model_name(static_cast<d2k::Model>(i));
  }
  return s;
}

void add_measure_flags(CLI::App* cmd, std::string& metrics, d2k::MeasureConfig& config,
                       std::string& spectrum) {
  cmd->add_option("--metrics", metrics, "Comma-separated metric names or \"all\"")
      ->capture_default_str();
  cmd->add_option("--seed", config.seed, "Seed for source sampling and Arnoldi start")
      ->capture_default_str();
  cmd->add_option("--sample-sources", config.sample_sources,
                  "Sources or pivots sampled above --exact-threshold")
      ->capture_default_str();
  cmd->add_option("--exact-threshold", config.exact_threshold,
                  "Largest n measured with every source")
      ->capture_default_str();
  cmd->add_option("--eigen-k", config.eigen_k, "Number of eigenvalue magnitudes")
      ->capture_default_str();
  cmd->add_option("--spectrum", spectrum, "Adjacency operator: directed or symmetrized")
      ->check(CLI::IsMember({"directed", "symmetrized"}))
      ->capture_default_str();
  cmd->add_option("--threads", config.threads, "Worker threads, 0 for all cores")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace d2k;
  CLI::App app{"Directed 2K graph toolkit: extract targets, check, generate, measure, compare"};
  app.require_subcommand(1);

  std::string input;
  std::string output;
  std::string model_text;
  std::string metrics = "all";
  std::string spectrum = "directed";
  bool as_json = false;
  MeasureConfig config;
  cli::GenerateOptions gen;
  Count swap_rounds = 0;
  std::string csv_dir;
  std::vector<std::string> generated;

  auto* extract = app.add_subcommand("extract", "Extract a target from an edge list");
  extract->add_option("input", input, "Edge list")->required();
  extract->add_option("--model", model_text, model_choices())->required();
  extract->add_option("-o,--output", output, "Target JSON")->required();

  auto* check = app.add_subcommand("check", "Test a d2k/d2km target for realizability");
  check->add_option("target", input, "Target JSON")->required();
  check->add_flag("--json", as_json, "Print the report as JSON");

  auto* generate = app.add_subcommand("generate", "Write realizations of a target");
  generate->add_option("target", input, "Target JSON")->required();
  generate->add_option("--seed", gen.seed, "First seed")->capture_default_str();
  generate->add_option("--count", gen.count, "Number of instances")->capture_default_str();
  auto* rounds = generate->add_option("--swap-rounds", swap_rounds,
                                      "D1K randomization swaps (default 10*m)");
  generate->add_option("-o,--output", output, "Output directory")->required();

  auto* measure = app.add_subcommand("measure", "Measure an edge list");
  measure->add_option("graph", input, "Edge list")->required();
  measure->add_option("-o,--output", output, "Metrics JSON")->required();
  measure->add_option("--csv", csv_dir, "Also write one CSV per metric here");
  add_measure_flags(measure, metrics, config, spectrum);

  auto* compare = app.add_subcommand("compare", "Compare an original with generated instances");
  compare->add_option("original", input, "Edge list or metrics JSON")->required();
  compare->add_option("generated", generated, "Edge lists or metrics JSON")->required();
  compare->add_option("-o,--output", output, "Compare JSON")->required();
  add_measure_flags(compare, metrics, config, spectrum);

  CLI11_PARSE(app, argc, argv);

  config.spectrum =
      spectrum == "directed" ? SpectrumOperator::Directed : SpectrumOperator::Symmetrized;
  auto measure_options = [&]() -> std::optional<cli::MeasureOptions> {
    try {
      cli::MeasureOptions m;
      m.metrics = cli::parse_metric_list(metrics);
      m.config = config;
      if (!csv_dir.empty()) m.csv_dir = csv_dir;
      return m;
    } catch (const Error& e) {
      std::cerr << "error: " << e.what() << '\n';
      return std::nullopt;
    }
  };

  if (extract->parsed()) {
    const auto model = parse_model(model_text);
    if (!model) {
      std::cerr << "error: unknown model \"" << model_text << "\"; expected " << model_choices()
                << '\n';
      return cli::kFailure;
    }
    return cli::cmd_extract(input, *model, output, std::cout, std::cerr);
  }
  if (check->parsed()) return cli::cmd_check(input, as_json, std::cout, std::cerr);
  if (generate->parsed()) {
    if (rounds->count() > 0) gen.swap_rounds = swap_rounds;
    gen.output_dir = output;
    return cli::cmd_generate(input, gen, std::cout, std::cerr);
  }
  const auto options = measure_options();
  if (!options) return cli::kFailure;
  if (measure->parsed()) return cli::cmd_measure(input, *options, output, std::cout, std::cerr);
  std::vector<std::filesystem::path> paths(generated.begin(), generated.end());
  return cli::cmd_compare(input, paths, *options, output, std::cout, std::cerr);
}
