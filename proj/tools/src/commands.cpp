#include "d2k/commands.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include <ostream>
#include <thread>

namespace d2k::cli {

namespace {

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const Unrealizable& e) {
    err << "unrealizable: " << e.what() << '\n';
    return kUnrealizable;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

DirectedGraph read_graph(const std::filesystem::path& path, std::ostream& err) {
  auto ingest = load_edge_list(path);
  if (ingest.self_loops_removed > 0 || ingest.duplicates_removed > 0) {
    err << path.string() << ": removed " << ingest.self_loops_removed << " self-loops and "
        << ingest.duplicates_removed << " duplicate edges\n";
  }
  return std::move(ingest.graph);
}

CensusReport report_for(const std::filesystem::path& path, const MeasureOptions& options,
                        std::ostream& err) {
  if (path.extension() == ".json") return load_report(path);
  return measure(read_graph(path, err), options.metrics, options.config);
}

}  // namespace

std::vector<Metric> parse_metric_list(std::string_view list) {
  if (list == "all") return {all_metrics().begin(), all_metrics().end()};
  std::vector<Metric> metrics;
  while (!list.empty()) {
    const auto comma = list.find(',');
    const auto name = list.substr(0, comma);
    const auto m = parse_metric(name);
    if (!m) throw InvalidArgument("unknown metric \"" + std::string(name) + "\"");
    if (std::find(metrics.begin(), metrics.end(), *m) == metrics.end()) metrics.push_back(*m);
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  if (metrics.empty()) throw InvalidArgument("empty metric list");
  return metrics;
}

std::string instance_filename(Model model, std::uint64_t seed) {
  return std::string(model_name(model)) + "_seed" + std::to_string(seed) + ".txt";
}

int cmd_extract(const std::filesystem::path& input, Model model,
                const std::filesystem::path& output, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto g = read_graph(input, err);
    const auto t = extract_target(g, model);
    save_target(output, t);
    out << model_name(model) << " target: n=" << g.num_nodes() << " m=" << g.num_edges();
    if (const auto* d = std::get_if<D2KTargets>(&t.payload)) {
      out << " cells=" << d->cell_sizes().size() << " entries=" << d->jdam.size();
    }
    out << '\n';
    return kOk;
  });
}

int cmd_check(const std::filesystem::path& target, bool as_json, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const auto t = load_target(target);
    const auto* d = std::get_if<D2KTargets>(&t.payload);
    if (d == nullptr) throw InvalidArgument("check applies to d2k and d2km targets");
    const auto report = check(*d);
    out << (as_json ? realizability_to_json(report, d->mode) : describe(report, d->mode));
    return report.realizable ? kOk : kUnrealizable;
  });
}

int cmd_generate(const std::filesystem::path& target, const GenerateOptions& options,
                 std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto t = load_target(target);
    if (const auto* d = std::get_if<D2KTargets>(&t.payload)) {
      const auto report = check(*d);
      if (!report.realizable) throw Unrealizable(describe(report, d->mode));
    }
    std::filesystem::create_directories(options.output_dir);
    D1kOptions d1k;
    d1k.swap_rounds = options.swap_rounds;

    // Instances are independent; each worker takes the next seed off the
    // ladder. Failures are reported in seed order afterwards.
    const Count count = options.count;
    std::vector<std::exception_ptr> failures(count);
    std::atomic<Count> next{0};
    auto worker = [&] {
      for (Count i = next++; i < count; i = next++) {
        try {
          const auto g = generate_target(t, options.seed + i, d1k);
          save_edge_list(options.output_dir / instance_filename(t.model, options.seed + i), g);
        } catch (...) {
          failures[i] = std::current_exception();
        }
      }
    };
    const unsigned threads =
        static_cast<unsigned>(std::min<Count>(effective_threads(MeasureConfig{}), count));
    if (threads <= 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker);
    }
    for (const auto& f : failures) {
      if (f) std::rethrow_exception(f);
    }
    for (Count i = 0; i < count; ++i) {
      out << (options.output_dir / instance_filename(t.model, options.seed + i)).string() << '\n';
    }
    return kOk;
  });
}

int cmd_measure(const std::filesystem::path& graph, const MeasureOptions& options,
                const std::filesystem::path& output, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto report = measure(read_graph(graph, err), options.metrics, options.config);
    save_report(output, report);
    if (options.csv_dir) write_report_csv(*options.csv_dir, report);
    out << "measured " << options.metrics.size() << " metrics on n=" << report.n
        << " m=" << report.m << '\n';
    return kOk;
  });
}

int cmd_compare(const std::filesystem::path& original,
                const std::vector<std::filesystem::path>& generated, const MeasureOptions& options,
                const std::filesystem::path& output, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (generated.empty()) throw InvalidArgument("compare needs at least one generated graph");
    const auto base = report_for(original, options, err);
    std::vector<CensusReport> ensemble;
    ensemble.reserve(generated.size());
    for (const auto& path : generated) ensemble.push_back(report_for(path, options, err));
    const auto result = compare_reports(base, ensemble, options.metrics);
    std::ofstream file(output, std::ios::binary);
    if (!file) throw Error("cannot write " + output.string());
    file << compare_to_json(result);
    for (const auto& [name, c] : result.distances) {
      out << name << ": " << c.mean << " +- " << c.stddev << '\n';
    }
    return kOk;
  });
}

}  // namespace d2k::cli
