#include <doctest.h>

#include <filesystem>

#include "d2k/io.hpp"
#include "support.hpp"

using namespace d2k;
using namespace d2k::testing;

namespace {

constexpr std::array kModels = {Model::D0K, Model::Uman, Model::D1K, Model::D2K, Model::D2Km};

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "d2k_test_io";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("model names") {
  for (auto m : kModels) CHECK(parse_model(model_name(m)) == m);
  CHECK_FALSE(parse_model("d3k"));
}

TEST_CASE("target JSON round trip for every model") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = random_digraph(30, 0.1, seed);
    for (auto m : kModels) {
      const auto t = extract_target(g, m);
      const auto text = target_to_json(t);
      CHECK(target_from_json(text) == t);
      CHECK(target_to_json(target_from_json(text)) == text);
    }
  }
  const auto empty = extract_target(DirectedGraph(0), Model::Uman);
  CHECK(target_from_json(target_to_json(empty)) == empty);
  CHECK(empty.n() == 0);
}

TEST_CASE("target files on disk") {
  const auto t = extract_target(graph_of(3, {{0, 1}, {1, 2}, {2, 0}}), Model::D2Km);
  const auto path = scratch("t.json");
  save_target(path, t);
  CHECK(load_target(path) == t);
  CHECK_THROWS_AS(load_target(scratch("missing.json")), Error);
}

TEST_CASE("target JSON layout") {
  const auto t = extract_target(graph_of(3, {{0, 1}, {1, 2}, {2, 0}}), Model::D2K);
  CHECK(target_to_json(t) ==
        "{\n"
        "  \"dds\": [[1,1],[1,1],[1,1]],\n"
        "  \"jdam\": [{\"a\":{\"degree\":1,\"side\":\"in\"},\"b\":{\"degree\":1,\"side\":\"out\"},"
        "\"count\":3}],\n"
        "  \"model\": \"d2k\",\n"
        "  \"n\": 3,\n"
        "  \"v\": 1\n"
        "}\n");
}

TEST_CASE("malformed target files are parse errors") {
  const std::string base = R"({"v":1,"model":"d2k","n":2,"dds":[[0,1],[1,0]],"jdam":[)";
  const std::string cell_out = R"({"side":"out","degree":1})";
  const std::string cell_in = R"({"side":"in","degree":1})";
  auto doc = [&](const std::string& entries) { return base + entries + "]}"; };

  CHECK_NOTHROW(target_from_json(doc("{\"a\":" + cell_out + ",\"b\":" + cell_in + ",\"count\":1}")));
  CHECK_THROWS_AS(target_from_json("{"), ParseError);
  CHECK_THROWS_AS(target_from_json(R"({"v":2,"model":"d0k","n":1,"m":0})"), ParseError);
  CHECK_THROWS_AS(target_from_json(R"({"v":1,"model":"d9k","n":1,"m":0})"), ParseError);
  CHECK_THROWS_AS(target_from_json(R"({"v":1,"model":"d0k","n":-1,"m":0})"), ParseError);
  CHECK_THROWS_AS(target_from_json(R"({"v":1,"model":"uman","n":3,"mutual":1,"asymmetric":1,"null":0})"),
                  ParseError);
  CHECK_THROWS_AS(target_from_json(R"({"v":1,"model":"d1k","n":2,"dds":[[0,1]]})"), ParseError);
  // Same pair listed in both orientations.
  CHECK_THROWS_AS(target_from_json(doc("{\"a\":" + cell_out + ",\"b\":" + cell_in +
                                       ",\"count\":1},{\"a\":" + cell_in + ",\"b\":" + cell_out +
                                       ",\"count\":1}")),
                  ParseError);
  // A D2Km label in a d2k file.
  CHECK_THROWS_AS(target_from_json(doc(R"({"a":{"side":"out","label":[0,1]},"b":)" + cell_in +
                                       ",\"count\":1}")),
                  ParseError);
  CHECK_THROWS_AS(target_from_json(doc("{\"a\":" + cell_out + ",\"b\":" + cell_in + ",\"count\":0}")),
                  ParseError);
}

TEST_CASE("unrealizable but well-formed targets load") {
  const std::string text =
      R"({"v":1,"model":"d2k","n":2,"dds":[[0,1],[1,0]],"jdam":[{"a":{"side":"out","degree":1},"b":{"side":"in","degree":1},"count":2}]})";
  const auto t = target_from_json(text);
  CHECK_FALSE(check(std::get<D2KTargets>(t.payload)).realizable);
}

TEST_CASE("generate_target dispatches on the model") {
  const auto g = random_digraph(40, 0.1, 4);
  for (auto m : kModels) {
    const auto t = extract_target(g, m);
    CHECK(extract_target(generate_target(t, 3), m) == t);
  }
}

TEST_CASE("metrics JSON round trip") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto g = random_digraph(40, 0.08, seed);
    MeasureConfig c;
    c.seed = seed;
    c.exact_threshold = seed % 2 ? 10 : 5000;
    c.sample_sources = 7;
    c.spectrum = seed % 2 ? SpectrumOperator::Symmetrized : SpectrumOperator::Directed;
    const auto r = structural_suite(g, c);
    const auto text = report_to_json(r);
    CHECK(report_from_json(text) == r);
    CHECK(report_to_json(report_from_json(text)) == text);
  }
  const std::vector<Metric> only_dsp{Metric::Dsp};
  const auto partial = measure(graph_of(3, {{0, 1}}), only_dsp, MeasureConfig{});
  const auto path = scratch("m.json");
  save_report(path, partial);
  CHECK(load_report(path) == partial);
}

TEST_CASE("realizability JSON names conditions") {
  auto t = extract_d2k(graph_of(3, {{0, 1}, {0, 2}}), PartitionMode::D2K);
  adjust_jdam(t, {Side::Out, 0, 2}, {Side::In, 1, 0}, 1);
  const auto text = realizability_to_json(check(t), t.mode);
  CHECK(text.find("\"realizable\": false") != std::string::npos);
  CHECK(text.find("\"condition\":\"III\"") != std::string::npos);
}

TEST_CASE("csv export has one document per metric") {
  const auto r = structural_suite(random_digraph(20, 0.1, 1), MeasureConfig{});
  const auto files = report_to_csv(r);
  CHECK(files.size() == all_metrics().size());
  CHECK(files.at("triad_census").starts_with("class,count\n003,"));
  CHECK(files.at("dsp").find("two_path,0,") != std::string::npos);
  const auto dir = scratch("csv");
  write_report_csv(dir, r);
  CHECK(std::filesystem::exists(dir / "betweenness.csv"));
}

TEST_CASE("distance helpers") {
  CHECK(cdf_distance(Histogram{{1, 2}, {2, 2}}, Histogram{{1, 1}, {2, 1}}) == 0.0);
  CHECK(cdf_distance(Histogram{{1, 1}}, Histogram{{2, 1}}) == 1.0);
  CHECK(cdf_distance(Histogram{{1, 1}, {2, 1}}, Histogram{{1, 1}, {3, 1}}) == doctest::Approx(0.5));
  CHECK(cdf_distance(Histogram{}, Histogram{}) == 0.0);
  CHECK(cdf_distance(Histogram{}, Histogram{{1, 1}}) == 1.0);
  CHECK(sample_distance({1, 2, 3}, {3, 2, 1}) == 0.0);
  CHECK(sample_distance({1, 2}, {3, 4}) == 1.0);
  CHECK(sample_distance({1, 2, 3, 4}, {1, 2, 3, 5}) == doctest::Approx(0.25));
  CHECK(relative_error(4, 5) == doctest::Approx(0.25));
  CHECK(relative_error(0, 2) == 2.0);
}

TEST_CASE("compare against itself is all zeros and covers exactly the request") {
  const auto g = random_digraph(50, 0.06, 8);
  const auto r = structural_suite(g, MeasureConfig{});
  const std::vector<CensusReport> ensemble{r, r};
  const std::vector<Metric> some{Metric::TriadCensus, Metric::Betweenness};
  const auto c = compare_reports(r, ensemble, some);
  CHECK(c.instances == 2);
  CHECK(c.distances.size() == 2);
  for (const auto& [name, d] : c.distances) {
    CHECK(d.per_instance == std::vector<double>{0, 0});
    CHECK(d.mean == 0.0);
  }
  CHECK(compare_from_json(compare_to_json(c)) == c);

  const auto partial = measure(g, some, MeasureConfig{});
  const std::vector<Metric> dyads{Metric::DyadCensus};
  CHECK_THROWS_AS(compare_reports(r, std::vector<CensusReport>{partial}, dyads), InvalidArgument);
}

TEST_CASE("compare reports mean and deviation over instances") {
  CensusReport a;
  a.dyad_census = DyadCensus{10, 0, 0};
  CensusReport b = a;
  b.dyad_census->mutual = 12;
  CensusReport c = a;
  c.dyad_census->mutual = 8;
  c.dyad_census->asymmetric = 0;
  const std::vector<Metric> dyads{Metric::DyadCensus};
  const auto r = compare_reports(a, std::vector<CensusReport>{b, c, a}, dyads);
  const auto& d = r.distances.at("dyad_census");
  CHECK(d.per_instance == std::vector<double>{0.2, 0.2, 0.0});
  CHECK(d.mean == doctest::Approx(0.4 / 3));
  CHECK(d.stddev == doctest::Approx(std::sqrt((2 * std::pow(0.2 - 0.4 / 3, 2) + std::pow(0.4 / 3, 2)) / 3)));
}
