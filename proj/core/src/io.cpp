#include "d2k/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "d2k/construct.hpp"

namespace d2k {

using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

constexpr std::array<std::string_view, 5> kModelNames = {"d0k", "uman", "d1k", "d2k", "d2km"};

[[noreturn]] void fail(const std::string& what, std::size_t position = 0) {
  throw ParseError(position, what);
}

// One top-level key per line with compact values; keys come out sorted.
std::string dump(const json& j) {
  std::string out = "{\n";
  bool first = true;
  for (const auto& [key, value] : j.items()) {
    if (!first) out += ",\n";
    first = false;
    out += "  " + json(key).dump() + ": " + value.dump();
  }
  return out + "\n}\n";
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.byte, e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object()) fail(std::string("expected an object holding \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field \"") + key + "\"");
  return *it;
}

std::uint64_t as_uint(const json& j, const char* what) {
  if (!j.is_number_unsigned()) fail(std::string(what) + " must be a non-negative integer");
  return j.get<std::uint64_t>();
}

std::uint32_t as_u32(const json& j, const char* what) {
  const auto v = as_uint(j, what);
  if (v > 0xffffffffu) fail(std::string(what) + " is out of range");
  return static_cast<std::uint32_t>(v);
}

double as_double(const json& j, const char* what) {
  if (!j.is_number()) fail(std::string(what) + " must be a number");
  return j.get<double>();
}

bool as_bool(const json& j, const char* what) {
  if (!j.is_boolean()) fail(std::string(what) + " must be a boolean");
  return j.get<bool>();
}

const json& as_array(const json& j, const char* what, std::optional<std::size_t> size = {}) {
  if (!j.is_array()) fail(std::string(what) + " must be an array");
  if (size && j.size() != *size) {
    fail(std::string(what) + " must have " + std::to_string(*size) + " entries");
  }
  return j;
}

void check_version(const json& j) {
  if (as_uint(field(j, "v"), "v") != kSchemaVersion) fail("unsupported schema version");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!out) throw Error("write failed: " + path.string());
}

// ---------------------------------------------------------------------------
// Targets

const char* side_name(Side s) { return s == Side::In ? "in" : "out"; }

Side parse_side(const json& j) {
  if (j == "in") return Side::In;
  if (j == "out") return Side::Out;
  fail("side must be \"in\" or \"out\"");
}

json cell_to_json(const CellKey& k, PartitionMode mode) {
  json j;
  j["side"] = side_name(k.side);
  if (mode == PartitionMode::D2Km) {
    j["label"] = json::array({k.in, k.out});
  } else {
    j["degree"] = k.degree();
  }
  return j;
}

CellKey cell_from_json(const json& j, PartitionMode mode) {
  CellKey k;
  k.side = parse_side(field(j, "side"));
  if (mode == PartitionMode::D2Km) {
    const auto& label = as_array(field(j, "label"), "label", 2);
    k.in = as_u32(label[0], "label");
    k.out = as_u32(label[1], "label");
  } else {
    const Degree d = as_u32(field(j, "degree"), "degree");
    (k.side == Side::In ? k.in : k.out) = d;
  }
  return k;
}

json dds_to_json(const std::vector<DegreePair>& dds) {
  json j = json::array();
  for (const auto& p : dds) j.push_back({p.in, p.out});
  return j;
}

std::vector<DegreePair> dds_from_json(const json& j, NodeId n) {
  as_array(j, "dds", n);
  std::vector<DegreePair> dds;
  dds.reserve(n);
  for (const auto& e : j) {
    as_array(e, "dds entry", 2);
    dds.push_back({as_u32(e[0], "in-degree"), as_u32(e[1], "out-degree")});
  }
  return dds;
}

}  // namespace

std::string_view model_name(Model m) noexcept { return kModelNames[static_cast<std::size_t>(m)]; }

std::optional<Model> parse_model(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kModelNames.size(); ++i) {
    if (kModelNames[i] == name) return static_cast<Model>(i);
  }
  return std::nullopt;
}

NodeId TargetFile::n() const noexcept {
  return std::visit([](const auto& t) { return t.n; }, payload);
}

TargetFile extract_target(const DirectedGraph& g, Model model) {
  switch (model) {
    case Model::D0K: return {model, extract_size(g)};
    case Model::Uman: return {model, extract_uman(g)};
    case Model::D1K: return {model, extract_dds(g)};
    case Model::D2K: return {model, extract_d2k(g, PartitionMode::D2K)};
    case Model::D2Km: return {model, extract_d2k(g, PartitionMode::D2Km)};
  }
  throw InvalidArgument("unknown model");
}

DirectedGraph generate_target(const TargetFile& t, std::uint64_t seed, const D1kOptions& d1k) {
  switch (t.model) {
    case Model::D0K: return gen_d0k(std::get<SizeTargets>(t.payload), seed);
    case Model::Uman: return gen_uman(std::get<UmanTargets>(t.payload), seed);
    case Model::D1K: return gen_d1k(std::get<DdsTargets>(t.payload), seed, d1k);
    case Model::D2K:
    case Model::D2Km: return generate(std::get<D2KTargets>(t.payload), seed);
  }
  throw InvalidArgument("unknown model");
}

std::string target_to_json(const TargetFile& t) {
  json j;
  j["v"] = kSchemaVersion;
  j["model"] = model_name(t.model);
  j["n"] = t.n();
  std::visit(
      [&](const auto& p) {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, SizeTargets>) {
          j["m"] = p.m;
        } else if constexpr (std::is_same_v<P, UmanTargets>) {
          j["mutual"] = p.mutual;
          j["asymmetric"] = p.asymmetric;
          j["null"] = p.null;
        } else if constexpr (std::is_same_v<P, DdsTargets>) {
          j["dds"] = dds_to_json(p.dds);
        } else {
          j["dds"] = dds_to_json(p.dds);
          json entries = json::array();
          for (const auto& [pair, count] : p.jdam) {
            if (pair.second < pair.first) continue;
            entries.push_back({{"a", cell_to_json(pair.first, p.mode)},
                               {"b", cell_to_json(pair.second, p.mode)},
                               {"count", count}});
          }
          j["jdam"] = std::move(entries);
        }
      },
      t.payload);
  return dump(j);
}

TargetFile target_from_json(std::string_view text) {
  const json j = parse(text);
  check_version(j);
  const auto& model_field = field(j, "model");
  if (!model_field.is_string()) fail("model must be a string");
  const auto model = parse_model(model_field.get<std::string>());
  if (!model) fail("unknown model \"" + model_field.get<std::string>() + "\"");
  const NodeId n = as_u32(field(j, "n"), "n");

  TargetFile t;
  t.model = *model;
  switch (*model) {
    case Model::D0K:
      t.payload = SizeTargets{n, as_uint(field(j, "m"), "m")};
      break;
    case Model::Uman: {
      UmanTargets u{n, as_uint(field(j, "mutual"), "mutual"),
                    as_uint(field(j, "asymmetric"), "asymmetric"), as_uint(field(j, "null"), "null")};
      if (u.mutual + u.asymmetric + u.null != pairs_of(n)) {
        fail("dyad counts do not sum to n(n-1)/2");
      }
      t.payload = u;
      break;
    }
    case Model::D1K:
      t.payload = DdsTargets{n, dds_from_json(field(j, "dds"), n)};
      break;
    case Model::D2K:
    case Model::D2Km: {
      D2KTargets d;
      d.mode = *model == Model::D2K ? PartitionMode::D2K : PartitionMode::D2Km;
      d.n = n;
      d.dds = dds_from_json(field(j, "dds"), n);
      const auto& entries = as_array(field(j, "jdam"), "jdam");
      for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& e = entries[i];
        const CellKey a = cell_from_json(field(e, "a"), d.mode);
        const CellKey b = cell_from_json(field(e, "b"), d.mode);
        const Count count = as_uint(field(e, "count"), "count");
        if (!well_formed(d.mode, a) || !well_formed(d.mode, b)) {
          fail("jdam entry has a cell label that does not fit the model", i + 1);
        }
        if (count == 0) fail("jdam entry with zero count", i + 1);
        if (d.jdam.contains({a, b})) fail("jdam pair listed twice", i + 1);
        d.add_jdam(a, b, count);
      }
      const auto report = check(d);
      if (!report.structural_errors.empty()) fail(report.structural_errors.front());
      t.payload = std::move(d);
      break;
    }
  }
  return t;
}

void save_target(const std::filesystem::path& path, const TargetFile& t) {
  write_file(path, target_to_json(t));
}

TargetFile load_target(const std::filesystem::path& path) { return target_from_json(read_file(path)); }

std::string realizability_to_json(const RealizabilityReport& report, PartitionMode mode) {
  json j;
  j["v"] = kSchemaVersion;
  j["realizable"] = report.realizable;
  j["structural_errors"] = report.structural_errors;
  json violations = json::array();
  for (const auto& v : report.violations) {
    json e;
    e["condition"] = condition_name(v.condition);
    e["cell"] = cell_to_json(v.cell, mode);
    if (v.other) e["other"] = cell_to_json(*v.other, mode);
    e["lhs"] = v.lhs;
    e["rhs"] = v.rhs;
    violations.push_back(std::move(e));
  }
  j["violations"] = std::move(violations);
  return dump(j);
}

// ---------------------------------------------------------------------------
// Metrics

namespace {

json histogram_to_json(const Histogram& h) {
  json j = json::array();
  for (const auto& [k, c] : h) j.push_back({k, c});
  return j;
}

Histogram histogram_from_json(const json& j, const char* what) {
  Histogram h;
  for (const auto& e : as_array(j, what)) {
    as_array(e, what, 2);
    h[as_uint(e[0], what)] = as_uint(e[1], what);
  }
  return h;
}

json profile_to_json(const NeighborDegreeProfile& p) {
  json j = json::array();
  for (const auto& [d, r] : p) j.push_back({d, r.sum, r.count});
  return j;
}

NeighborDegreeProfile profile_from_json(const json& j) {
  NeighborDegreeProfile p;
  for (const auto& e : as_array(j, "avg_neighbor_degree")) {
    as_array(e, "avg_neighbor_degree entry", 3);
    p[as_u32(e[0], "degree")] = Ratio{as_uint(e[1], "sum"), as_uint(e[2], "count")};
  }
  return p;
}

json expansion_to_json(const std::vector<ExpansionEntry>& entries) {
  json j = json::array();
  for (const auto& e : entries) j.push_back({e.node, e.first_hop, e.second_hop});
  return j;
}

std::vector<ExpansionEntry> expansion_from_json(const json& j) {
  std::vector<ExpansionEntry> out;
  for (const auto& e : as_array(j, "expansion")) {
    as_array(e, "expansion entry", 3);
    out.push_back({as_u32(e[0], "node"), as_uint(e[1], "first hop"), as_uint(e[2], "second hop")});
  }
  return out;
}

const char* spectrum_name(SpectrumOperator op) {
  return op == SpectrumOperator::Directed ? "directed" : "symmetrized";
}

SpectrumOperator parse_spectrum(const json& j) {
  if (j == "directed") return SpectrumOperator::Directed;
  if (j == "symmetrized") return SpectrumOperator::Symmetrized;
  fail("spectrum operator must be \"directed\" or \"symmetrized\"");
}

json config_to_json(const MeasureConfig& c) {
  return {{"seed", c.seed},
          {"exact_threshold", c.exact_threshold},
          {"sample_sources", c.sample_sources},
          {"eigen_k", c.eigen_k},
          {"dense_eigen_threshold", c.dense_eigen_threshold},
          {"spectrum", spectrum_name(c.spectrum)},
          {"threads", c.threads}};
}

MeasureConfig config_from_json(const json& j) {
  MeasureConfig c;
  c.seed = as_uint(field(j, "seed"), "seed");
  c.exact_threshold = as_u32(field(j, "exact_threshold"), "exact_threshold");
  c.sample_sources = as_uint(field(j, "sample_sources"), "sample_sources");
  c.eigen_k = as_u32(field(j, "eigen_k"), "eigen_k");
  c.dense_eigen_threshold = as_u32(field(j, "dense_eigen_threshold"), "dense_eigen_threshold");
  c.spectrum = parse_spectrum(field(j, "spectrum"));
  c.threads = as_u32(field(j, "threads"), "threads");
  return c;
}

}  // namespace

std::string report_to_json(const CensusReport& r) {
  json j;
  j["v"] = kSchemaVersion;
  j["n"] = r.n;
  j["m"] = r.m;
  j["config"] = config_to_json(r.config);
  j["notes"] = r.notes;
  json m = json::object();
  if (r.degree_distribution) {
    m["degree_distribution"] = {{"in", histogram_to_json(r.degree_distribution->in)},
                                {"out", histogram_to_json(r.degree_distribution->out)}};
  }
  if (r.degree_correlation) {
    json e = json::array();
    for (const auto& [key, c] : *r.degree_correlation) e.push_back({key.first, key.second, c});
    m["degree_correlation"] = std::move(e);
  }
  if (r.avg_neighbor_degree) {
    const auto& p = *r.avg_neighbor_degree;
    m["avg_neighbor_degree"] = {{"out_in", profile_to_json(p.out_in)},
                                {"out_out", profile_to_json(p.out_out)},
                                {"in_out", profile_to_json(p.in_out)},
                                {"in_in", profile_to_json(p.in_in)}};
  }
  if (r.dyad_census) {
    m["dyad_census"] = {{"mutual", r.dyad_census->mutual},
                        {"asymmetric", r.dyad_census->asymmetric},
                        {"null", r.dyad_census->null}};
  }
  if (r.triad_census) {
    json t = json::object();
    for (std::size_t i = 0; i < 16; ++i) t[std::string(triad_labels()[i])] = (*r.triad_census)[i];
    m["triad_census"] = std::move(t);
  }
  if (r.dsp) {
    m["dsp"] = {{"two_path", histogram_to_json(r.dsp->two_path)},
                {"outgoing", histogram_to_json(r.dsp->outgoing)},
                {"incoming", histogram_to_json(r.dsp->incoming)}};
  }
  if (r.expansion) {
    m["expansion"] = {{"out", expansion_to_json(r.expansion->out)},
                      {"in", expansion_to_json(r.expansion->in)}};
  }
  if (r.shortest_paths) {
    m["shortest_paths"] = {{"counts", histogram_to_json(r.shortest_paths->counts)},
                           {"sampled", r.shortest_paths->sampled},
                           {"sources", r.shortest_paths->sources}};
  }
  if (r.scc_sizes) m["scc"] = histogram_to_json(*r.scc_sizes);
  if (r.core_numbers) m["kcore"] = histogram_to_json(*r.core_numbers);
  if (r.betweenness) {
    m["betweenness"] = {{"values", r.betweenness->values},
                        {"sampled", r.betweenness->sampled},
                        {"pivots", r.betweenness->pivots}};
  }
  if (r.eigenvalues) {
    m["eigenvalues"] = {{"magnitudes", r.eigenvalues->magnitudes},
                        {"operator", spectrum_name(r.eigenvalues->op)},
                        {"method", r.eigenvalues->method},
                        {"converged", r.eigenvalues->converged}};
  }
  j["metrics"] = std::move(m);
  return dump(j);
}

CensusReport report_from_json(std::string_view text) {
  const json j = parse(text);
  check_version(j);
  CensusReport r;
  r.n = as_u32(field(j, "n"), "n");
  r.m = as_uint(field(j, "m"), "m");
  r.config = config_from_json(field(j, "config"));
  const auto& notes = field(j, "notes");
  if (!notes.is_object()) fail("notes must be an object");
  for (const auto& [k, v] : notes.items()) {
    if (!v.is_string()) fail("notes values must be strings");
    r.notes[k] = v.get<std::string>();
  }
  const auto& m = field(j, "metrics");
  if (!m.is_object()) fail("metrics must be an object");
  for (const auto& [name, value] : m.items()) {
    const auto metric = parse_metric(name);
    if (!metric) fail("unknown metric \"" + name + "\"");
    switch (*metric) {
      case Metric::DegreeDistribution:
        r.degree_distribution = DegreeDistribution{histogram_from_json(field(value, "in"), "in"),
                                                   histogram_from_json(field(value, "out"), "out")};
        break;
      case Metric::DegreeCorrelation: {
        JointDegreeCounts c;
        for (const auto& e : as_array(value, "degree_correlation")) {
          as_array(e, "degree_correlation entry", 3);
          c[{as_u32(e[0], "degree"), as_u32(e[1], "degree")}] = as_uint(e[2], "count");
        }
        r.degree_correlation = std::move(c);
        break;
      }
      case Metric::AvgNeighborDegree:
        r.avg_neighbor_degree = NeighborDegreeProfiles{
            profile_from_json(field(value, "out_in")), profile_from_json(field(value, "out_out")),
            profile_from_json(field(value, "in_out")), profile_from_json(field(value, "in_in"))};
        break;
      case Metric::DyadCensus:
        r.dyad_census = DyadCensus{as_uint(field(value, "mutual"), "mutual"),
                                   as_uint(field(value, "asymmetric"), "asymmetric"),
                                   as_uint(field(value, "null"), "null")};
        break;
      case Metric::TriadCensus: {
        TriadCensus t{};
        for (std::size_t i = 0; i < 16; ++i) {
          t[i] = as_uint(field(value, std::string(triad_labels()[i]).c_str()), "triad count");
        }
        r.triad_census = t;
        break;
      }
      case Metric::Dsp:
        r.dsp = DspHistograms{histogram_from_json(field(value, "two_path"), "two_path"),
                              histogram_from_json(field(value, "outgoing"), "outgoing"),
                              histogram_from_json(field(value, "incoming"), "incoming")};
        break;
      case Metric::Expansion:
        r.expansion = ExpansionProfiles{expansion_from_json(field(value, "out")),
                                        expansion_from_json(field(value, "in"))};
        break;
      case Metric::ShortestPaths:
        r.shortest_paths = PathHistogram{histogram_from_json(field(value, "counts"), "counts"),
                                         as_bool(field(value, "sampled"), "sampled"),
                                         as_uint(field(value, "sources"), "sources")};
        break;
      case Metric::Scc: r.scc_sizes = histogram_from_json(value, "scc"); break;
      case Metric::KCore: r.core_numbers = histogram_from_json(value, "kcore"); break;
      case Metric::Betweenness: {
        Betweenness b;
        for (const auto& x : as_array(field(value, "values"), "values")) {
          b.values.push_back(as_double(x, "betweenness"));
        }
        b.sampled = as_bool(field(value, "sampled"), "sampled");
        b.pivots = as_uint(field(value, "pivots"), "pivots");
        r.betweenness = std::move(b);
        break;
      }
      case Metric::Eigenvalues: {
        Spectrum s;
        for (const auto& x : as_array(field(value, "magnitudes"), "magnitudes")) {
          s.magnitudes.push_back(as_double(x, "magnitude"));
        }
        s.op = parse_spectrum(field(value, "operator"));
        const auto& method = field(value, "method");
        if (!method.is_string()) fail("method must be a string");
        s.method = method.get<std::string>();
        s.converged = as_bool(field(value, "converged"), "converged");
        r.eigenvalues = std::move(s);
        break;
      }
    }
  }
  return r;
}

void save_report(const std::filesystem::path& path, const CensusReport& r) {
  write_file(path, report_to_json(r));
}

CensusReport load_report(const std::filesystem::path& path) {
  return report_from_json(read_file(path));
}

namespace {

std::string histogram_csv(const char* key, const Histogram& h) {
  std::ostringstream os;
  os << key << ",count\n";
  for (const auto& [k, c] : h) os << k << ',' << c << '\n';
  return os.str();
}

std::string precise(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace

std::map<std::string, std::string> report_to_csv(const CensusReport& r) {
  std::map<std::string, std::string> files;
  if (r.degree_distribution) {
    std::ostringstream os;
    os << "direction,degree,count\n";
    for (const auto& [d, c] : r.degree_distribution->in) os << "in," << d << ',' << c << '\n';
    for (const auto& [d, c] : r.degree_distribution->out) os << "out," << d << ',' << c << '\n';
    files["degree_distribution"] = os.str();
  }
  if (r.degree_correlation) {
    std::ostringstream os;
    os << "source_out_degree,target_in_degree,edges\n";
    for (const auto& [key, c] : *r.degree_correlation) {
      os << key.first << ',' << key.second << ',' << c << '\n';
    }
    files["degree_correlation"] = os.str();
  }
  if (r.avg_neighbor_degree) {
    std::ostringstream os;
    os << "node_side,neighbor_side,degree,average\n";
    auto rows = [&](const char* a, const char* b, const NeighborDegreeProfile& p) {
      for (const auto& [d, ratio] : p) os << a << ',' << b << ',' << d << ',' << precise(ratio.value()) << '\n';
    };
    rows("out", "in", r.avg_neighbor_degree->out_in);
    rows("out", "out", r.avg_neighbor_degree->out_out);
    rows("in", "out", r.avg_neighbor_degree->in_out);
    rows("in", "in", r.avg_neighbor_degree->in_in);
    files["avg_neighbor_degree"] = os.str();
  }
  if (r.dyad_census) {
    std::ostringstream os;
    os << "class,count\nM," << r.dyad_census->mutual << "\nA," << r.dyad_census->asymmetric
       << "\nN," << r.dyad_census->null << '\n';
    files["dyad_census"] = os.str();
  }
  if (r.triad_census) {
    std::ostringstream os;
    os << "class,count\n";
    for (std::size_t i = 0; i < 16; ++i) os << triad_labels()[i] << ',' << (*r.triad_census)[i] << '\n';
    files["triad_census"] = os.str();
  }
  if (r.dsp) {
    // Shares are given over all ordered pairs and over pairs with at least one partner.
    std::ostringstream os;
    os << "variant,shared_partners,pairs,share_all,share_nonzero\n";
    auto rows = [&](const char* name, const Histogram& h) {
      Count all = 0;
      Count zero = 0;
      for (const auto& [k, c] : h) all += c;
      if (auto it = h.find(0); it != h.end()) zero = it->second;
      for (const auto& [k, c] : h) {
        os << name << ',' << k << ',' << c << ',' << precise(static_cast<double>(c) / all) << ',';
        if (k > 0) os << precise(static_cast<double>(c) / (all - zero));
        os << '\n';
      }
    };
    rows("two_path", r.dsp->two_path);
    rows("outgoing", r.dsp->outgoing);
    rows("incoming", r.dsp->incoming);
    files["dsp"] = os.str();
  }
  if (r.expansion) {
    std::ostringstream os;
    os << "direction,node,first_hop,second_hop,ratio\n";
    auto rows = [&](const char* dir, const std::vector<ExpansionEntry>& entries) {
      for (const auto& e : entries) {
        os << dir << ',' << e.node << ',' << e.first_hop << ',' << e.second_hop << ','
           << precise(e.ratio()) << '\n';
      }
    };
    rows("out", r.expansion->out);
    rows("in", r.expansion->in);
    files["expansion"] = os.str();
  }
  if (r.shortest_paths) files["shortest_paths"] = histogram_csv("distance", r.shortest_paths->counts);
  if (r.scc_sizes) files["scc"] = histogram_csv("size", *r.scc_sizes);
  if (r.core_numbers) files["kcore"] = histogram_csv("core", *r.core_numbers);
  if (r.betweenness) {
    std::ostringstream os;
    os << "node,betweenness\n";
    for (std::size_t v = 0; v < r.betweenness->values.size(); ++v) {
      os << v << ',' << precise(r.betweenness->values[v]) << '\n';
    }
    files["betweenness"] = os.str();
  }
  if (r.eigenvalues) {
    std::ostringstream os;
    os << "rank,magnitude\n";
    for (std::size_t i = 0; i < r.eigenvalues->magnitudes.size(); ++i) {
      os << i + 1 << ',' << precise(r.eigenvalues->magnitudes[i]) << '\n';
    }
    files["eigenvalues"] = os.str();
  }
  return files;
}

void write_report_csv(const std::filesystem::path& dir, const CensusReport& r) {
  std::filesystem::create_directories(dir);
  for (const auto& [stem, text] : report_to_csv(r)) write_file(dir / (stem + ".csv"), text);
}

std::string compare_to_json(const CompareReport& r) {
  json j;
  j["v"] = kSchemaVersion;
  j["instances"] = r.instances;
  json d = json::object();
  for (const auto& [name, c] : r.distances) {
    d[name] = {{"per_instance", c.per_instance}, {"mean", c.mean}, {"stddev", c.stddev}};
  }
  j["distances"] = std::move(d);
  return dump(j);
}

CompareReport compare_from_json(std::string_view text) {
  const json j = parse(text);
  check_version(j);
  CompareReport r;
  r.instances = as_uint(field(j, "instances"), "instances");
  const auto& d = field(j, "distances");
  if (!d.is_object()) fail("distances must be an object");
  for (const auto& [name, value] : d.items()) {
    if (!parse_metric(name)) fail("unknown metric \"" + name + "\"");
    MetricComparison c;
    for (const auto& x : as_array(field(value, "per_instance"), "per_instance")) {
      c.per_instance.push_back(as_double(x, "distance"));
    }
    c.mean = as_double(field(value, "mean"), "mean");
    c.stddev = as_double(field(value, "stddev"), "stddev");
    r.distances[name] = std::move(c);
  }
  return r;
}

}  // namespace d2k
