#include <algorithm>
#include <cmath>
#include <set>

#include "d2k/io.hpp"

namespace d2k {

namespace {

template <typename Map>
double map_cdf_distance(const Map& a, const Map& b) {
  Count total_a = 0;
  Count total_b = 0;
  for (const auto& [k, c] : a) total_a += c;
  for (const auto& [k, c] : b) total_b += c;
  if (total_a == 0 && total_b == 0) return 0;
  if (total_a == 0 || total_b == 0) return 1;

  // Walk the union of keys in order; both maps are sorted.
  double worst = 0;
  Count cum_a = 0;
  Count cum_b = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      cum_a += (ia++)->second;
    } else if (ia == a.end() || ib->first < ia->first) {
      cum_b += (ib++)->second;
    } else {
      cum_a += (ia++)->second;
      cum_b += (ib++)->second;
    }
    // Exact when both cumulative fractions are equal as rationals.
    if (static_cast<WideCount>(cum_a) * total_b ==
        static_cast<WideCount>(cum_b) * total_a) {
      continue;
    }
    worst = std::max(worst, std::abs(static_cast<double>(cum_a) / total_a -
                                     static_cast<double>(cum_b) / total_b));
  }
  return worst;
}

double profile_distance(const NeighborDegreeProfile& a, const NeighborDegreeProfile& b) {
  std::set<Degree> keys;
  for (const auto& [d, r] : a) keys.insert(d);
  for (const auto& [d, r] : b) keys.insert(d);
  double worst = 0;
  for (Degree d : keys) {
    auto ia = a.find(d);
    auto ib = b.find(d);
    if (ia == a.end() || ib == b.end()) {
      worst = std::max(worst, 1.0);
    } else if (!(ia->second == ib->second)) {
      worst = std::max(worst, relative_error(ia->second.value(), ib->second.value()));
    }
  }
  return worst;
}

std::vector<double> ratios(const std::vector<ExpansionEntry>& entries) {
  std::vector<double> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.ratio());
  return out;
}

template <typename T>
const T& need(const std::optional<T>& value, Metric m) {
  if (!value) throw InvalidArgument("report lacks metric " + std::string(metric_name(m)));
  return *value;
}

}  // namespace

double cdf_distance(const Histogram& a, const Histogram& b) { return map_cdf_distance(a, b); }

double cdf_distance(const JointDegreeCounts& a, const JointDegreeCounts& b) {
  return map_cdf_distance(a, b);
}

double sample_distance(std::vector<double> a, std::vector<double> b) {
  if (a.empty() && b.empty()) return 0;
  if (a.empty() || b.empty()) return 1;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double worst = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    double x;
    if (j == b.size() || (i < a.size() && a[i] <= b[j])) {
      x = a[i];
    } else {
      x = b[j];
    }
    while (i < a.size() && a[i] == x) ++i;
    while (j < b.size() && b[j] == x) ++j;
    // Integer cross-multiplication keeps identical samples at exactly 0.
    if (i * b.size() == j * a.size()) continue;
    worst = std::max(worst, std::abs(static_cast<double>(i) / a.size() -
                                     static_cast<double>(j) / b.size()));
  }
  return worst;
}

double relative_error(double a, double b) {
  if (a == b) return 0;
  return a == 0 ? std::abs(b) : std::abs(a - b) / std::abs(a);
}

double metric_distance(const CensusReport& o, const CensusReport& g, Metric m) {
  switch (m) {
    case Metric::DegreeDistribution: {
      const auto& a = need(o.degree_distribution, m);
      const auto& b = need(g.degree_distribution, m);
      return std::max(cdf_distance(a.in, b.in), cdf_distance(a.out, b.out));
    }
    case Metric::DegreeCorrelation:
      return cdf_distance(need(o.degree_correlation, m), need(g.degree_correlation, m));
    case Metric::AvgNeighborDegree: {
      const auto& a = need(o.avg_neighbor_degree, m);
      const auto& b = need(g.avg_neighbor_degree, m);
      return std::max({profile_distance(a.out_in, b.out_in), profile_distance(a.out_out, b.out_out),
                       profile_distance(a.in_out, b.in_out), profile_distance(a.in_in, b.in_in)});
    }
    case Metric::DyadCensus: {
      const auto& a = need(o.dyad_census, m);
      const auto& b = need(g.dyad_census, m);
      auto err = [](Count x, Count y) {
        return relative_error(static_cast<double>(x), static_cast<double>(y));
      };
      return std::max({err(a.mutual, b.mutual), err(a.asymmetric, b.asymmetric),
                       err(a.null, b.null)});
    }
    case Metric::TriadCensus: {
      Histogram a;
      Histogram b;
      for (std::size_t i = 0; i < 16; ++i) {
        a[i] = need(o.triad_census, m)[i];
        b[i] = need(g.triad_census, m)[i];
      }
      return cdf_distance(a, b);
    }
    case Metric::Dsp: {
      const auto& a = need(o.dsp, m);
      const auto& b = need(g.dsp, m);
      return std::max({cdf_distance(a.two_path, b.two_path), cdf_distance(a.outgoing, b.outgoing),
                       cdf_distance(a.incoming, b.incoming)});
    }
    case Metric::Expansion: {
      const auto& a = need(o.expansion, m);
      const auto& b = need(g.expansion, m);
      return std::max(sample_distance(ratios(a.out), ratios(b.out)),
                      sample_distance(ratios(a.in), ratios(b.in)));
    }
    case Metric::ShortestPaths:
      return cdf_distance(need(o.shortest_paths, m).counts, need(g.shortest_paths, m).counts);
    case Metric::Scc: return cdf_distance(need(o.scc_sizes, m), need(g.scc_sizes, m));
    case Metric::KCore: return cdf_distance(need(o.core_numbers, m), need(g.core_numbers, m));
    case Metric::Betweenness:
      return sample_distance(need(o.betweenness, m).values, need(g.betweenness, m).values);
    case Metric::Eigenvalues: {
      const auto& a = need(o.eigenvalues, m).magnitudes;
      const auto& b = need(g.eigenvalues, m).magnitudes;
      double worst = a.size() == b.size() ? 0.0 : 1.0;
      for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        worst = std::max(worst, relative_error(a[i], b[i]));
      }
      return worst;
    }
  }
  throw InvalidArgument("unknown metric");
}

CompareReport compare_reports(const CensusReport& original, std::span<const CensusReport> generated,
                              std::span<const Metric> metrics) {
  CompareReport r;
  r.instances = generated.size();
  for (Metric m : metrics) {
    MetricComparison c;
    for (const auto& g : generated) c.per_instance.push_back(metric_distance(original, g, m));
    if (!c.per_instance.empty()) {
      double sum = 0;
      for (double x : c.per_instance) sum += x;
      c.mean = sum / c.per_instance.size();
      double sq = 0;
      for (double x : c.per_instance) sq += (x - c.mean) * (x - c.mean);
      c.stddev = std::sqrt(sq / c.per_instance.size());
    }
    r.distances[std::string(metric_name(m))] = std::move(c);
  }
  return r;
}

}  // namespace d2k
