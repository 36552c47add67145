#include "d2k/realizability.hpp"

#include <sstream>

namespace d2k {

namespace {

std::string cell_text(const CellKey& k, PartitionMode mode) {
  std::ostringstream os;
  const char* side = k.side == Side::In ? "in" : "out";
  if (mode == PartitionMode::D2Km) {
    os << "{(" << k.in << "," << k.out << ")," << side << "}";
  } else {
    os << "{" << k.degree() << "," << side << "}";
  }
  return os.str();
}

}  // namespace

const char* condition_name(Condition c) noexcept {
  switch (c) {
    case Condition::Bipartite: return "I";
    case Condition::Capacity: return "II";
    case Condition::Consistency: return "III";
  }
  return "?";
}

RealizabilityReport check(const D2KTargets& t) {
  RealizabilityReport report;

  if (t.dds.size() != t.n) {
    report.structural_errors.push_back("dds has " + std::to_string(t.dds.size()) +
                                       " entries but n = " + std::to_string(t.n));
  }
  for (const auto& [pair, count] : t.jdam) {
    const auto& [k, l] = pair;
    if (!well_formed(t.mode, k) || !well_formed(t.mode, l)) {
      report.structural_errors.push_back("cell label does not match partition mode in entry " +
                                         cell_text(k, t.mode) + " x " + cell_text(l, t.mode));
    }
    if (k < l && t.jdam_at(l, k) != count) {
      report.structural_errors.push_back("jdam is not symmetric at " + cell_text(k, t.mode) +
                                         " x " + cell_text(l, t.mode));
    }
    if (k > l && !t.jdam.contains({l, k})) {
      report.structural_errors.push_back("jdam is not symmetric at " + cell_text(l, t.mode) +
                                         " x " + cell_text(k, t.mode));
    }
  }
  if (!report.structural_errors.empty()) return report;

  const auto sizes = t.cell_sizes();
  const auto f = t.non_chords();
  auto size_of = [&](const CellKey& k) -> Count {
    auto it = sizes.find(k);
    return it == sizes.end() ? 0 : it->second;
  };

  std::map<CellKey, Count> row_sums;
  for (const auto& [pair, count] : t.jdam) {
    const auto& [k, l] = pair;
    if (count == 0) continue;
    row_sums[k] += count;
    if (k > l) continue;  // each unordered pair once below
    if (k.side == l.side) {
      report.violations.push_back({Condition::Bipartite, k, l, count, 0});
      continue;
    }
    auto fit = f.find(pair);
    const Count lhs = count + (fit == f.end() ? 0 : fit->second);
    const Count rhs = size_of(k) * size_of(l);
    if (lhs > rhs) report.violations.push_back({Condition::Capacity, k, l, lhs, rhs});
  }

  for (const auto& [k, size] : sizes) row_sums.try_emplace(k, 0);
  for (const auto& [k, row] : row_sums) {
    const Count deg = k.degree();
    const Count size = size_of(k);
    const bool ok = deg == 0 ? row == 0 : (row % deg == 0 && row / deg == size);
    if (!ok) report.violations.push_back({Condition::Consistency, k, std::nullopt, row, deg * size});
  }

  report.realizable = report.violations.empty();
  return report;
}

std::string describe(const RealizabilityReport& report, PartitionMode mode) {
  std::ostringstream os;
  for (const auto& e : report.structural_errors) os << "malformed: " << e << '\n';
  for (const auto& v : report.violations) {
    os << "condition " << condition_name(v.condition) << ": " << cell_text(v.cell, mode);
    if (v.other) os << " x " << cell_text(*v.other, mode);
    switch (v.condition) {
      case Condition::Bipartite:
        os << " has " << v.lhs << " edges between cells of the same side";
        break;
      case Condition::Capacity:
        os << " needs " << v.lhs << " pairs (edges + non-chords) but only " << v.rhs
           << " exist";
        break;
      case Condition::Consistency:
        os << " row sum " << v.lhs << " != degree * cell size " << v.rhs;
        break;
    }
    os << '\n';
  }
  if (report.realizable) os << "realizable\n";
  return os.str();
}

}  // namespace d2k
