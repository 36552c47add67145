#pragma once

#include <optional>
#include <string>
#include <vector>

#include "d2k/targets.hpp"

namespace d2k {

enum class Condition : std::uint8_t {
  Bipartite = 1,  ///< I:   no entry joins two cells of the same side
  Capacity = 2,   ///< II:  jdam(k,l) + f(k,l) <= |V_k| * |V_l| when jdam(k,l) > 0
  Consistency = 3 ///< III: sum_l jdam(k,l) / degree(k) is an integer equal to |V_k|
};

/// Roman numeral used in reports ("I", "II", "III").
const char* condition_name(Condition c) noexcept;

struct Violation {
  Condition condition;
  CellKey cell;
  /// Second cell of the offending pair; empty for per-cell condition III.
  std::optional<CellKey> other;
  /// Condition I: the entry. II: jdam + f. III: the row sum.
  Count lhs = 0;
  /// Condition I: 0. II: |V_k| * |V_l|. III: degree(k) * |V_k| from the dds.
  Count rhs = 0;
};

struct RealizabilityReport {
  bool realizable = false;
  /// Malformed input (asymmetric jdam, dds length mismatch, mislabelled cells).
  /// These are not graphicality questions and are listed separately.
  std::vector<std::string> structural_errors;
  /// Every condition violation, not only the first.
  std::vector<Violation> violations;
};

/// Decides whether a simple digraph realizes `t`.
RealizabilityReport check(const D2KTargets& t);

/// One line per structural error and violation.
std::string describe(const RealizabilityReport& report, PartitionMode mode);

}  // namespace d2k
