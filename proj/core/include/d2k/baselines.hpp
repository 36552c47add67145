#pragma once

#include <optional>

#include "d2k/graph.hpp"
#include "d2k/targets.hpp"

namespace d2k {

/// Directed Erdos-Renyi graph with exactly t.m edges, uniform over edge sets.
/// Throws Unrealizable when m > n(n-1).
DirectedGraph gen_d0k(const SizeTargets& t, std::uint64_t seed);

/// Uniform graph with the prescribed dyad census. Throws Unrealizable when
/// the counts do not sum to n(n-1)/2.
DirectedGraph gen_uman(const UmanTargets& t, std::uint64_t seed);

struct D1kOptions {
  /// Randomizing swap attempts after the greedy phase; defaults to 10 * m.
  std::optional<Count> swap_rounds;
  /// Share of attempts that try a directed 3-cycle reversal instead of a double swap.
  double c6_probability = 0.1;
};

/// Graph with the prescribed directed degree sequence: Kleitman-Wang greedy
/// construction followed by degree-preserving swap randomization. Throws
/// Unrealizable when the sequence has no simple realization.
DirectedGraph gen_d1k(const DdsTargets& t, std::uint64_t seed, const D1kOptions& options = {});

/// Greedy phase only; also serves as the graphicality test for a dds.
DirectedGraph kleitman_wang(const DdsTargets& t, std::uint64_t seed);

}  // namespace d2k
