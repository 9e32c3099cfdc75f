#ifndef POWERINDEX_WIN_PARTITION_HPP
#define POWERINDEX_WIN_PARTITION_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "powerindex/configuration.hpp"
#include "powerindex/dynamics.hpp"
#include "powerindex/graph.hpp"
#include "powerindex/rational.hpp"

namespace powerindex {

/// { i/|N[v]| : |N[v]|/2 <= i <= |N[v]| }, reduced and sorted ascending.
std::vector<Rational> vertex_win_ratios(const Graph& g, VertexId v);

/// Union of vertex_win_ratios over all vertices, sorted ascending.
std::vector<Rational> graph_win_ratios(const Graph& g);

/// Half-open interval [lo, hi) of win conditions.
struct WinPart {
  Rational lo;
  Rational hi;
  const Rational& representative() const { return lo; }
  bool contains(const Rational& w) const { return lo <= w && w < hi; }
  friend bool operator==(const WinPart&, const WinPart&) = default;
};

/// Division of [1/2, 1) into parts on which the strict-threshold process
/// does not depend on w. Breakpoints are the win ratios strictly between 1/2
/// and 1, so every part is nonempty.
struct WinPartition {
  std::vector<Rational> breakpoints;
  std::vector<WinPart> parts;

  std::vector<Rational> representatives() const;
  /// Index of the part containing w. Throws InvalidWinConditionError if w is
  /// outside [1/2, 1).
  std::size_t part_of(const Rational& w) const;
};

WinPartition win_partition(const Graph& g);

struct PartitionEquivalence {
  bool equal = true;
  /// First t with C_t != C'_t; empty when equal.
  std::optional<std::size_t> first_divergence;
};

/// Runs the w1 and w2 processes from c0 in lockstep for up to `horizon`
/// steps. Stops early once the shared configuration repeats, since both
/// orbits then coincide forever. Only strict mode is supported: inclusive
/// scoring is not invariant inside a part, so it throws UnsupportedModeError.
PartitionEquivalence verify_partition_equivalence(
    const Graph& g, const Configuration& c0, const Rational& w1,
    const Rational& w2, ThresholdMode mode, std::size_t horizon);

}  // namespace powerindex

#endif  // POWERINDEX_WIN_PARTITION_HPP
