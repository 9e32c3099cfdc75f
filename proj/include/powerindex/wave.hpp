#ifndef POWERINDEX_WAVE_HPP
#define POWERINDEX_WAVE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "powerindex/configuration.hpp"
#include "powerindex/dynamics.hpp"
#include "powerindex/graph.hpp"
#include "powerindex/rational.hpp"

namespace powerindex {

// Wave configurations live on make_hnl graphs. The base configuration W has
// row 1 (ring vertices and their cliques) collaborating and row 2 defecting.
// A wave flips a set of same-parity ring vertices in one row; the flipped
// vertices are interrupters.

enum class WaveFlavor {
  kBase,   // no interrupters
  kCWave,  // interrupters are collaborators
  kDWave,  // interrupters are defectors
};

std::string_view to_string(WaveFlavor f);

struct WaveDescriptor {
  int n = 0;
  /// 1 or 2; 0 when there are no interrupters.
  int row = 0;
  /// Sorted, pairwise differences even.
  std::vector<int> interrupter_columns;
  WaveFlavor flavor = WaveFlavor::kBase;
  /// True when the wave is measured against complement(W).
  bool swapped_base = false;

  friend bool operator==(const WaveDescriptor&, const WaveDescriptor&) = default;
};

/// Descriptor for flipping `columns` of `row` in W, flavor derived from the
/// row. Throws InvalidWaveError on a bad row, column or parity.
WaveDescriptor make_wave_descriptor(int n, int row, std::vector<int> columns);

/// W on make_hnl(n, ell).
Configuration base_wave(int n, int ell = 3);

/// W with the descriptor's interrupters flipped. The descriptor must be
/// against the standard base and internally consistent (flavor matches the
/// row); throws InvalidWaveError otherwise.
Configuration wave_from_interrupters(int n, int ell, const WaveDescriptor& d);

/// Reads the wave structure of `c` off the H labels of `g`. Vertices
/// without an HnlLabel are ignored, so attached subgraphs are allowed.
/// Returns nullopt when `c` is not a wave of W or of complement(W).
/// Throws LabelError if `g` carries no H labels.
std::optional<WaveDescriptor> detect_interrupters(const Graph& g,
                                                  const Configuration& c);

/// detect_interrupters applied to C_0 .. C_steps of the process from c0.
std::vector<std::optional<WaveDescriptor>> wave_trace(
    const Graph& g, const Configuration& c0, const Rational& w,
    std::size_t steps, ThresholdMode mode = ThresholdMode::kStrict);

struct Rule90Divergence {
  std::size_t t = 0;
  /// Interrupter columns of the process; empty optional if C_t left the
  /// wave family.
  std::optional<std::vector<int>> process_columns;
  std::vector<int> ca_columns;
};

struct Rule90Equivalence {
  int n = 0;
  std::size_t steps = 0;
  bool equal = true;
  std::optional<Rule90Divergence> divergence;
  /// Wave descriptors of C_0 .. C_steps (up to the divergence).
  std::vector<std::optional<WaveDescriptor>> process_trace;
};

/// Runs the 1/2-power process on make_hnl(n, ell) from the C-wave whose only
/// interrupter is v_{0,2} next to Rule 90 seeded with cell 0, comparing
/// interrupter columns with live cells at every t in 0..steps.
Rule90Equivalence verify_rule90_equivalence(
    int n, int ell, std::size_t steps,
    ThresholdMode mode = ThresholdMode::kStrict);

}  // namespace powerindex

#endif  // POWERINDEX_WAVE_HPP
