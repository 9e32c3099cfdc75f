#ifndef POWERINDEX_EXPLORER_HPP
#define POWERINDEX_EXPLORER_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "powerindex/configuration.hpp"
#include "powerindex/dynamics.hpp"
#include "powerindex/graph.hpp"
#include "powerindex/rational.hpp"

namespace powerindex {

/// Exhaustive sweeps refuse graphs larger than this.
inline constexpr std::size_t kMaxSweepVertices = 24;

struct SweepOptions {
  /// Per-seed step budget handed to evolve().
  std::size_t step_budget = kDefaultStepBudget;
  /// Seeds are split into this many contiguous ranges, one thread each.
  unsigned workers = 1;
  /// Keep one SeedOutcome per seed (for CSV export).
  bool record_seeds = false;
};

/// Seed s assigns collaborator to vertex v iff bit v of s is set.
struct SeedOutcome {
  std::uint64_t seed = 0;
  std::size_t transient = 0;
  std::size_t period = 0;  // 0 when inconclusive
  bool conclusive = true;
  friend bool operator==(const SeedOutcome&, const SeedOutcome&) = default;
};

/// A seed bitstring ("CDDC...") together with the value it witnesses.
struct Witness {
  std::string seed;
  std::size_t value = 0;
  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Aggregate over every seed at one win condition.
/// Invariant: stable + periodic + inconclusive == seeds, and the histogram
/// (periodic seeds only, keyed by period) has mass == periodic.
struct SweepEntry {
  Rational w{1, 2};
  std::uint64_t seeds = 0;
  std::uint64_t stable = 0;
  std::uint64_t periodic = 0;
  std::uint64_t inconclusive = 0;
  std::map<std::size_t, std::uint64_t> period_histogram;
  std::size_t max_transient = 0;
  /// Lowest-numbered seed attaining the maximum; empty if no seed qualifies.
  std::optional<Witness> max_period_witness;
  std::optional<Witness> max_transient_witness;
  std::vector<std::string> inconclusive_witnesses;
  std::vector<SeedOutcome> outcomes;

  friend bool operator==(const SweepEntry&, const SweepEntry&) = default;
};

struct SweepReport {
  std::string graph_id;
  ThresholdMode mode = ThresholdMode::kStrict;
  std::vector<SweepEntry> entries;
  friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

/// Evolves all 2^|V| seeds at w. Throws InvalidSizeError above
/// kMaxSweepVertices. Results do not depend on options.workers.
SweepEntry enumerate_all(const Graph& g, const Rational& w, ThresholdMode mode,
                         const SweepOptions& options = {});

/// enumerate_all for each w in order.
SweepReport sweep(const Graph& g, std::string graph_id,
                  std::span<const Rational> ws, ThresholdMode mode,
                  const SweepOptions& options = {});

/// Layer 0 of a make_prism graph collaborates, the other layers defect.
/// Throws LabelError if the graph lacks prism labels.
Configuration layered_seed(const Graph& prism);

enum class GjnSeedFlavor {
  kCollaboratorCore,  // smallest clique C, rest D
  kDefectorCore,      // smallest clique D, rest C
};

/// Seed for a make_gjn graph keyed off clique level 0.
/// Throws LabelError if the graph lacks clique-level labels.
Configuration gjn_seed(const Graph& g, GjnSeedFlavor flavor);

/// Collaborators / vertices. Throws ConfigurationError on an empty config.
Rational seed_density(const Configuration& c);

/// Each vertex independently collaborates with probability `density`,
/// drawn from a 64-bit Mersenne Twister seeded with rng_seed.
/// Throws Error unless 0 <= density <= 1.
Configuration random_configuration(const Graph& g, const Rational& density,
                                   std::uint64_t rng_seed);

}  // namespace powerindex

#endif  // POWERINDEX_EXPLORER_HPP
