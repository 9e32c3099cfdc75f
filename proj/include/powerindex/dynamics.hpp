#ifndef POWERINDEX_DYNAMICS_HPP
#define POWERINDEX_DYNAMICS_HPP

#include <cstddef>
#include <string_view>
#include <vector>

#include "powerindex/configuration.hpp"
#include "powerindex/graph.hpp"
#include "powerindex/rational.hpp"

namespace powerindex {

/// How a neighbourhood ratio exactly equal to w is scored.
///
/// kStrict: a collaborator has power iff |N_C[v]|/|N[v]| > w, a defector iff
///   the ratio is <= w. The two tests partition every ratio.
/// kInclusive: the collaborator test becomes >= w; the defector test stays
///   <= w. At ratio == w both sides of a split neighbourhood can hold power,
///   though any one vertex only ever passes its own side's test.
enum class ThresholdMode { kStrict, kInclusive };

std::string_view to_string(ThresholdMode mode);
/// Accepts "strict" or "inclusive"; throws Error otherwise.
ThresholdMode parse_threshold_mode(std::string_view text);

using PowerVector = std::vector<Rational>;

/// Power of v: 1/|N_S[v]| where S is v's strategy, if v's side passes its
/// threshold test against w, else 0.
Rational power(const Graph& g, const Configuration& c, const Rational& w,
               VertexId v, ThresholdMode mode = ThresholdMode::kStrict);

PowerVector power_all(const Graph& g, const Configuration& c,
                      const Rational& w,
                      ThresholdMode mode = ThresholdMode::kStrict);

/// One synchronous round. Each vertex looks at the maximum power in its
/// closed neighbourhood (itself included); if every vertex attaining it holds
/// one strategy the vertex adopts that strategy, otherwise it keeps its own.
/// A neighbourhood where all powers are 0 is a tie among all of N[v].
Configuration step(const Graph& g, const Configuration& c, const Rational& w,
                   ThresholdMode mode = ThresholdMode::kStrict);

inline constexpr std::size_t kDefaultStepBudget = 1'000'000;

/// min(2^|V|, cap): enough steps to guarantee a repeat on small graphs.
std::size_t default_step_budget(const Graph& g,
                                std::size_t cap = kDefaultStepBudget);

struct TrajectoryReport {
  ThresholdMode mode = ThresholdMode::kStrict;
  Rational w{1, 2};
  /// C_0 .. C_{transient + period}; the last entry repeats
  /// configs[transient]. On budget exhaustion: every configuration visited.
  std::vector<Configuration> configs;
  std::size_t transient = 0;
  /// Minimal period; 1 means the orbit reached a fixed point. 0 when
  /// `conclusive` is false.
  std::size_t period = 0;
  bool conclusive = false;

  bool stable() const { return conclusive && period == 1; }
  /// Configuration C_t for any t, extended periodically past the stored run.
  /// Requires a conclusive report.
  const Configuration& at(std::size_t t) const;
};

/// Iterates step() until a configuration repeats or `max_steps` rounds have
/// run. Exhausting the budget yields conclusive == false.
TrajectoryReport evolve(const Graph& g, const Configuration& c0,
                        const Rational& w,
                        ThresholdMode mode = ThresholdMode::kStrict,
                        std::size_t max_steps = kDefaultStepBudget);

enum class Dominance {
  kCollaboratorDominant,
  kDefectorDominant,
  kMixedStable,
  kPeriodic,
};

std::string_view to_string(Dominance d);

/// Throws InconclusiveError for a report that ran out of budget.
Dominance classify_dominance(const TrajectoryReport& report);

Configuration complement_configuration(const Configuration& c);

}  // namespace powerindex

#endif  // POWERINDEX_DYNAMICS_HPP
