#include "powerindex/dynamics.hpp"

#include <string>
#include <unordered_map>

#include "powerindex/error.hpp"

namespace powerindex {

namespace {

// Power is always 0 or a unit fraction, so it travels as the denominator
// (0 encodes "no power"). Larger power = smaller nonzero denominator.
using PowerDenominators = std::vector<std::size_t>;

bool stronger(std::size_t a, std::size_t b) {
  return a != 0 && (b == 0 || a < b);
}

void validate(const Graph& g, const Configuration& c, const Rational& w) {
  require_win_condition(w);
  c.require_fits(g);
}

std::size_t vertex_power(const Graph& g, const Configuration& c,
                         const Rational& w, VertexId v, ThresholdMode mode) {
  const auto nbrs = g.neighbors(v);
  const std::int64_t closed = static_cast<std::int64_t>(nbrs.size()) + 1;
  std::int64_t collaborators = c.is_collaborator(v) ? 1 : 0;
  for (VertexId u : nbrs) collaborators += c.is_collaborator(u) ? 1 : 0;
  // ratio vs w, cross-multiplied: collaborators/closed ? num/den
  const std::int64_t lhs = collaborators * w.denominator();
  const std::int64_t rhs = w.numerator() * closed;
  if (c.is_collaborator(v)) {
    const bool wins = mode == ThresholdMode::kStrict ? lhs > rhs : lhs >= rhs;
    return wins ? static_cast<std::size_t>(collaborators) : 0;
  }
  return lhs <= rhs ? static_cast<std::size_t>(closed - collaborators) : 0;
}

PowerDenominators power_denominators(const Graph& g, const Configuration& c,
                                     const Rational& w, ThresholdMode mode) {
  PowerDenominators out(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out[v] = vertex_power(g, c, w, v, mode);
  }
  return out;
}

Configuration step_unchecked(const Graph& g, const Configuration& c,
                             const Rational& w, ThresholdMode mode) {
  const PowerDenominators powers = power_denominators(g, c, w, mode);
  Configuration next = c;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::size_t best = powers[v];
    bool best_has_c = c.is_collaborator(v);
    bool best_has_d = !best_has_c;
    for (VertexId u : g.neighbors(v)) {
      const std::size_t p = powers[u];
      if (stronger(p, best)) {
        best = p;
        best_has_c = c.is_collaborator(u);
        best_has_d = !best_has_c;
      } else if (p == best) {
        (c.is_collaborator(u) ? best_has_c : best_has_d) = true;
      }
    }
    if (best_has_c != best_has_d) {
      next.set(v, best_has_c ? Strategy::kCollaborator : Strategy::kDefector);
    }
  }
  return next;
}

Rational as_rational(std::size_t denominator) {
  return denominator == 0
             ? Rational(0)
             : Rational(1, static_cast<std::int64_t>(denominator));
}

}  // namespace

std::string_view to_string(ThresholdMode mode) {
  return mode == ThresholdMode::kStrict ? "strict" : "inclusive";
}

ThresholdMode parse_threshold_mode(std::string_view text) {
  if (text == "strict") return ThresholdMode::kStrict;
  if (text == "inclusive") return ThresholdMode::kInclusive;
  throw Error("unknown semantics '" + std::string(text) +
              "' (expected strict or inclusive)");
}

Rational power(const Graph& g, const Configuration& c, const Rational& w,
               VertexId v, ThresholdMode mode) {
  validate(g, c, w);
  g.check_vertex(v);
  return as_rational(vertex_power(g, c, w, v, mode));
}

PowerVector power_all(const Graph& g, const Configuration& c,
                      const Rational& w, ThresholdMode mode) {
  validate(g, c, w);
  PowerVector out;
  out.reserve(g.vertex_count());
  for (std::size_t d : power_denominators(g, c, w, mode)) {
    out.push_back(as_rational(d));
  }
  return out;
}

Configuration step(const Graph& g, const Configuration& c, const Rational& w,
                   ThresholdMode mode) {
  validate(g, c, w);
  return step_unchecked(g, c, w, mode);
}

std::size_t default_step_budget(const Graph& g, std::size_t cap) {
  if (g.vertex_count() >= 63) return cap;
  const std::size_t states = std::size_t{1} << g.vertex_count();
  return std::min(states, cap);
}

const Configuration& TrajectoryReport::at(std::size_t t) const {
  if (!conclusive) throw InconclusiveError("trajectory did not close a cycle");
  if (t < configs.size()) return configs[t];
  return configs[transient + (t - transient) % period];
}

TrajectoryReport evolve(const Graph& g, const Configuration& c0,
                        const Rational& w, ThresholdMode mode,
                        std::size_t max_steps) {
  validate(g, c0, w);
  if (max_steps == 0) throw InvalidSizeError("step budget must be >= 1");

  TrajectoryReport report;
  report.mode = mode;
  report.w = w;
  report.configs.push_back(c0);
  std::unordered_map<Configuration, std::size_t, ConfigurationHash> seen;
  seen.emplace(c0, 0);
  for (std::size_t t = 1; t <= max_steps; ++t) {
    Configuration next = step_unchecked(g, report.configs.back(), w, mode);
    const auto [it, inserted] = seen.emplace(next, t);
    report.configs.push_back(std::move(next));
    if (!inserted) {
      report.transient = it->second;
      report.period = t - it->second;
      report.conclusive = true;
      return report;
    }
  }
  return report;
}

std::string_view to_string(Dominance d) {
  switch (d) {
    case Dominance::kCollaboratorDominant:
      return "CollaboratorDominant";
    case Dominance::kDefectorDominant:
      return "DefectorDominant";
    case Dominance::kMixedStable:
      return "MixedStable";
    case Dominance::kPeriodic:
      return "Periodic";
  }
  return "?";
}

Dominance classify_dominance(const TrajectoryReport& report) {
  if (!report.conclusive) {
    throw InconclusiveError("step budget exhausted before the orbit closed");
  }
  if (report.period > 1) return Dominance::kPeriodic;
  const Configuration& fixed = report.configs[report.transient];
  if (fixed.all_collaborators()) return Dominance::kCollaboratorDominant;
  if (fixed.all_defectors()) return Dominance::kDefectorDominant;
  return Dominance::kMixedStable;
}

Configuration complement_configuration(const Configuration& c) {
  return c.complement();
}

}  // namespace powerindex
