#include "powerindex/win_partition.hpp"

#include <algorithm>
#include <unordered_set>

#include "powerindex/error.hpp"

namespace powerindex {

std::vector<Rational> vertex_win_ratios(const Graph& g, VertexId v) {
  const auto closed = static_cast<std::int64_t>(g.degree(v)) + 1;
  std::vector<Rational> out;
  for (std::int64_t i = (closed + 1) / 2; i <= closed; ++i) {
    out.emplace_back(i, closed);
  }
  return out;
}

std::vector<Rational> graph_win_ratios(const Graph& g) {
  std::vector<Rational> all;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto ratios = vertex_win_ratios(g, v);
    all.insert(all.end(), ratios.begin(), ratios.end());
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

std::vector<Rational> WinPartition::representatives() const {
  std::vector<Rational> out;
  out.reserve(parts.size());
  for (const auto& part : parts) out.push_back(part.representative());
  return out;
}

std::size_t WinPartition::part_of(const Rational& w) const {
  require_win_condition(w);
  // Parts are sorted and cover [1/2, 1): the answer is the number of
  // breakpoints <= w.
  return static_cast<std::size_t>(
      std::upper_bound(breakpoints.begin(), breakpoints.end(), w) -
      breakpoints.begin());
}

WinPartition win_partition(const Graph& g) {
  if (g.vertex_count() == 0) {
    throw InvalidSizeError("win partition of an empty graph");
  }
  WinPartition p;
  const Rational half(1, 2);
  const Rational one(1);
  for (const Rational& r : graph_win_ratios(g)) {
    if (r > half && r < one) p.breakpoints.push_back(r);
  }
  Rational lo = half;
  for (const Rational& b : p.breakpoints) {
    p.parts.push_back({lo, b});
    lo = b;
  }
  p.parts.push_back({lo, one});
  return p;
}

PartitionEquivalence verify_partition_equivalence(
    const Graph& g, const Configuration& c0, const Rational& w1,
    const Rational& w2, ThresholdMode mode, std::size_t horizon) {
  if (mode != ThresholdMode::kStrict) {
    throw UnsupportedModeError(
        "partition equivalence holds only under strict thresholds");
  }
  require_win_condition(w1);
  require_win_condition(w2);
  c0.require_fits(g);
  if (horizon == 0) throw InvalidSizeError("horizon must be >= 1");

  std::unordered_set<Configuration, ConfigurationHash> seen{c0};
  Configuration a = c0;
  Configuration b = c0;
  for (std::size_t t = 1; t <= horizon; ++t) {
    a = step(g, a, w1, mode);
    b = step(g, b, w2, mode);
    if (!(a == b)) return {false, t};
    if (!seen.insert(a).second) break;
  }
  return {};
}

}  // namespace powerindex
