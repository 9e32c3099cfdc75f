#include "powerindex/explorer.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <random>
#include <thread>

#include "powerindex/error.hpp"

namespace powerindex {

namespace {

constexpr std::size_t kMaxInconclusiveWitnesses = 16;

struct SeedMax {
  std::uint64_t seed = 0;
  std::size_t value = 0;
  bool present = false;

  // Ranges are merged in ascending seed order, so keeping the first of equal
  // values keeps the lowest seed.
  void offer(std::uint64_t s, std::size_t v) {
    if (!present || v > value) {
      seed = s;
      value = v;
      present = true;
    }
  }
  void merge(const SeedMax& other) {
    if (other.present) offer(other.seed, other.value);
  }
};

struct Partial {
  std::uint64_t seeds = 0;
  std::uint64_t stable = 0;
  std::uint64_t periodic = 0;
  std::map<std::size_t, std::uint64_t> histogram;
  std::vector<std::uint64_t> inconclusive;
  SeedMax max_period;
  SeedMax max_transient;
  std::vector<SeedOutcome> outcomes;
};

Partial run_range(const Graph& g, const Rational& w, ThresholdMode mode,
                  const SweepOptions& options, std::uint64_t begin,
                  std::uint64_t end) {
  Partial p;
  const std::size_t n = g.vertex_count();
  for (std::uint64_t s = begin; s < end; ++s) {
    const auto report =
        evolve(g, Configuration::from_bits(n, s), w, mode, options.step_budget);
    ++p.seeds;
    if (!report.conclusive) {
      p.inconclusive.push_back(s);
    } else {
      if (report.period == 1) {
        ++p.stable;
      } else {
        ++p.periodic;
        ++p.histogram[report.period];
      }
      p.max_period.offer(s, report.period);
      p.max_transient.offer(s, report.transient);
    }
    if (options.record_seeds) {
      p.outcomes.push_back(
          {s, report.transient, report.period, report.conclusive});
    }
  }
  return p;
}

}  // namespace

SweepEntry enumerate_all(const Graph& g, const Rational& w, ThresholdMode mode,
                         const SweepOptions& options) {
  require_win_condition(w);
  const std::size_t n = g.vertex_count();
  if (n > kMaxSweepVertices) {
    throw InvalidSizeError("exhaustive sweep limited to " +
                           std::to_string(kMaxSweepVertices) + " vertices");
  }
  if (options.step_budget == 0) {
    throw InvalidSizeError("step budget must be >= 1");
  }
  const std::uint64_t total = std::uint64_t{1} << n;
  const std::uint64_t workers =
      std::clamp<std::uint64_t>(options.workers, 1, total);

  std::vector<Partial> partials(workers);
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> threads;
    for (std::uint64_t k = 0; k < workers; ++k) {
      const std::uint64_t begin = total * k / workers;
      const std::uint64_t end = total * (k + 1) / workers;
      threads.emplace_back([&, k, begin, end] {
        try {
          partials[k] = run_range(g, w, mode, options, begin, end);
        } catch (...) {
          errors[k] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  Partial merged;
  for (auto& p : partials) {
    merged.seeds += p.seeds;
    merged.stable += p.stable;
    merged.periodic += p.periodic;
    for (const auto& [period, count] : p.histogram) {
      merged.histogram[period] += count;
    }
    merged.inconclusive.insert(merged.inconclusive.end(),
                               p.inconclusive.begin(), p.inconclusive.end());
    merged.max_period.merge(p.max_period);
    merged.max_transient.merge(p.max_transient);
    merged.outcomes.insert(merged.outcomes.end(),
                           std::make_move_iterator(p.outcomes.begin()),
                           std::make_move_iterator(p.outcomes.end()));
  }

  const auto seed_string = [n](std::uint64_t s) {
    return Configuration::from_bits(n, s).to_string();
  };
  SweepEntry entry;
  entry.w = w;
  entry.seeds = merged.seeds;
  entry.stable = merged.stable;
  entry.periodic = merged.periodic;
  entry.inconclusive = merged.inconclusive.size();
  entry.period_histogram = std::move(merged.histogram);
  if (merged.max_period.present) {
    entry.max_period_witness =
        Witness{seed_string(merged.max_period.seed), merged.max_period.value};
  }
  if (merged.max_transient.present) {
    entry.max_transient = merged.max_transient.value;
    entry.max_transient_witness = Witness{
        seed_string(merged.max_transient.seed), merged.max_transient.value};
  }
  for (std::size_t i = 0;
       i < merged.inconclusive.size() && i < kMaxInconclusiveWitnesses; ++i) {
    entry.inconclusive_witnesses.push_back(
        seed_string(merged.inconclusive[i]));
  }
  entry.outcomes = std::move(merged.outcomes);
  return entry;
}

SweepReport sweep(const Graph& g, std::string graph_id,
                  std::span<const Rational> ws, ThresholdMode mode,
                  const SweepOptions& options) {
  SweepReport report{std::move(graph_id), mode, {}};
  for (const Rational& w : ws) {
    report.entries.push_back(enumerate_all(g, w, mode, options));
  }
  return report;
}

Configuration layered_seed(const Graph& prism) {
  Configuration c(prism.vertex_count());
  for (VertexId v = 0; v < prism.vertex_count(); ++v) {
    const auto* label = std::get_if<PrismLabel>(&prism.label(v));
    if (label == nullptr) {
      throw LabelError("vertex " + std::to_string(v) + " has no prism layer");
    }
    if (label->layer == 0) c.set(v, Strategy::kCollaborator);
  }
  return c;
}

Configuration gjn_seed(const Graph& g, GjnSeedFlavor flavor) {
  const Strategy core = flavor == GjnSeedFlavor::kCollaboratorCore
                            ? Strategy::kCollaborator
                            : Strategy::kDefector;
  Configuration c(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto* label = std::get_if<CliqueLevelLabel>(&g.label(v));
    if (label == nullptr) {
      throw LabelError("vertex " + std::to_string(v) + " has no clique level");
    }
    c.set(v, label->level == 0 ? core : opposite(core));
  }
  return c;
}

Rational seed_density(const Configuration& c) {
  if (c.size() == 0) throw ConfigurationError("density of an empty configuration");
  return {static_cast<std::int64_t>(c.collaborator_count()),
          static_cast<std::int64_t>(c.size())};
}

Configuration random_configuration(const Graph& g, const Rational& density,
                                   std::uint64_t rng_seed) {
  if (density < Rational(0) || density > Rational(1)) {
    throw Error("density " + to_string(density) + " outside [0, 1]");
  }
  const auto den = static_cast<std::uint64_t>(density.denominator());
  const auto num = static_cast<std::uint64_t>(density.numerator());
  // Largest multiple of den representable; rejection keeps draws unbiased.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % den;
  std::mt19937_64 rng(rng_seed);
  Configuration c(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::uint64_t x = rng();
    while (x >= limit) x = rng();
    if (x % den < num) c.set(v, Strategy::kCollaborator);
  }
  return c;
}

}  // namespace powerindex
