#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "powerindex/error.hpp"
#include "powerindex/explorer.hpp"
#include "powerindex/generators.hpp"
#include "powerindex/win_partition.hpp"

using namespace powerindex;

namespace {

const Rational kHalf(1, 2);

SweepOptions workers(unsigned k, bool record = false) {
  SweepOptions o;
  o.workers = k;
  o.record_seeds = record;
  return o;
}

}  // namespace

TEST_CASE("sweep totals add up") {
  const Graph g = make_bowtie();
  const SweepEntry e = enumerate_all(g, kHalf, ThresholdMode::kStrict,
                                     workers(3, true));
  CHECK(e.seeds == 32);
  CHECK(e.stable + e.periodic + e.inconclusive == e.seeds);
  std::uint64_t mass = 0;
  for (const auto& [period, count] : e.period_histogram) {
    CHECK(period > 1);
    mass += count;
  }
  CHECK(mass == e.periodic);
  CHECK(e.periodic >= 1);
  CHECK(e.outcomes.size() == 32);
  for (std::size_t s = 0; s < e.outcomes.size(); ++s) {
    CHECK(e.outcomes[s].seed == s);
  }
}

TEST_CASE("sweep outcomes match the reference orbit") {
  const Graph g = make_cycle(6);
  const oracle::Matrix m(g);
  const SweepEntry e = enumerate_all(g, Rational(2, 3), ThresholdMode::kStrict,
                                     workers(2, true));
  for (const SeedOutcome& o : e.outcomes) {
    const auto expected = oracle::orbit(
        m, Configuration::from_bits(6, o.seed).to_string(), Rational(2, 3),
        false);
    CHECK(o.transient == expected.transient);
    CHECK(o.period == expected.period);
  }
}

TEST_CASE("witnesses replay") {
  const Graph g = make_bowtie();
  const SweepEntry e = enumerate_all(g, kHalf, ThresholdMode::kStrict);
  REQUIRE(e.max_period_witness);
  const auto r = evolve(g, Configuration::from_string(e.max_period_witness->seed),
                        kHalf);
  CHECK(r.period == e.max_period_witness->value);
  REQUIRE(e.max_transient_witness);
  const auto t = evolve(
      g, Configuration::from_string(e.max_transient_witness->seed), kHalf);
  CHECK(t.transient == e.max_transient_witness->value);
  CHECK(e.max_transient == e.max_transient_witness->value);
}

TEST_CASE("stable classes have no periodic seeds") {
  for (const Graph& g : {make_cycle(6), make_prism(3)}) {
    for (const Rational& w : win_partition(g).representatives()) {
      const SweepEntry e = enumerate_all(g, w, ThresholdMode::kStrict);
      CHECK(e.periodic == 0);
      CHECK(e.period_histogram.empty());
    }
  }
}

TEST_CASE("the five-prism has a period-two seed") {
  const Graph g = make_prism(5);
  const SweepEntry e =
      enumerate_all(g, kHalf, ThresholdMode::kStrict, workers(4));
  CHECK(e.periodic >= 1);
  CHECK(e.period_histogram.count(2) == 1);
}

TEST_CASE("worker count does not change the report") {
  const Graph g = make_bowtie();
  const std::vector<Rational> ws = win_partition(g).representatives();
  const SweepReport one =
      sweep(g, "bowtie", ws, ThresholdMode::kStrict, workers(1, true));
  const SweepReport four =
      sweep(g, "bowtie", ws, ThresholdMode::kStrict, workers(4, true));
  const SweepReport many =
      sweep(g, "bowtie", ws, ThresholdMode::kStrict, workers(64, true));
  CHECK(one == four);
  CHECK(one == many);
  CHECK(one.entries.size() == ws.size());
}

TEST_CASE("tiny budgets are flagged inconclusive") {
  SweepOptions o;
  o.step_budget = 1;
  const SweepEntry e =
      enumerate_all(make_bowtie(), kHalf, ThresholdMode::kStrict, o);
  CHECK(e.inconclusive > 0);
  CHECK(e.stable + e.periodic + e.inconclusive == e.seeds);
  CHECK(!e.inconclusive_witnesses.empty());
  CHECK(e.inconclusive_witnesses.size() <= 16);
}

TEST_CASE("sweep size limits") {
  CHECK_THROWS_AS(enumerate_all(make_path(25), kHalf, ThresholdMode::kStrict),
                  InvalidSizeError);
  SweepOptions o;
  o.step_budget = 0;
  CHECK_THROWS_AS(enumerate_all(make_path(3), kHalf, ThresholdMode::kStrict, o),
                  InvalidSizeError);
  CHECK_THROWS_AS(enumerate_all(make_path(3), Rational(1), ThresholdMode::kStrict),
                  InvalidWinConditionError);
}

TEST_CASE("layered prism seed") {
  const Graph g = make_prism(5);
  const Configuration c = layered_seed(g);
  CHECK(c.collaborator_count() == 4);
  const auto r = evolve(g, c, kHalf);
  CHECK(r.transient == 0);
  CHECK(r.period == 2);

  const auto p0 = power_all(g, c, kHalf);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const int layer = std::get<PrismLabel>(g.label(v)).layer;
    const Rational expected = layer == 0   ? Rational(1, 4)
                              : layer == 2 ? Rational(1, 6)
                                           : Rational(1, 5);
    CHECK(p0[v] == expected);
  }
  CHECK_THROWS_AS(layered_seed(make_cycle(4)), LabelError);
}

TEST_CASE("clique chain seeds") {
  const Graph g = make_gjn(3, 2);
  const Configuration c = gjn_seed(g, GjnSeedFlavor::kCollaboratorCore);
  CHECK(c.collaborator_count() == 3);
  CHECK(gjn_seed(g, GjnSeedFlavor::kDefectorCore) == c.complement());
  CHECK_THROWS_AS(gjn_seed(make_cycle(4), GjnSeedFlavor::kCollaboratorCore),
                  LabelError);

  const auto r = evolve(g, c, kHalf);
  CHECK(r.at(2).all_collaborators());
  CHECK_FALSE(r.at(1).all_collaborators());
}

TEST_CASE("seed density") {
  CHECK(seed_density(Configuration(4, Strategy::kCollaborator)) == Rational(1));
  const Graph g = make_gjn(3, 4);
  CHECK(seed_density(gjn_seed(g, GjnSeedFlavor::kCollaboratorCore)) ==
        Rational(1, 31));
  CHECK_THROWS_AS(seed_density(Configuration()), ConfigurationError);
}

TEST_CASE("random configurations") {
  const Graph g = make_path(40);
  CHECK(random_configuration(g, Rational(0), 1).all_defectors());
  CHECK(random_configuration(g, Rational(1), 1).all_collaborators());
  CHECK(random_configuration(g, Rational(1, 3), 42) ==
        random_configuration(g, Rational(1, 3), 42));
  CHECK_THROWS_AS(random_configuration(g, Rational(3, 2), 1), Error);
}
