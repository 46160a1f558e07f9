#include <gtest/gtest.h>

#include <memory>

#include "epigraph/error.h"
#include "epigraph/estimate.h"
#include "epigraph/policy.h"
#include "epigraph/resilience.h"
#include "epigraph/rng.h"
#include "epigraph/simulator.h"
#include "support/graphs.h"

namespace epigraph {
namespace {

using testing::make;

Allocation decide(PolicyKind kind, const Graph& g, NodeSet infected, double budget,
                  std::shared_ptr<const ResilienceTable> table = nullptr) {
  Rng rng(1);
  return builtin_policy(kind, table)->decide({.time = 0, .infected = infected, .graph = g, .budget = budget},
                                             rng);
}

TEST(RngTest, DeterministicAndSplittable) {
  Rng a(5), b(5);
  for (int i = 0; i < 100; ++i) ASSERT_EQ(a.next(), b.next());
  EXPECT_NE(derive_seed(5, 0), derive_seed(5, 1));
  EXPECT_NE(derive_seed(5, 0), derive_seed(6, 0));
  Rng c(9);
  for (int i = 0; i < 10000; ++i) {
    const double u = c.uniform();
    ASSERT_GT(u, 0.0);
    ASSERT_LT(u, 1.0);
    ASSERT_LT(c.below(7), 7u);
  }
}

TEST(PolicyTest, BuiltinExamples) {
  const Graph p3 = make("path:3");
  const auto table = std::make_shared<ResilienceTable>(p3);
  const Allocation greedy = decide(PolicyKind::kResilienceGreedy, p3, NodeSet::Of({0, 1}), 1.0, table);
  ASSERT_EQ(greedy.size(), 1u);
  EXPECT_EQ(greedy[0].vertex, 0);
  EXPECT_EQ(greedy[0].rate, 1.0);

  EXPECT_TRUE(decide(PolicyKind::kNone, p3, NodeSet::Of({0, 1}), 1.0).empty());

  const Graph star = make("star:5");
  const Allocation split = decide(PolicyKind::kDegreeProportional, star, NodeSet::Of({0, 3}), 2.0);
  ASSERT_EQ(split.size(), 2u);
  EXPECT_EQ(split[0].vertex, 0);
  EXPECT_DOUBLE_EQ(split[0].rate, 2.0 * 4 / 5);
  EXPECT_EQ(split[1].vertex, 3);
  EXPECT_DOUBLE_EQ(split[1].rate, 2.0 / 5);

  const Allocation maxdeg = decide(PolicyKind::kMaxDegreeInfected, star, NodeSet::Of({2, 3}), 1.0);
  ASSERT_EQ(maxdeg.size(), 1u);
  EXPECT_EQ(maxdeg[0].vertex, 2);  // tie between leaves goes to the lowest id

  EXPECT_THROW(builtin_policy(PolicyKind::kResilienceGreedy), InvalidArgument);
  EXPECT_THROW(parse_policy_kind("cure_everything"), InvalidArgument);
  EXPECT_EQ(parse_policy_kind("max_cut_drop"), PolicyKind::kMaxCutDrop);
}

TEST(PolicyTest, EveryBuiltinStaysInBudgetOnInfected) {
  const Graph g = make("grid:3x3");
  const auto table = std::make_shared<ResilienceTable>(g);
  for (PolicyKind kind : {PolicyKind::kRandomInfected, PolicyKind::kMaxDegreeInfected,
                          PolicyKind::kDegreeProportional, PolicyKind::kMaxCutDrop,
                          PolicyKind::kResilienceGreedy, PolicyKind::kNone}) {
    for (uint64_t m = 1; m < (uint64_t{1} << g.n()); m += 7) {
      const NodeSet infected = NodeSet::FromMask(m);
      const Allocation a = decide(kind, g, infected, 1.5, table);
      EXPECT_NO_THROW(validate_allocation(a, g, 1.5));
      for (const CureRate& c : a) EXPECT_TRUE(infected.contains(c.vertex)) << to_string(kind);
    }
  }
}

TEST(PolicyTest, ValidateRejectsFaults) {
  const Graph g = make("path:3");
  EXPECT_THROW(validate_allocation({{0, 0.7}, {1, 0.7}}, g, 1.0), PolicyFault);
  EXPECT_THROW(validate_allocation({{0, -0.1}}, g, 1.0), PolicyFault);
  EXPECT_THROW(validate_allocation({{3, 0.1}}, g, 1.0), PolicyFault);
  EXPECT_NO_THROW(validate_allocation({{0, 0.5}, {1, 0.5}}, g, 1.0));
}

class OverspendingPolicy final : public CuringPolicy {
 public:
  std::string name() const override { return "overspend"; }
  Allocation decide(const PolicyContext& ctx, Rng&) const override {
    return {{ctx.infected.lowest(), 2 * ctx.budget}};
  }
};

TEST(SimulatorTest, EmptyStartHasNoEvents) {
  const EpidemicTrace t = simulate(make("complete:3"), NodeSet(), *builtin_policy(PolicyKind::kMaxDegreeInfected),
                                   1.0, 1);
  EXPECT_EQ(t.tau, 0.0);
  EXPECT_TRUE(t.events.empty());
  EXPECT_FALSE(t.censored);
}

TEST(SimulatorTest, NonePolicyIsCensoredAndMonotone) {
  const Graph g = make("cycle:5");
  const EpidemicTrace t = simulate(g, NodeSet::Singleton(0), *builtin_policy(PolicyKind::kNone), 1.0, 3,
                                   {.caps = {.max_time = 50.0, .max_events = 1000}});
  EXPECT_TRUE(t.censored);
  EXPECT_EQ(t.tau, 50.0);
  EXPECT_EQ(t.final_state, g.vertices());
  for (const Event& e : t.events) EXPECT_EQ(e.kind, EventKind::kInfect);
  EXPECT_FALSE(validate_trace(g, t).has_value());
}

TEST(SimulatorTest, EventCapCensors) {
  const EpidemicTrace t = simulate(make("complete:8"), make("complete:8").vertices(),
                                   *builtin_policy(PolicyKind::kMaxDegreeInfected), 1.0, 3,
                                   {.caps = {.max_time = 1e9, .max_events = 100}});
  EXPECT_TRUE(t.censored);
  EXPECT_EQ(t.event_count, 100);
}

TEST(SimulatorTest, PolicyFaultPropagates) {
  const Graph g = make("complete:3");
  EXPECT_THROW(simulate(g, g.vertices(), OverspendingPolicy(), 1.0, 1), PolicyFault);
}

TEST(SimulatorTest, TracesAreLegalAndDeterministic) {
  const Graph g = make("grid:2x3");
  const auto table = std::make_shared<ResilienceTable>(g);
  for (PolicyKind kind : {PolicyKind::kRandomInfected, PolicyKind::kDegreeProportional,
                          PolicyKind::kMaxCutDrop, PolicyKind::kResilienceGreedy}) {
    const auto policy = builtin_policy(kind, table);
    for (uint64_t seed = 0; seed < 20; ++seed) {
      const EpidemicTrace a = simulate(g, g.vertices(), *policy, 2.0, seed);
      const EpidemicTrace b = simulate(g, g.vertices(), *policy, 2.0, seed);
      ASSERT_FALSE(validate_trace(g, a).has_value()) << *validate_trace(g, a);
      ASSERT_EQ(trace_to_csv(a), trace_to_csv(b));
      ASSERT_FALSE(a.censored);
      ASSERT_TRUE(a.final_state.empty());
      ASSERT_EQ(a.tau, a.events.back().time);
    }
  }
}

TEST(SimulatorTest, ValidatorCatchesTampering) {
  const Graph g = make("path:4");
  EpidemicTrace t = simulate(g, g.vertices(), *builtin_policy(PolicyKind::kMaxDegreeInfected), 1.0, 2);
  ASSERT_GE(t.events.size(), 2u);
  EpidemicTrace swapped = t;
  std::swap(swapped.events[0].time, swapped.events[1].time);
  EXPECT_TRUE(validate_trace(g, swapped).has_value());
  EpidemicTrace bogus = t;
  bogus.events[0].kind = EventKind::kInfect;  // every vertex starts infected
  EXPECT_TRUE(validate_trace(g, bogus).has_value());
}

TEST(SimulatorTest, TraceCsv) {
  EpidemicTrace t;
  t.events = {{.time = 0.5, .vertex = 1, .kind = EventKind::kCure},
              {.time = 1.25, .vertex = 1, .kind = EventKind::kInfect}};
  EXPECT_EQ(trace_to_csv(t), "time,kind,vertex\n0.5,cure,1\n1.25,infect,1\n");
}

TEST(BandTest, Examples) {
  const Graph k3 = make("complete:3");
  const auto policy = builtin_policy(PolicyKind::kMaxDegreeInfected);
  const EpidemicTrace empty = simulate(k3, NodeSet(), *policy, 1.0, 1);
  const BandReport none = band_instrumentation(k3, empty, 2, 2, Rational(3));
  EXPECT_EQ(none.tau_star, 0.0);
  EXPECT_FALSE(none.entered_band);
  EXPECT_TRUE(none.vacuous);  // floor(2*2/6) = 0

  // K_12 with a synthetic gamma0 = 132 and Delta = 11 puts the band at [4, 8].
  const Graph k12 = make("complete:12");
  const EpidemicTrace run = simulate(k12, NodeSet::Of({0, 1, 2, 3, 4, 5}), *policy, 2.0, 11,
                                     {.caps = {.max_time = 1e6, .max_events = 20000}});
  const BandReport band = band_instrumentation(k12, run, 132, 11, Rational(2));
  EXPECT_EQ(band.lower, 4);
  EXPECT_EQ(band.upper, 8);
  EXPECT_FALSE(band.vacuous);
  ASSERT_TRUE(band.entered_band);
  ASSERT_TRUE(band.min_cut_in_band.has_value());
  EXPECT_EQ(*band.min_cut_in_band, 32);
  EXPECT_TRUE(band.cut_floor_held);
  EXPECT_GT(band.dwell_time, 0.0);
}

TEST(EstimateTest, ThreadCountDoesNotChangeResults) {
  const Graph g = make("complete:3");
  const auto policy = builtin_policy(PolicyKind::kRandomInfected);
  const SimEstimate one = estimate_extinction(g, g.vertices(), *policy, 1.0, 400, 17, {.threads = 1});
  const SimEstimate four = estimate_extinction(g, g.vertices(), *policy, 1.0, 400, 17, {.threads = 4});
  EXPECT_EQ(one.mean_tau, four.mean_tau);
  EXPECT_EQ(one.se, four.se);
}

TEST(EstimateTest, EdgeCases) {
  const Graph g = make("complete:2");
  const auto policy = builtin_policy(PolicyKind::kMaxDegreeInfected);
  const SimEstimate single = estimate_extinction(g, g.vertices(), *policy, 1.0, 1, 3);
  EXPECT_TRUE(single.mean_tau.has_value());
  EXPECT_FALSE(single.se.has_value());
  EXPECT_THROW(estimate_extinction(g, g.vertices(), *policy, 1.0, 0, 3), InvalidArgument);

  const SimEstimate stuck = estimate_extinction(g, g.vertices(), *builtin_policy(PolicyKind::kNone), 1.0, 5,
                                                3, {.caps = {.max_time = 10.0}});
  EXPECT_FALSE(stuck.usable());
  EXPECT_EQ(stuck.censored, 5);
  EXPECT_EQ(estimate_csv_row("complete:2", "none", 1.0, stuck), "complete:2,none,1,5,NA,NA,5\n");
  EXPECT_EQ(estimate_csv_header(), "graph,policy,r,reps,mean_tau,se,censored\n");
}

TEST(EstimateTest, SmallCompleteGraphsMatchExact) {
  const auto policy = builtin_policy(PolicyKind::kMaxDegreeInfected);
  for (int n = 2; n <= 4; ++n) {
    for (double r : {1.0, 2.0}) {
      const Graph g = make("complete:" + std::to_string(n));
      const SimEstimate est = estimate_extinction(g, g.vertices(), *policy, r, 20000, 100 + n);
      const double exact = exact_extinction_complete(n, r);
      EXPECT_NEAR(*est.mean_tau, exact, 4 * *est.se) << "n=" << n << " r=" << r;
    }
  }
}

}  // namespace
}  // namespace epigraph
