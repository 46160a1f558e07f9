#include <benchmark/benchmark.h>

#include "epigraph/estimate.h"
#include "epigraph/generators.h"
#include "epigraph/policy.h"
#include "epigraph/simulator.h"

namespace {

using namespace epigraph;

// Events per second of the Gillespie loop on K_n with a budget that keeps
// runs short.
void BM_SimulateComplete(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = generate({.family = GraphFamily::kComplete, .n = n});
  const auto policy = builtin_policy(PolicyKind::kMaxDegreeInfected);
  const SimOptions options{.record_events = false};
  uint64_t seed = 0;
  int64_t events = 0;
  for (auto _ : state) {
    const EpidemicTrace t = simulate(g, g.vertices(), *policy, n, seed++, options);
    events += t.event_count;
  }
  state.SetItemsProcessed(events);
}
BENCHMARK(BM_SimulateComplete)->Arg(4)->Arg(8)->Arg(12);

void BM_SimulateGridDegreeProportional(benchmark::State& state) {
  const Graph g = generate({.family = GraphFamily::kGrid, .n = 16});
  const auto policy = builtin_policy(PolicyKind::kDegreeProportional);
  const SimOptions options{.record_events = false};
  uint64_t seed = 0;
  int64_t events = 0;
  for (auto _ : state) {
    events += simulate(g, g.vertices(), *policy, 6.0, seed++, options).event_count;
  }
  state.SetItemsProcessed(events);
}
BENCHMARK(BM_SimulateGridDegreeProportional);

void BM_EstimateK3(benchmark::State& state) {
  const Graph g = generate({.family = GraphFamily::kComplete, .n = 3});
  const auto policy = builtin_policy(PolicyKind::kMaxDegreeInfected);
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate_extinction(g, g.vertices(), *policy, 1.0, 10'000, 1, {.threads = 1}));
  }
}
BENCHMARK(BM_EstimateK3)->Unit(benchmark::kMillisecond);

}  // namespace
