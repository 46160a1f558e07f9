#ifndef EPIGRAPH_SIMULATOR_H_
#define EPIGRAPH_SIMULATOR_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "epigraph/graph.h"
#include "epigraph/node_set.h"
#include "epigraph/policy.h"
#include "epigraph/rational.h"

namespace epigraph {

struct SimCaps {
  double max_time = 1e6;
  long max_events = 100'000'000;
};

struct SimOptions {
  SimCaps caps;
  bool record_events = true;
};

// One run of the controlled SIS process. Infection rate is 1 per infected
// neighbour.
struct EpidemicTrace {
  uint64_t seed = 0;
  NodeSet initial;
  std::vector<Event> events;
  // Total cure rate on infected vertices in force just before events[i].
  std::vector<double> cure_rates;
  long event_count = 0;
  bool censored = false;
  // Extinction time, or the censoring time when censored.
  double tau = 0.0;
  NodeSet final_state;
};

// Gillespie simulation. After every event the policy is asked again;
// rates are constant in between. Hitting max_time, max_events, or a state
// with zero total rate censors the run. Throws PolicyFault on a bad
// allocation.
EpidemicTrace simulate(const Graph& g, NodeSet initial, const CuringPolicy& policy,
                       double budget, uint64_t seed, const SimOptions& options = {});

// Replays a recorded trace and returns a description of the first illegal
// step, or nullopt when every event is legal.
std::optional<std::string> validate_trace(const Graph& g, const EpidemicTrace& trace);

// "time,kind,vertex" with one row per event.
std::string trace_to_csv(const EpidemicTrace& trace);

// Replay of a trace against the drift band used in the extinction-time
// lower bound: lower = floor(gamma0 / 3Delta), upper = floor(2 gamma0 / 3Delta).
struct BandReport {
  int lower = 0;
  int upper = 0;
  // upper < 1: the band holds no nonempty state, nothing to check.
  bool vacuous = false;
  // First time |I_t| <= lower; empty if the run ended (censored) first.
  std::optional<double> tau_star;
  bool entered_band = false;
  double dwell_time = 0.0;
  std::optional<int> min_cut_in_band;
  // gamma0 / 3 - (3E + 4) Delta.
  Rational cut_floor;
  // Every visited band state had cut >= cut_floor.
  bool cut_floor_held = true;
  // Largest cure rate seen while |I_t| >= upper (the reflecting top).
  double top_cure_rate = 0.0;
};

BandReport band_instrumentation(const Graph& g, const EpidemicTrace& trace, int gamma0,
                                int max_degree, const Rational& slack);

}  // namespace epigraph

#endif  // EPIGRAPH_SIMULATOR_H_
