#include "epigraph/simulator.h"

#include <algorithm>
#include <string>

#include "epigraph/error.h"
#include "epigraph/format.h"
#include "epigraph/rng.h"

namespace epigraph {

EpidemicTrace simulate(const Graph& g, NodeSet initial, const CuringPolicy& policy, double budget,
                       uint64_t seed, const SimOptions& options) {
  if (!(budget >= 0.0)) throw InvalidArgument("budget must be nonnegative");
  if (!g.contains(initial)) throw InvalidArgument("initial infection is not over the graph");
  const bool record = options.record_events || policy.needs_history();

  EpidemicTrace trace;
  trace.seed = seed;
  trace.initial = initial;
  Rng dynamics(derive_seed(seed, 0));
  Rng policy_rng(derive_seed(seed, 1));

  NodeSet infected = initial;
  int current_cut = cut(g, infected);
  double t = 0.0;
  Allocation allocation;
  while (true) {
    if (infected.empty()) {
      trace.tau = t;
      break;
    }
    if (trace.event_count >= options.caps.max_events) {
      trace.censored = true;
      trace.tau = t;
      break;
    }
    const PolicyContext ctx{t, infected, g, budget, std::span<const Event>(trace.events)};
    allocation = policy.decide(ctx, policy_rng);
    validate_allocation(allocation, g, budget);

    double cure_rate = 0.0;
    for (const CureRate& c : allocation) {
      if (infected.contains(c.vertex)) cure_rate += c.rate;
    }
    const double total = current_cut + cure_rate;
    if (!(total > 0.0)) {
      // Nothing can ever happen again.
      trace.censored = true;
      trace.tau = options.caps.max_time;
      break;
    }
    const double dt = dynamics.exponential(total);
    if (t + dt > options.caps.max_time) {
      trace.censored = true;
      trace.tau = options.caps.max_time;
      break;
    }
    t += dt;

    double pick = dynamics.uniform() * total;
    Event event{t, -1, EventKind::kInfect};
    if (pick < current_cut) {
      // Healthy v is infected at rate |N(v) & I|.
      const NodeSet healthy = g.vertices() - infected;
      int last = -1;
      for (int v : healthy) {
        const int pressure = (g.neighbors(v) & infected).size();
        if (pressure == 0) continue;
        last = v;
        if (pick < pressure) break;
        pick -= pressure;
      }
      event.vertex = last;
      current_cut = cut_after_add(g, infected, current_cut, last);
      infected = infected.with(last);
    } else {
      pick -= current_cut;
      int last = -1;
      for (const CureRate& c : allocation) {
        if (!infected.contains(c.vertex) || c.rate <= 0.0) continue;
        last = c.vertex;
        if (pick < c.rate) break;
        pick -= c.rate;
      }
      event.vertex = last;
      event.kind = EventKind::kCure;
      current_cut = cut_after_remove(g, infected, current_cut, last);
      infected = infected.without(last);
    }
    ++trace.event_count;
    if (record) {
      trace.events.push_back(event);
      trace.cure_rates.push_back(cure_rate);
    }
  }
  trace.final_state = infected;
  return trace;
}

std::optional<std::string> validate_trace(const Graph& g, const EpidemicTrace& trace) {
  if (trace.event_count != static_cast<long>(trace.events.size())) {
    return "trace holds " + std::to_string(trace.events.size()) + " of " +
           std::to_string(trace.event_count) + " events";
  }
  if (!g.contains(trace.initial)) return std::string("initial state outside the graph");
  NodeSet state = trace.initial;
  double previous = 0.0;
  for (size_t i = 0; i < trace.events.size(); ++i) {
    const Event& e = trace.events[i];
    const std::string where = "event " + std::to_string(i) + ": ";
    if (!(e.time > previous)) return where + "time does not increase";
    previous = e.time;
    if (e.vertex < 0 || e.vertex >= g.n()) return where + "vertex out of range";
    if (e.kind == EventKind::kInfect) {
      if (state.contains(e.vertex)) return where + "infects an infected vertex";
      if ((g.neighbors(e.vertex) & state).empty()) return where + "infection without infected neighbour";
      state = state.with(e.vertex);
    } else {
      if (!state.contains(e.vertex)) return where + "cures a healthy vertex";
      state = state.without(e.vertex);
    }
  }
  if (state != trace.final_state) return std::string("final state does not match replay");
  if (!trace.censored) {
    if (!state.empty()) return std::string("uncensored trace does not end empty");
    if (trace.tau != previous) return std::string("tau is not the time of the emptying event");
  }
  return std::nullopt;
}

std::string trace_to_csv(const EpidemicTrace& trace) {
  std::string out = "time,kind,vertex\n";
  for (const Event& e : trace.events) {
    out += format_real(e.time);
    out += e.kind == EventKind::kInfect ? ",infect," : ",cure,";
    out += std::to_string(e.vertex);
    out += '\n';
  }
  return out;
}

BandReport band_instrumentation(const Graph& g, const EpidemicTrace& trace, int gamma0,
                                int max_degree, const Rational& slack) {
  if (max_degree < 1) throw InvalidArgument("band needs Delta >= 1");
  BandReport report;
  report.lower = gamma0 / (3 * max_degree);
  report.upper = 2 * gamma0 / (3 * max_degree);
  report.vacuous = report.upper < 1;
  report.cut_floor = Rational(gamma0, 3) - (3 * slack + 4) * max_degree;

  NodeSet state = trace.initial;
  double start = 0.0;
  // Interval i runs from the previous event to events[i] (or to tau).
  for (size_t i = 0; i <= trace.events.size(); ++i) {
    const double end = i < trace.events.size() ? trace.events[i].time : trace.tau;
    const int size = state.size();
    if (!report.tau_star && size <= report.lower) report.tau_star = start;
    if (!report.vacuous && size >= std::max(report.lower, 1) && size <= report.upper) {
      report.entered_band = true;
      report.dwell_time += end - start;
      const int c = cut(g, state);
      report.min_cut_in_band = std::min(report.min_cut_in_band.value_or(c), c);
      if (Rational(c) < report.cut_floor) report.cut_floor_held = false;
    }
    if (size >= report.upper && i < trace.cure_rates.size()) {
      report.top_cure_rate = std::max(report.top_cure_rate, trace.cure_rates[i]);
    }
    if (i == trace.events.size()) break;
    const Event& e = trace.events[i];
    state = e.kind == EventKind::kInfect ? state.with(e.vertex) : state.without(e.vertex);
    start = end;
  }
  return report;
}

}  // namespace epigraph
