#include "epigraph/estimate.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <thread>
#include <vector>

#include "epigraph/error.h"
#include "epigraph/format.h"
#include "epigraph/rng.h"

namespace epigraph {

SimEstimate estimate_extinction(const Graph& g, NodeSet initial, const CuringPolicy& policy,
                                double budget, long replications, uint64_t seed,
                                const EstimateOptions& options) {
  if (replications < 1) throw InvalidArgument("need at least one replication");
  const auto started = std::chrono::steady_clock::now();

  std::vector<double> tau(replications, 0.0);
  std::vector<uint8_t> censored(replications, 0);
  std::vector<std::exception_ptr> failures(replications);
  SimOptions sim;
  sim.caps = options.caps;
  sim.record_events = false;

  std::atomic<long> next{0};
  auto worker = [&] {
    for (long i = next++; i < replications; i = next++) {
      try {
        const EpidemicTrace trace = simulate(g, initial, policy, budget, derive_seed(seed, i), sim);
        tau[i] = trace.tau;
        censored[i] = trace.censored;
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  int threads = options.threads > 0 ? options.threads
                                    : static_cast<int>(std::thread::hardware_concurrency());
  threads = static_cast<int>(std::clamp<long>(threads, 1, replications));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }

  // Moments in replication order, so the result is independent of scheduling.
  SimEstimate est;
  est.replications = replications;
  double sum = 0.0;
  for (long i = 0; i < replications; ++i) {
    if (censored[i]) {
      ++est.censored;
    } else {
      ++est.completed;
      sum += tau[i];
    }
  }
  if (est.completed > 0) {
    const double mean = sum / est.completed;
    est.mean_tau = mean;
    if (est.completed > 1) {
      double squares = 0.0;
      for (long i = 0; i < replications; ++i) {
        if (!censored[i]) squares += (tau[i] - mean) * (tau[i] - mean);
      }
      est.se = std::sqrt(squares / (est.completed - 1)) / std::sqrt(static_cast<double>(est.completed));
    }
  }
  est.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return est;
}

std::string estimate_csv_header() { return "graph,policy,r,reps,mean_tau,se,censored\n"; }

std::string estimate_csv_row(std::string_view graph_label, std::string_view policy, double budget,
                             const SimEstimate& est) {
  std::string row(graph_label);
  row += ',';
  row += policy;
  row += ',' + format_real(budget) + ',' + std::to_string(est.replications) + ',';
  row += est.mean_tau ? format_real(*est.mean_tau) : "NA";
  row += ',';
  row += est.se ? format_real(*est.se) : "NA";
  row += ',' + std::to_string(est.censored) + '\n';
  return row;
}

Rational exact_extinction_complete_exact(int n, const Rational& budget) {
  if (n < 2) throw InvalidArgument("complete-graph extinction needs n >= 2");
  if (budget <= 0) throw InvalidArgument("complete-graph extinction needs r > 0");
  // Unknowns h_1..h_n (expected time to 0 from k infected), h_0 = 0:
  //   -r h_{k-1} + (k(n-k) + r) h_k - k(n-k) h_{k+1} = 1,  1 <= k < n
  //   -r h_{n-1} + r h_n = 1
  // Thomas forward sweep. The last row has no super-diagonal, so the swept
  // right-hand side at k = n is already h_n and no back substitution is needed.
  std::vector<Rational> upper(n + 1), rhs(n + 1);
  for (int k = 1; k <= n; ++k) {
    const Rational up = k * (n - k);
    const Rational sub = k == 1 ? Rational(0) : -budget;
    const Rational diag = up + budget;
    const Rational super = -up;
    const Rational pivot = k == 1 ? diag : diag - sub * upper[k - 1];
    upper[k] = super / pivot;
    rhs[k] = (1 - (k == 1 ? Rational(0) : sub * rhs[k - 1])) / pivot;
  }
  return rhs[n];
}

double exact_extinction_complete(int n, double budget) {
  return to_double(exact_extinction_complete_exact(n, Rational(budget)));
}

}  // namespace epigraph
