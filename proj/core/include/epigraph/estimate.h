#ifndef EPIGRAPH_ESTIMATE_H_
#define EPIGRAPH_ESTIMATE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "epigraph/graph.h"
#include "epigraph/policy.h"
#include "epigraph/rational.h"
#include "epigraph/simulator.h"

namespace epigraph {

struct SimEstimate {
  long replications = 0;
  long completed = 0;
  long censored = 0;
  // Over uncensored runs only.
  std::optional<double> mean_tau;
  // Sample standard deviation / sqrt(completed); needs two completed runs.
  std::optional<double> se;
  double runtime_seconds = 0.0;

  bool usable() const { return completed > 0; }
};

struct EstimateOptions {
  SimCaps caps;
  // 0 = hardware concurrency. Results do not depend on this.
  int threads = 0;
};

// Replication i runs with seed derive_seed(seed, i).
SimEstimate estimate_extinction(const Graph& g, NodeSet initial, const CuringPolicy& policy,
                                double budget, long replications, uint64_t seed,
                                const EstimateOptions& options = {});

std::string estimate_csv_header();
std::string estimate_csv_row(std::string_view graph_label, std::string_view policy,
                             double budget, const SimEstimate& est);

// Exact E[tau] on K_n from full infection for any policy that always spends
// the budget on infected nodes. Solves the tridiagonal first-passage system
// over exact rationals.
Rational exact_extinction_complete_exact(int n, const Rational& budget);
double exact_extinction_complete(int n, double budget);

}  // namespace epigraph

#endif  // EPIGRAPH_ESTIMATE_H_
