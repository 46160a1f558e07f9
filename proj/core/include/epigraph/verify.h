#ifndef EPIGRAPH_VERIFY_H_
#define EPIGRAPH_VERIFY_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "epigraph/graph.h"

namespace epigraph {

struct PropertyResult {
  std::string name;
  long checked = 0;
  long vacuous = 0;  // premise unmet, nothing to check
  long violations = 0;
  std::string counterexample;  // first violation only

  bool passed() const { return violations == 0; }
};

class VerifyReport {
 public:
  // Finds or appends the named property, keeping first-seen order.
  PropertyResult& property(std::string_view name);
  void check(std::string_view name, bool holds, const std::string& witness);
  void vacuous(std::string_view name);
  void merge(const VerifyReport& other);

  bool ok() const;
  const std::vector<PropertyResult>& results() const { return results_; }

  // One line per property: "name PASS checked=.. vacuous=.. violations=..",
  // with the counterexample appended on failures.
  std::string to_text() const;
  std::string to_json() const;

 private:
  std::vector<PropertyResult> results_;
};

// Tables the lemma checks read. `cut` is a plain copy so tests can corrupt
// it and watch the checks fire; gamma is computed from the real graph.
struct LemmaContext {
  Graph graph;
  int n = 0;
  int max_degree = 0;
  int cutwidth = 0;
  int delta_times_slack = 0;  // Delta * E
  std::vector<int> cut;
  std::vector<int> gamma;
};

LemmaContext make_lemma_context(const Graph& g);

// Cut-function facts: union bound, submodularity, the min(|A|, n-|A|)Delta
// cap, the symmetric-difference Lipschitz bound, complement symmetry, and
// agreement of the table with the edge-list recount.
void check_cut_properties(const LemmaContext& ctx, VerifyReport& report);

// Resilience facts: monotonicity and smoothness, the improvement-bag cut
// bound, the admissible-region bounds (when W >= Delta), the cut lower
// bound for 0 < gamma < W, and the pointwise Bellman conditions.
void check_resilience_lemmas(const LemmaContext& ctx, VerifyReport& report);

// gamma(V) = W via the unrestricted search, table gamma = search gamma on
// every bag, and every optimal crusade certificate.
void check_against_oracle(const Graph& g, VerifyReport& report);

struct WalkVerifyOptions {
  long trials = 100'000;
  uint64_t seed = 42;
};

// Up-probability formula vs Monte Carlo, the reflecting-walk lower bound
// vs the exact hitting time, the regeneration inequality, and the
// extinction-bound composition identity.
VerifyReport verify_walk(const WalkVerifyOptions& options);

enum class VerifyScope { kProps, kLemmas, kOracle, kWalk, kAll };

VerifyScope parse_verify_scope(std::string_view text);
std::string to_string(VerifyScope scope);

struct VerifyOptions {
  VerifyScope scope = VerifyScope::kAll;
  int max_n = 6;            // exhaustive over connected graphs with 2..max_n vertices
  int random_graphs = 200;  // plus this many random connected graphs
  int random_min_n = 7;
  int random_max_n = 8;
  uint64_t seed = 42;
  long walk_trials = 100'000;
};

VerifyReport run_verify(const VerifyOptions& options);

// Compact description used in counterexamples: "n=4 edges=0-1,1-2,2-3".
std::string describe(const Graph& g);

}  // namespace epigraph

#endif  // EPIGRAPH_VERIFY_H_
