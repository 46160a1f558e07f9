#ifndef EPIGRAPH_BOUNDS_H_
#define EPIGRAPH_BOUNDS_H_

#include <cstdint>
#include <optional>
#include <string>

#include "epigraph/rational.h"

namespace epigraph {

// E = (2 / Delta) * ((n + 2) * Delta / 2 - W) = n + 2 - 2W / Delta.
// Requires Delta >= 1 and 0 <= W <= n * Delta / 2; the result is >= 2.
Rational slack_E(int n, int max_degree, int cutwidth);

// prefactor * (base^exponent - 1), kept symbolic because the exponent is
// usually fractional and the value astronomically large.
struct PowerBound {
  Rational prefactor;
  Rational base;
  Rational exponent;

  double log10() const;
  double value() const;  // may be +inf
  // Exact value when the exponent is a (reasonably small) integer.
  std::optional<Rational> exact(int max_exponent = 4096) const;

  bool operator==(const PowerBound&) const = default;
};

struct BoundInputs {
  int gamma0 = 0;      // resilience of the initial infected set
  int max_degree = 1;  // Delta
  Rational slack;      // E
  Rational budget;     // r
};

struct Theorem4Result {
  bool condition_met = false;
  // Present only when condition_met.
  std::optional<PowerBound> bound;
};

// Lower bound on the expected extinction time from I_0:
//   E[tau] >= (1/2r) * (((gamma0 - (9E+12)Delta) / 3r)^(gamma0/(3Delta) - 1) - 1)
// valid when gamma0 >= Delta(9E+12) + 3r. The exponent is used unfloored.
Theorem4Result theorem4_bound(const BoundInputs& in);

struct WalkParams {
  double lambda = 1.0;  // down rate
  double mu = 1.0;      // up rate
  int level = 1;        // L
  int start = 0;        // M
};

// P_M(walk reaches L before 0) = (1 - (lambda/mu)^M) / (1 - (lambda/mu)^L),
// with the symmetric limit M / L when lambda == mu.
double gambler_up_probability(const WalkParams& w);

// (1/2) * ((mu/lambda)^(L-1) - 1) / lambda, a lower bound on the expected
// time for the reflecting walk started at L-1 to hit 0. Requires
// lambda < mu; throws DomainError otherwise.
double random_walk_lower_bound(const WalkParams& w);
PowerBound random_walk_lower_bound_exact(const Rational& lambda, const Rational& mu,
                                         const Rational& level);

struct CorollaryCheck {
  bool premise = false;
  // 19W - 9n*Delta - 30*Delta: three times the budget-free numerator of
  // the bound's base once gamma0 = W and E are substituted.
  BigInt base_term;
};

// W >= (9C/19) n Delta, evaluated exactly. Requires C > 1.
CorollaryCheck corollary_premise(int n, int max_degree, int cutwidth, const Rational& c);

struct ProbabilityEstimate {
  double p = 0.0;
  double se = 0.0;
  long trials = 0;
};

// Monte Carlo of the free walk Z_t started at M: fraction of runs that
// reach L before 0. Uses the jump chain, since only the exit side matters.
ProbabilityEstimate monte_carlo_up_probability(const WalkParams& w, long trials,
                                               uint64_t seed);

// One row of the bound report CSV "n,delta,W,E,gamma0,r,condition,bound_log10".
std::string bound_report_header();
std::string bound_report_row(int n, int cutwidth, const BoundInputs& in);

}  // namespace epigraph

#endif  // EPIGRAPH_BOUNDS_H_
