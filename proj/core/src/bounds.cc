#include "epigraph/bounds.h"

#include <cmath>
#include <limits>
#include <string>

#include "epigraph/error.h"
#include "epigraph/format.h"
#include "epigraph/rng.h"

namespace epigraph {
namespace {

Rational rational_pow(Rational base, long exponent) {
  Rational result = 1;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

void check_walk(const WalkParams& w) {
  if (!(w.lambda > 0.0) || !(w.mu > 0.0)) throw InvalidArgument("walk rates must be positive");
  if (w.level < 1 || w.start < 0 || w.start > w.level) {
    throw InvalidArgument("walk needs L >= 1 and 0 <= M <= L");
  }
}

}  // namespace

Rational slack_E(int n, int max_degree, int cutwidth) {
  if (max_degree < 1) throw InvalidArgument("slack needs Delta >= 1");
  if (cutwidth < 0 || 2 * cutwidth > n * max_degree) {
    throw InvalidArgument("CutWidth " + std::to_string(cutwidth) + " outside [0, n*Delta/2]");
  }
  return Rational(n + 2) - Rational(2 * cutwidth, max_degree);
}

double PowerBound::log10() const {
  if (prefactor <= 0 || base <= 0) return std::numeric_limits<double>::quiet_NaN();
  if (base == 1 || exponent == 0) return -std::numeric_limits<double>::infinity();
  const double power_log = to_double(exponent) * log10_of(base);
  if (power_log < 0) return std::numeric_limits<double>::quiet_NaN();
  // log10(b^x - 1) = x log10 b + log10(1 - 10^(-x log10 b))
  const double tail = std::log1p(-std::pow(10.0, -power_log)) / std::log(10.0);
  return log10_of(prefactor) + power_log + tail;
}

double PowerBound::value() const {
  const double lg = log10();
  if (std::isnan(lg)) {
    return to_double(prefactor) * (std::pow(to_double(base), to_double(exponent)) - 1.0);
  }
  return std::pow(10.0, lg);
}

std::optional<Rational> PowerBound::exact(int max_exponent) const {
  if (boost::multiprecision::denominator(exponent) != 1) return std::nullopt;
  const BigInt e = boost::multiprecision::numerator(exponent);
  if (e < 0 || e > max_exponent) return std::nullopt;
  return prefactor * (rational_pow(base, e.convert_to<long>()) - 1);
}

Theorem4Result theorem4_bound(const BoundInputs& in) {
  if (in.gamma0 < 0 || in.max_degree < 1 || in.slack < 2 || in.budget <= 0) {
    throw InvalidArgument("bound inputs need gamma0 >= 0, Delta >= 1, E >= 2, r > 0");
  }
  const Rational delta(in.max_degree);
  const Rational gamma0(in.gamma0);
  const Rational loss = (9 * in.slack + 12) * delta;
  Theorem4Result out;
  out.condition_met = gamma0 >= loss + 3 * in.budget;
  if (!out.condition_met) return out;
  out.bound = PowerBound{
      .prefactor = 1 / (2 * in.budget),
      .base = (gamma0 - loss) / (3 * in.budget),
      .exponent = gamma0 / (3 * delta) - 1,
  };
  return out;
}

double gambler_up_probability(const WalkParams& w) {
  check_walk(w);
  if (w.start == 0) return 0.0;
  if (w.start == w.level) return 1.0;
  if (w.lambda == w.mu) return static_cast<double>(w.start) / w.level;
  const double log_ratio = std::log(w.lambda / w.mu);
  if (log_ratio < 0) {
    // (1 - rho^M) / (1 - rho^L) with rho < 1.
    return std::expm1(w.start * log_ratio) / std::expm1(w.level * log_ratio);
  }
  // rho > 1: divide through by rho^L to stay finite.
  return std::exp((w.start - w.level) * log_ratio) * std::expm1(-w.start * log_ratio) /
         std::expm1(-w.level * log_ratio);
}

double random_walk_lower_bound(const WalkParams& w) {
  if (!(w.lambda > 0.0) || !(w.mu > 0.0) || w.level < 1) {
    throw InvalidArgument("walk needs positive rates and L >= 1");
  }
  if (!(w.lambda < w.mu)) throw DomainError("lower bound needs lambda < mu");
  return 0.5 * std::expm1((w.level - 1) * std::log(w.mu / w.lambda)) / w.lambda;
}

PowerBound random_walk_lower_bound_exact(const Rational& lambda, const Rational& mu,
                                         const Rational& level) {
  if (lambda <= 0 || mu <= 0) throw InvalidArgument("walk rates must be positive");
  if (lambda >= mu) throw DomainError("lower bound needs lambda < mu");
  return PowerBound{
      .prefactor = 1 / (2 * lambda),
      .base = mu / lambda,
      .exponent = level - 1,
  };
}

CorollaryCheck corollary_premise(int n, int max_degree, int cutwidth, const Rational& c) {
  if (c <= 1) throw InvalidArgument("density constant C must exceed 1");
  CorollaryCheck out;
  out.premise = Rational(19 * cutwidth) >= 9 * c * n * max_degree;
  out.base_term = BigInt(19) * cutwidth - BigInt(9) * n * max_degree - BigInt(30) * max_degree;
  return out;
}

ProbabilityEstimate monte_carlo_up_probability(const WalkParams& w, long trials, uint64_t seed) {
  check_walk(w);
  if (trials < 1) throw InvalidArgument("need at least one trial");
  Rng rng(seed);
  const double up = w.mu / (w.lambda + w.mu);
  long hits = 0;
  for (long t = 0; t < trials; ++t) {
    int z = w.start;
    while (z > 0 && z < w.level) z += rng.uniform() < up ? 1 : -1;
    if (z == w.level) ++hits;
  }
  ProbabilityEstimate out;
  out.trials = trials;
  out.p = static_cast<double>(hits) / trials;
  out.se = std::sqrt(out.p * (1.0 - out.p) / trials);
  return out;
}

std::string bound_report_header() { return "n,delta,W,E,gamma0,r,condition,bound_log10\n"; }

std::string bound_report_row(int n, int cutwidth, const BoundInputs& in) {
  const Theorem4Result res = theorem4_bound(in);
  std::string row = std::to_string(n) + ',' + std::to_string(in.max_degree) + ',' +
                    std::to_string(cutwidth) + ',' + format_real(to_double(in.slack)) + ',' +
                    std::to_string(in.gamma0) + ',' + format_real(to_double(in.budget)) + ',';
  if (res.condition_met) {
    row += "met," + format_real(res.bound->log10());
  } else {
    row += "unmet,NA";
  }
  return row + '\n';
}

}  // namespace epigraph
