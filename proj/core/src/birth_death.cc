#include "epigraph/birth_death.h"

#include <string>

#include "epigraph/error.h"

namespace epigraph {

Rational exact_hitting_time(const BirthDeathChain& chain, int start) {
  const int top = chain.top();
  if (top < 1 || chain.down.size() != chain.up.size()) {
    throw InvalidArgument("birth-death chain needs matching rate vectors over at least two states");
  }
  if (start < 0 || start > top) throw InvalidArgument("start state out of range");
  for (int k = 0; k <= top; ++k) {
    if (chain.up[k] < 0 || chain.down[k] < 0) throw InvalidArgument("rates must be nonnegative");
  }
  if (start == 0) return 0;
  // Highest state the chain can climb to from `start`.
  int ceiling = start;
  while (ceiling < top && chain.up[ceiling] > 0) ++ceiling;
  for (int k = 1; k <= ceiling; ++k) {
    if (chain.down[k] == 0) {
      throw DomainError("state 0 unreachable: no downward rate at state " + std::to_string(k));
    }
  }
  // step[k]: expected time to go from k to k - 1.
  Rational step = Rational(1) / chain.down[ceiling];
  Rational total = ceiling <= start ? step : Rational(0);
  for (int k = ceiling - 1; k >= 1; --k) {
    step = (1 + chain.up[k] * step) / chain.down[k];
    if (k <= start) total += step;
  }
  return total;
}

BirthDeathChain complete_graph_chain(int n, const Rational& r) {
  if (n < 1) throw InvalidArgument("complete graph needs n >= 1");
  BirthDeathChain chain;
  chain.up.resize(n + 1);
  chain.down.resize(n + 1);
  for (int k = 0; k <= n; ++k) {
    chain.up[k] = k * (n - k);
    chain.down[k] = k == 0 ? Rational(0) : r;
  }
  return chain;
}

BirthDeathChain reflecting_walk_chain(const Rational& lambda, const Rational& mu, int level) {
  if (level < 1) throw InvalidArgument("reflecting walk needs L >= 1");
  BirthDeathChain chain;
  chain.up.assign(level + 1, mu);
  chain.down.assign(level + 1, lambda);
  chain.up[level] = 0;
  chain.down[0] = 0;
  return chain;
}

}  // namespace epigraph
