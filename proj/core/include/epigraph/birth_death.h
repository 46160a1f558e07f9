#ifndef EPIGRAPH_BIRTH_DEATH_H_
#define EPIGRAPH_BIRTH_DEATH_H_

#include <vector>

#include "epigraph/rational.h"

namespace epigraph {

// Birth-death chain on states 0..top with 0 absorbing. up[k] and down[k]
// are the rates out of state k; up[top] is ignored (reflecting top) and
// so are up[0] and down[0].
struct BirthDeathChain {
  std::vector<Rational> up;
  std::vector<Rational> down;

  int top() const { return static_cast<int>(up.size()) - 1; }
};

// Expected time to hit 0 from `start`, via the first-passage recurrence
//   T_top = 1 / down[top],  T_k = (1 + up[k] * T_{k+1}) / down[k],
// where T_k is the expected time to step from k to k - 1, and the answer
// is T_1 + ... + T_start. Throws DomainError when 0 cannot be reached
// almost surely (a reachable state with no downward rate).
Rational exact_hitting_time(const BirthDeathChain& chain, int start);

// The chain seen by |I_t| on the complete graph K_n under any policy that
// always spends the whole budget r on infected nodes:
// up-rate k(n-k), down-rate r.
BirthDeathChain complete_graph_chain(int n, const Rational& r);

// Reflecting walk Y_t on 0..L: up mu below L, down lambda above 0.
BirthDeathChain reflecting_walk_chain(const Rational& lambda, const Rational& mu,
                                      int level);

}  // namespace epigraph

#endif  // EPIGRAPH_BIRTH_DEATH_H_
