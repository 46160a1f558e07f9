// Independent reference implementations used only by tests. None of these
// share code with the library beyond Graph and NodeSet.
#ifndef EPIGRAPH_TESTS_ORACLES_H_
#define EPIGRAPH_TESTS_ORACLES_H_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <vector>

#include "epigraph/graph.h"
#include "epigraph/rational.h"

namespace epigraph::testing {

inline int naive_cut(const Graph& g, NodeSet a) {
  int c = 0;
  for (const Edge& e : g.edges()) c += a.contains(e.u) != a.contains(e.v);
  return c;
}

// Min over vertex orders of the largest cut of a prefix.
inline int permutation_cutwidth(const Graph& g) {
  std::vector<int> order(g.n());
  std::iota(order.begin(), order.end(), 0);
  int best = 1 << 30;
  do {
    NodeSet prefix;
    int worst = 0;
    for (int v : order) {
      prefix = prefix.with(v);
      worst = std::max(worst, naive_cut(g, prefix));
    }
    best = std::min(best, worst);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

// Is the empty bag reachable from `a` using steps that drop at most one
// vertex (and add any), visiting only bags with cut <= t?
inline bool reachable_within(const Graph& g, NodeSet a, int t) {
  if (a.empty()) return true;
  const int n = g.n();
  const uint64_t states = uint64_t{1} << n;
  std::vector<char> seen(states, 0);
  std::queue<uint64_t> frontier;
  frontier.push(a.mask());
  seen[a.mask()] = 1;
  while (!frontier.empty()) {
    const uint64_t s = frontier.front();
    frontier.pop();
    for (uint64_t b = 0; b < states; ++b) {
      if (seen[b] || std::popcount(s & ~b) > 1) continue;
      if (naive_cut(g, NodeSet::FromMask(b)) > t) continue;
      if (b == 0) return true;
      seen[b] = 1;
      frontier.push(b);
    }
  }
  return false;
}

// Resilience as the least threshold that lets the search reach the empty bag.
inline int threshold_resilience(const Graph& g, NodeSet a) {
  for (int t = 0;; ++t) {
    if (reachable_within(g, a, t)) return t;
  }
}

// Expected absorption time at 0 of a birth-death chain by dense Gaussian
// elimination on h_k = 1/q_k + (u_k/q_k) h_{k+1} + (d_k/q_k) h_{k-1}.
inline std::vector<Rational> dense_hitting_times(const std::vector<Rational>& up,
                                                 const std::vector<Rational>& down) {
  const int top = static_cast<int>(up.size()) - 1;
  const int m = top;  // unknowns h_1..h_top
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1, Rational(0)));
  for (int k = 1; k <= top; ++k) {
    const Rational u = k == top ? Rational(0) : up[k];
    const Rational d = down[k];
    const int row = k - 1;
    a[row][row] = u + d;
    if (k + 1 <= top) a[row][row + 1] = -u;
    if (k - 1 >= 1) a[row][row - 1] = -d;
    a[row][m] = 1;
  }
  for (int col = 0; col < m; ++col) {
    int pivot = col;
    while (pivot < m && a[pivot][col] == 0) ++pivot;
    if (pivot == m) throw std::runtime_error("singular chain");
    std::swap(a[col], a[pivot]);
    for (int row = 0; row < m; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational f = a[row][col] / a[col][col];
      for (int j = col; j <= m; ++j) a[row][j] -= f * a[col][j];
    }
  }
  std::vector<Rational> h(top + 1, Rational(0));
  for (int k = 1; k <= top; ++k) h[k] = a[k - 1][m] / a[k - 1][k - 1];
  return h;
}

}  // namespace epigraph::testing

#endif  // EPIGRAPH_TESTS_ORACLES_H_
