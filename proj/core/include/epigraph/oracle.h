#ifndef EPIGRAPH_ORACLE_H_
#define EPIGRAPH_ORACLE_H_

#include <vector>

#include "epigraph/graph.h"
#include "epigraph/node_set.h"

namespace epigraph {

inline constexpr int kOracleMaxN = 10;

// Resilience by bottleneck Dijkstra over the full crusade graph: states are
// all 2^n bags, S -> B whenever |S \ B| <= 1, and a path's cost is the
// largest cut among the bags it enters. No structural shortcuts.
int oracle_resilience(const Graph& g, NodeSet a, int max_n = kOracleMaxN);

// Same search run backwards from the empty bag, giving every bag at once.
// Indexed by mask.
std::vector<int> oracle_resilience_all(const Graph& g, int max_n = kOracleMaxN);

}  // namespace epigraph

#endif  // EPIGRAPH_ORACLE_H_
