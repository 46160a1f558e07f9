#ifndef EPIGRAPH_RESILIENCE_H_
#define EPIGRAPH_RESILIENCE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "epigraph/crusade.h"
#include "epigraph/graph.h"
#include "epigraph/node_set.h"

namespace epigraph {

inline constexpr int kDefaultMonotoneMaxN = 24;
inline constexpr int kDefaultResilienceMaxN = 16;

// Monotone widths of every subset:
//   g(empty) = 0,  g(B) = min_{v in B} max(cut(B - v), g(B - v)).
// g(V) is the CutWidth. Values are 16-bit; construction refuses graphs
// whose largest possible cut would not fit.
class MonotoneTable {
 public:
  MonotoneTable(const Graph& g, int max_n = kDefaultMonotoneMaxN);

  const Graph& graph() const { return graph_; }
  int n() const { return graph_.n(); }
  int cut(NodeSet a) const { return cut_[a.mask()]; }
  int monotone_width(NodeSet a) const { return g_[a.mask()]; }
  int cutwidth() const { return g_.back(); }

  const std::vector<uint16_t>& cuts() const { return cut_; }
  const std::vector<uint16_t>& monotone_widths() const { return g_; }

 private:
  Graph graph_;
  std::vector<uint16_t> cut_;
  std::vector<uint16_t> g_;
};

MonotoneTable monotone_table(const Graph& g, int max_n = kDefaultMonotoneMaxN);

// min over monotone crusades V -> empty of the width.
int cutwidth(const Graph& g, int max_n = kDefaultMonotoneMaxN);

// Resilience of one bag: the best first step B (any bag with |A \ B| <= 1,
// B != A) followed by the best monotone tail,
//   gamma(A) = min_B max(cut(B), g(B)).
// Cost is 2^(n-|A|) * (|A|+1) table lookups.
int resilience(const MonotoneTable& table, NodeSet a);

// An optimal (A - empty)-crusade: one free first step, then strictly
// shrinking bags. Ties go to the lowest removed vertex id (a first step
// that removes nothing ranks after every removal), then to the smallest
// bag mask. Requires a nonempty bag.
Crusade optimal_crusade(const MonotoneTable& table, NodeSet a);

// gamma for every subset, plus the monotone table it was computed from.
class ResilienceTable {
 public:
  ResilienceTable(const Graph& g, int max_n = kDefaultResilienceMaxN);

  const Graph& graph() const { return monotone_.graph(); }
  const MonotoneTable& monotone() const { return monotone_; }
  int n() const { return monotone_.n(); }
  int max_degree() const { return graph().max_degree(); }
  int cutwidth() const { return monotone_.cutwidth(); }
  int cut(NodeSet a) const { return monotone_.cut(a); }
  int monotone_width(NodeSet a) const { return monotone_.monotone_width(a); }
  int gamma(NodeSet a) const { return gamma_[a.mask()]; }
  const std::vector<uint16_t>& gammas() const { return gamma_; }

  // Delta * E = (n + 2) * Delta - 2W; an integer even when E is not.
  int delta_times_slack() const {
    return (n() + 2) * max_degree() - 2 * cutwidth();
  }

 private:
  MonotoneTable monotone_;
  std::vector<uint16_t> gamma_;
};

ResilienceTable resilience_table(const Graph& g, int max_n = kDefaultResilienceMaxN);

// Bags A with some v in A such that gamma(A - v) < gamma(A), ascending by mask.
std::vector<NodeSet> improvement_bags(const ResilienceTable& table);

// "bitmask,cardinality,cut,g,gamma" with one row per subset.
std::string table_to_csv(const ResilienceTable& table);

}  // namespace epigraph

#endif  // EPIGRAPH_RESILIENCE_H_
