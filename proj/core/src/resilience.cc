#include "epigraph/resilience.h"

#include <algorithm>
#include <limits>
#include <string>

#include "epigraph/error.h"

namespace epigraph {
namespace {

void require_connected(const Graph& g) {
  if (!g.connected()) throw ConnectivityError("resilience is only defined on connected graphs");
}

// max(cut(B), g(B)): the width contributed by entering B and then
// following B's best monotone tail.
inline int entry_cost(const std::vector<uint16_t>& cut, const std::vector<uint16_t>& g,
                      uint64_t b) {
  return std::max(cut[b], g[b]);
}

// min over first steps B != A with |A \ B| <= 1 of entry_cost(B). The
// candidates are (A | D) - v for v in A and D inside the complement, plus
// A | D itself for nonempty D.
int best_first_step(const std::vector<uint16_t>& cut, const std::vector<uint16_t>& g,
                     uint64_t full, uint64_t a) {
  if (a == 0) return 0;
  const uint64_t outside = full & ~a;
  int best = std::numeric_limits<int>::max();
  for (uint64_t d = outside;; d = (d - 1) & outside) {
    const uint64_t b0 = a | d;
    if (d != 0) best = std::min(best, entry_cost(cut, g, b0));
    for (uint64_t rest = a; rest != 0; rest &= rest - 1) {
      best = std::min(best, entry_cost(cut, g, b0 & ~(rest & -rest)));
    }
    if (d == 0) break;
  }
  return best;
}

}  // namespace

MonotoneTable::MonotoneTable(const Graph& g, int max_n) : graph_(g) {
  require_connected(g);
  if (g.n() > max_n) {
    throw SizeCapExceeded("monotone table needs n <= " + std::to_string(max_n) + ", got " +
                          std::to_string(g.n()));
  }
  // Largest possible cut is n*Delta/2; it has to fit the 16-bit cells.
  if (g.n() * g.max_degree() / 2 > std::numeric_limits<uint16_t>::max()) {
    throw SizeCapExceeded("cut values overflow 16-bit table cells");
  }
  cut_ = cut_table(g, max_n);
  const uint64_t count = cut_.size();
  g_.assign(count, 0);
  // B - v < B as integers, so ascending mask order is a valid DP order.
  for (uint64_t b = 1; b < count; ++b) {
    int best = std::numeric_limits<int>::max();
    for (uint64_t rest = b; rest != 0; rest &= rest - 1) {
      best = std::min(best, entry_cost(cut_, g_, b & ~(rest & -rest)));
    }
    g_[b] = static_cast<uint16_t>(best);
  }
}

MonotoneTable monotone_table(const Graph& g, int max_n) { return MonotoneTable(g, max_n); }

int cutwidth(const Graph& g, int max_n) { return MonotoneTable(g, max_n).cutwidth(); }

int resilience(const MonotoneTable& table, NodeSet a) {
  if (!table.graph().contains(a)) throw InvalidArgument("bag " + to_string(a) + " is not over the graph");
  return best_first_step(table.cuts(), table.monotone_widths(),
                         table.graph().vertices().mask(), a.mask());
}

Crusade optimal_crusade(const MonotoneTable& table, NodeSet a) {
  const Graph& g = table.graph();
  if (a.empty()) throw InvalidArgument("optimal_crusade needs a nonempty bag");
  if (!g.contains(a)) throw InvalidArgument("bag " + to_string(a) + " is not over the graph");
  const auto& cut = table.cuts();
  const auto& mono = table.monotone_widths();
  const uint64_t outside = g.vertices().mask() & ~a.mask();

  // Removal steps first, by removed vertex then by bag mask; pure
  // additions last. Strict < keeps the earliest candidate on ties.
  int best = std::numeric_limits<int>::max();
  uint64_t first = 0;
  auto consider = [&](uint64_t b) {
    const int cost = entry_cost(cut, mono, b);
    if (cost < best) {
      best = cost;
      first = b;
    }
  };
  std::vector<uint64_t> extras;
  for (uint64_t d = outside;; d = (d - 1) & outside) {
    extras.push_back(d);
    if (d == 0) break;
  }
  std::sort(extras.begin(), extras.end());
  for (int v : a) {
    // (a | d) - v is increasing in d, so ascending d is ascending bag mask.
    for (uint64_t d : extras) consider((a.mask() | d) & ~(uint64_t{1} << v));
  }
  for (uint64_t d : extras) {
    if (d != 0) consider(a.mask() | d);
  }

  std::vector<NodeSet> bags{a, NodeSet::FromMask(first)};
  uint64_t current = first;
  while (current != 0) {
    int step_best = std::numeric_limits<int>::max();
    uint64_t next = 0;
    for (uint64_t rest = current; rest != 0; rest &= rest - 1) {
      const uint64_t b = current & ~(rest & -rest);
      const int cost = entry_cost(cut, mono, b);
      if (cost < step_best) {
        step_best = cost;
        next = b;
      }
    }
    current = next;
    bags.push_back(NodeSet::FromMask(current));
  }
  Crusade c;
  c.bags = std::move(bags);
  c.width = best;
  return c;
}

namespace {

const Graph& within_resilience_cap(const Graph& g, int max_n) {
  if (g.n() > max_n) {
    throw SizeCapExceeded("resilience table needs n <= " + std::to_string(max_n) + ", got " +
                          std::to_string(g.n()));
  }
  return g;
}

}  // namespace

ResilienceTable::ResilienceTable(const Graph& g, int max_n)
    : monotone_(within_resilience_cap(g, max_n), max_n) {
  const auto& cut = monotone_.cuts();
  const auto& mono = monotone_.monotone_widths();
  const uint64_t full = g.vertices().mask();
  gamma_.assign(cut.size(), 0);
  for (uint64_t a = 1; a < cut.size(); ++a) {
    gamma_[a] = static_cast<uint16_t>(best_first_step(cut, mono, full, a));
  }
}

ResilienceTable resilience_table(const Graph& g, int max_n) { return ResilienceTable(g, max_n); }

std::vector<NodeSet> improvement_bags(const ResilienceTable& table) {
  std::vector<NodeSet> out;
  const uint64_t count = table.gammas().size();
  for (uint64_t m = 1; m < count; ++m) {
    const NodeSet a = NodeSet::FromMask(m);
    for (int v : a) {
      if (table.gamma(a.without(v)) < table.gamma(a)) {
        out.push_back(a);
        break;
      }
    }
  }
  return out;
}

std::string table_to_csv(const ResilienceTable& table) {
  std::string out = "bitmask,cardinality,cut,g,gamma\n";
  const uint64_t count = table.gammas().size();
  for (uint64_t m = 0; m < count; ++m) {
    const NodeSet a = NodeSet::FromMask(m);
    out += std::to_string(m) + ',' + std::to_string(a.size()) + ',' +
           std::to_string(table.cut(a)) + ',' + std::to_string(table.monotone_width(a)) + ',' +
           std::to_string(table.gamma(a)) + '\n';
  }
  return out;
}

}  // namespace epigraph
