#ifndef EPIGRAPH_POLICY_H_
#define EPIGRAPH_POLICY_H_

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "epigraph/graph.h"
#include "epigraph/node_set.h"
#include "epigraph/rng.h"

namespace epigraph {

class ResilienceTable;

enum class EventKind : uint8_t { kInfect, kCure };

struct Event {
  double time = 0.0;
  int vertex = 0;
  EventKind kind = EventKind::kInfect;
  bool operator==(const Event&) const = default;
};

struct CureRate {
  int vertex = 0;
  double rate = 0.0;
};
using Allocation = std::vector<CureRate>;

// Everything a policy may look at when asked for a curing vector. The
// history span is empty unless the policy asks for it.
struct PolicyContext {
  double time = 0.0;
  NodeSet infected;
  const Graph& graph;
  double budget = 0.0;
  std::span<const Event> history;
};

// Maps the observed state to curing rates rho_v with sum rho_v <= budget.
// decide() is const: a policy instance is shared by concurrent runs and
// draws any randomness from the stream it is handed.
class CuringPolicy {
 public:
  virtual ~CuringPolicy() = default;
  virtual std::string name() const = 0;
  virtual Allocation decide(const PolicyContext& ctx, Rng& rng) const = 0;
  virtual bool needs_history() const { return false; }
};

enum class PolicyKind {
  kRandomInfected,
  kMaxDegreeInfected,
  kDegreeProportional,
  kMaxCutDrop,
  kResilienceGreedy,
  kNone,
};

// Built-in policies. One-node kinds put the whole budget on a single
// infected vertex; degree_proportional splits it by degree over infected
// vertices. Ties go to the lowest vertex id. resilience_greedy cures the v
// minimising gamma(I - v) and needs a table for the same graph.
std::shared_ptr<const CuringPolicy> builtin_policy(
    PolicyKind kind, std::shared_ptr<const ResilienceTable> table = nullptr);

PolicyKind parse_policy_kind(std::string_view text);
std::string to_string(PolicyKind kind);

// Throws PolicyFault unless every rate is finite and nonnegative, every
// vertex is in range, and the total is within the budget (relative slack
// 1e-12 for rounding).
void validate_allocation(const Allocation& allocation, const Graph& g, double budget);

}  // namespace epigraph

#endif  // EPIGRAPH_POLICY_H_
