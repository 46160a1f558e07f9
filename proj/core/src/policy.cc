#include "epigraph/policy.h"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "epigraph/error.h"
#include "epigraph/resilience.h"

namespace epigraph {
namespace {

Allocation whole_budget_on(int v, double budget) { return {{v, budget}}; }

class NoPolicy final : public CuringPolicy {
 public:
  std::string name() const override { return "none"; }
  Allocation decide(const PolicyContext&, Rng&) const override { return {}; }
};

class RandomInfected final : public CuringPolicy {
 public:
  std::string name() const override { return "random_infected"; }
  Allocation decide(const PolicyContext& ctx, Rng& rng) const override {
    if (ctx.infected.empty()) return {};
    uint64_t pick = rng.below(static_cast<uint64_t>(ctx.infected.size()));
    for (int v : ctx.infected) {
      if (pick-- == 0) return whole_budget_on(v, ctx.budget);
    }
    return {};
  }
};

// Whole budget on the infected vertex with the largest score; lowest id wins ties.
template <typename Score>
Allocation argmax_infected(const PolicyContext& ctx, Score score) {
  int best_vertex = -1;
  double best = -std::numeric_limits<double>::infinity();
  for (int v : ctx.infected) {
    const double s = score(v);
    if (s > best) {
      best = s;
      best_vertex = v;
    }
  }
  if (best_vertex < 0) return {};
  return whole_budget_on(best_vertex, ctx.budget);
}

class MaxDegreeInfected final : public CuringPolicy {
 public:
  std::string name() const override { return "max_degree_infected"; }
  Allocation decide(const PolicyContext& ctx, Rng&) const override {
    return argmax_infected(ctx, [&](int v) { return ctx.graph.degree(v); });
  }
};

class DegreeProportional final : public CuringPolicy {
 public:
  std::string name() const override { return "degree_proportional"; }
  Allocation decide(const PolicyContext& ctx, Rng&) const override {
    long total = 0;
    for (int v : ctx.infected) total += ctx.graph.degree(v);
    Allocation out;
    if (total == 0) return out;
    for (int v : ctx.infected) {
      out.push_back({v, ctx.budget * ctx.graph.degree(v) / static_cast<double>(total)});
    }
    return out;
  }
};

// Cures the vertex whose removal lowers the cut the most.
class MaxCutDrop final : public CuringPolicy {
 public:
  std::string name() const override { return "max_cut_drop"; }
  Allocation decide(const PolicyContext& ctx, Rng&) const override {
    const int current = cut(ctx.graph, ctx.infected);
    return argmax_infected(ctx, [&](int v) {
      return current - cut_after_remove(ctx.graph, ctx.infected, current, v);
    });
  }
};

class ResilienceGreedy final : public CuringPolicy {
 public:
  explicit ResilienceGreedy(std::shared_ptr<const ResilienceTable> table)
      : table_(std::move(table)) {}
  std::string name() const override { return "resilience_greedy"; }
  Allocation decide(const PolicyContext& ctx, Rng&) const override {
    if (ctx.graph.n() != table_->n()) {
      throw PolicyFault("resilience table was built for a different graph");
    }
    return argmax_infected(ctx, [&](int v) { return -table_->gamma(ctx.infected.without(v)); });
  }

 private:
  std::shared_ptr<const ResilienceTable> table_;
};

}  // namespace

std::shared_ptr<const CuringPolicy> builtin_policy(PolicyKind kind,
                                                   std::shared_ptr<const ResilienceTable> table) {
  switch (kind) {
    case PolicyKind::kNone: return std::make_shared<NoPolicy>();
    case PolicyKind::kRandomInfected: return std::make_shared<RandomInfected>();
    case PolicyKind::kMaxDegreeInfected: return std::make_shared<MaxDegreeInfected>();
    case PolicyKind::kDegreeProportional: return std::make_shared<DegreeProportional>();
    case PolicyKind::kMaxCutDrop: return std::make_shared<MaxCutDrop>();
    case PolicyKind::kResilienceGreedy:
      if (!table) throw InvalidArgument("resilience_greedy needs a resilience table");
      return std::make_shared<ResilienceGreedy>(std::move(table));
  }
  throw InvalidArgument("unknown policy kind");
}

PolicyKind parse_policy_kind(std::string_view text) {
  if (text == "random_infected") return PolicyKind::kRandomInfected;
  if (text == "max_degree_infected") return PolicyKind::kMaxDegreeInfected;
  if (text == "degree_proportional") return PolicyKind::kDegreeProportional;
  if (text == "max_cut_drop") return PolicyKind::kMaxCutDrop;
  if (text == "resilience_greedy") return PolicyKind::kResilienceGreedy;
  if (text == "none") return PolicyKind::kNone;
  throw InvalidArgument("unknown policy '" + std::string(text) + "'");
}

std::string to_string(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::kRandomInfected: return "random_infected";
    case PolicyKind::kMaxDegreeInfected: return "max_degree_infected";
    case PolicyKind::kDegreeProportional: return "degree_proportional";
    case PolicyKind::kMaxCutDrop: return "max_cut_drop";
    case PolicyKind::kResilienceGreedy: return "resilience_greedy";
    case PolicyKind::kNone: return "none";
  }
  return "unknown";
}

void validate_allocation(const Allocation& allocation, const Graph& g, double budget) {
  double total = 0.0;
  for (const CureRate& c : allocation) {
    if (c.vertex < 0 || c.vertex >= g.n()) {
      throw PolicyFault("allocation names vertex " + std::to_string(c.vertex) + " outside the graph");
    }
    if (!std::isfinite(c.rate) || c.rate < 0.0) {
      throw PolicyFault("allocation rate for vertex " + std::to_string(c.vertex) +
                        " is negative or not finite");
    }
    total += c.rate;
  }
  if (total > budget * (1.0 + 1e-12) + 1e-300) {
    throw PolicyFault("allocation total " + std::to_string(total) + " exceeds budget " +
                      std::to_string(budget));
  }
}

}  // namespace epigraph
