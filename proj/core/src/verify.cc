#include "epigraph/verify.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <string>

#include <nlohmann/json.hpp>

#include "epigraph/birth_death.h"
#include "epigraph/bounds.h"
#include "epigraph/error.h"
#include "epigraph/generators.h"
#include "epigraph/oracle.h"
#include "epigraph/rational.h"
#include "epigraph/resilience.h"
#include "epigraph/rng.h"

namespace epigraph {

PropertyResult& VerifyReport::property(std::string_view name) {
  for (PropertyResult& r : results_) {
    if (r.name == name) return r;
  }
  PropertyResult fresh;
  fresh.name = std::string(name);
  results_.push_back(std::move(fresh));
  return results_.back();
}

void VerifyReport::check(std::string_view name, bool holds, const std::string& witness) {
  PropertyResult& r = property(name);
  ++r.checked;
  if (!holds) {
    if (r.violations == 0) r.counterexample = witness;
    ++r.violations;
  }
}

void VerifyReport::vacuous(std::string_view name) { ++property(name).vacuous; }

void VerifyReport::merge(const VerifyReport& other) {
  for (const PropertyResult& o : other.results_) {
    PropertyResult& r = property(o.name);
    r.checked += o.checked;
    r.vacuous += o.vacuous;
    if (r.violations == 0 && o.violations > 0) r.counterexample = o.counterexample;
    r.violations += o.violations;
  }
}

bool VerifyReport::ok() const {
  return std::all_of(results_.begin(), results_.end(),
                     [](const PropertyResult& r) { return r.passed(); });
}

std::string VerifyReport::to_text() const {
  std::string out;
  for (const PropertyResult& r : results_) {
    out += r.name + (r.passed() ? " PASS" : " FAIL") + " checked=" + std::to_string(r.checked) +
           " vacuous=" + std::to_string(r.vacuous) + " violations=" + std::to_string(r.violations);
    if (!r.passed()) out += " counterexample: " + r.counterexample;
    out += '\n';
  }
  return out;
}

std::string VerifyReport::to_json() const {
  nlohmann::json props = nlohmann::json::array();
  for (const PropertyResult& r : results_) {
    nlohmann::json item = {{"name", r.name},
                           {"status", r.passed() ? "pass" : "fail"},
                           {"checked", r.checked},
                           {"vacuous", r.vacuous},
                           {"violations", r.violations}};
    if (!r.passed()) item["counterexample"] = r.counterexample;
    props.push_back(std::move(item));
  }
  return nlohmann::json{{"ok", ok()}, {"properties", props}}.dump(2) + "\n";
}

std::string describe(const Graph& g) {
  std::string out = "n=" + std::to_string(g.n()) + " edges=";
  bool first = true;
  for (const Edge& e : g.edges()) {
    if (!first) out += ',';
    out += std::to_string(e.u) + '-' + std::to_string(e.v);
    first = false;
  }
  return out;
}

LemmaContext make_lemma_context(const Graph& g) {
  const ResilienceTable table(g);
  const auto& cuts = table.monotone().cuts();
  return LemmaContext{
      .graph = g,
      .n = g.n(),
      .max_degree = g.max_degree(),
      .cutwidth = table.cutwidth(),
      .delta_times_slack = table.delta_times_slack(),
      .cut = std::vector<int>(cuts.begin(), cuts.end()),
      .gamma = std::vector<int>(table.gammas().begin(), table.gammas().end()),
  };
}

namespace {

std::string bag(uint64_t m) { return to_string(NodeSet::FromMask(m)); }

}  // namespace

void check_cut_properties(const LemmaContext& ctx, VerifyReport& report) {
  const uint64_t count = ctx.cut.size();
  const uint64_t full = count - 1;
  const int delta = ctx.max_degree;
  const auto& c = ctx.cut;
  const std::string graph = describe(ctx.graph);

  for (uint64_t a = 0; a < count; ++a) {
    const int size = std::popcount(a);
    report.check("cut_matches_recount", c[a] == cut_recount(ctx.graph, NodeSet::FromMask(a)),
                 graph + " A=" + bag(a) + " table=" + std::to_string(c[a]));
    report.check("cut_complement_symmetry", c[a] == c[full & ~a], graph + " A=" + bag(a));
    report.check("cut_size_cap", c[a] <= std::min(size, ctx.n - size) * delta,
                 graph + " A=" + bag(a) + " cut=" + std::to_string(c[a]));
    for (uint64_t b = 0; b < count; ++b) {
      const int union_cut = c[a | b];
      report.check("cut_union_bound",
                   union_cut <= c[a] + c[b] && c[a] + c[b] <= c[a] + delta * std::popcount(b),
                   graph + " A=" + bag(a) + " B=" + bag(b));
      report.check("cut_lipschitz", std::abs(c[a] - c[b]) <= delta * std::popcount(a ^ b),
                   graph + " A=" + bag(a) + " B=" + bag(b));
    }
  }
  // Submodularity over A subset of B, v in A.
  for (uint64_t b = 0; b < count; ++b) {
    for (uint64_t a = b;; a = (a - 1) & b) {
      for (uint64_t rest = a; rest != 0; rest &= rest - 1) {
        const uint64_t v = rest & -rest;
        report.check("cut_submodular", c[a & ~v] - c[a] <= c[b & ~v] - c[b],
                     graph + " A=" + bag(a) + " B=" + bag(b) + " v=" +
                         std::to_string(std::countr_zero(v)));
      }
      if (a == 0) break;
    }
  }
}

void check_resilience_lemmas(const LemmaContext& ctx, VerifyReport& report) {
  const uint64_t count = ctx.gamma.size();
  const uint64_t full = count - 1;
  const int delta = ctx.max_degree;
  const int w = ctx.cutwidth;
  const int de = ctx.delta_times_slack;
  const auto& c = ctx.cut;
  const auto& gamma = ctx.gamma;
  const std::string graph = describe(ctx.graph) + " W=" + std::to_string(w) +
                            " Delta=" + std::to_string(delta);
  const bool region_premise = w >= delta;

  report.check("slack_at_least_two", de >= 2 * delta, graph);
  for (uint64_t a = 0; a < count; ++a) {
    const int size = std::popcount(a);
    const int ga = gamma[a];
    const std::string at = graph + " A=" + bag(a) + " gamma=" + std::to_string(ga) +
                           " cut=" + std::to_string(c[a]);

    report.check("gamma_zero_iff_at_most_one", (ga == 0) == (size <= 1), at);

    // Monotonicity over all supersets.
    const uint64_t outside = full & ~a;
    for (uint64_t d = outside;; d = (d - 1) & outside) {
      report.check("resilience_monotone", ga <= gamma[a | d], at + " B=" + bag(a | d));
      if (d == 0) break;
    }
    for (uint64_t rest = outside; rest != 0; rest &= rest - 1) {
      const uint64_t bigger = a | (rest & -rest);
      report.check("resilience_smooth", gamma[bigger] <= ga + delta, at + " A+v=" + bag(bigger));
    }

    bool improvement = false;
    for (uint64_t rest = a; rest != 0; rest &= rest - 1) {
      if (gamma[a & ~(rest & -rest)] < ga) improvement = true;
    }
    if (improvement) {
      report.check("improvement_bag_cut", c[a] >= ga - delta, at);
    }

    if (!region_premise) {
      report.vacuous("resilience_size_cap");
      report.vacuous("cutwidth_complement_cap");
      report.vacuous("resilience_size_floor");
      report.vacuous("resilience_cut_floor");
    } else {
      report.check("resilience_size_cap", ga <= size * delta, at);
      if (ga < w) {
        report.check("cutwidth_complement_cap", w <= (ctx.n - size) * delta, at);
        report.check("resilience_size_floor", ga >= delta * size - de, at);
      } else {
        report.vacuous("cutwidth_complement_cap");
        report.vacuous("resilience_size_floor");
      }
      if (ga > 0 && ga < w) {
        report.check("resilience_cut_floor", c[a] >= ga - 2 * de - 4 * delta, at);
      } else {
        report.vacuous("resilience_cut_floor");
      }
    }

    // Bellman: necessary condition on single add/remove neighbours, then
    // the full minimum over every admissible next bag.
    int best = a == 0 ? 0 : std::numeric_limits<int>::max();
    bool local_ok = true;
    for (int v = 0; v < ctx.n; ++v) {
      const uint64_t b = a ^ (uint64_t{1} << v);
      if (ga > std::max<int>(c[b], gamma[b])) local_ok = false;
    }
    report.check("bellman_local", local_ok, at);
    for (uint64_t d = outside;; d = (d - 1) & outside) {
      const uint64_t b0 = a | d;
      if (d != 0) best = std::min(best, std::max(c[b0], gamma[b0]));
      for (uint64_t rest = a; rest != 0; rest &= rest - 1) {
        const uint64_t b = b0 & ~(rest & -rest);
        best = std::min(best, std::max(c[b], gamma[b]));
      }
      if (d == 0) break;
    }
    report.check("bellman_fixed_point", best == ga, at + " bellman=" + std::to_string(best));
  }
}

void check_against_oracle(const Graph& g, VerifyReport& report) {
  const std::vector<int> oracle = oracle_resilience_all(g);
  const ResilienceTable table(g);
  const std::string graph = describe(g);
  const uint64_t full = g.vertices().mask();
  const int delta = g.max_degree();

  report.check("resilience_of_full_set_equals_cutwidth", oracle[full] == table.cutwidth(),
               graph + " oracle gamma(V)=" + std::to_string(oracle[full]) +
                   " W=" + std::to_string(table.cutwidth()));
  report.check("oracle_forward_matches_backward",
               oracle_resilience(g, g.vertices()) == oracle[full], graph);

  for (uint64_t m = 0; m <= full; ++m) {
    const NodeSet a = NodeSet::FromMask(m);
    const int expected = oracle[m];
    const std::string at = graph + " A=" + to_string(a);
    report.check("resilience_matches_oracle", table.gamma(a) == expected,
                 at + " table=" + std::to_string(table.gamma(a)) +
                     " oracle=" + std::to_string(expected));
    report.check("single_bag_resilience_matches_table", resilience(table.monotone(), a) == table.gamma(a),
                 at);
    if (a.empty()) continue;

    const Crusade cr = optimal_crusade(table.monotone(), a);
    bool steps_ok = cr.bags.front() == a && cr.bags.back().empty();
    bool distinct = true;
    bool nested = true;
    bool gamma_capped = true;
    bool hits_improvement = false;
    for (size_t i = 1; i < cr.bags.size(); ++i) {
      if ((cr.bags[i - 1] - cr.bags[i]).size() > 1) steps_ok = false;
      if (cr.bags[i] == cr.bags[i - 1]) distinct = false;
      if (i >= 2 && !(cr.bags[i].subset_of(cr.bags[i - 1]) && cr.bags[i] != cr.bags[i - 1])) {
        nested = false;
      }
    }
    for (NodeSet b : cr.bags) {
      if (table.gamma(b) > expected) gamma_capped = false;
      for (int v : b) {
        if (table.gamma(b.without(v)) < table.gamma(b)) hits_improvement = true;
      }
    }
    report.check("crusade_steps_valid", steps_ok, at);
    report.check("crusade_width_is_gamma",
                 cr.width == expected && width(g, cr.bags) == expected, at);
    report.check("crusade_bags_distinct", distinct, at);
    report.check("crusade_nested_tail", nested, at);
    report.check("crusade_resilience_capped", gamma_capped, at);
    report.check("crusade_first_step_resilience",
                 table.gamma(cr.bags[1]) >= expected - delta, at);
    if (expected > 0) {
      report.check("crusade_meets_improvement_bag", hits_improvement, at);
    } else {
      report.vacuous("crusade_meets_improvement_bag");
    }
  }
}

namespace {

Rational exact_up_probability(const Rational& lambda, const Rational& mu, int start, int level) {
  const Rational rho = lambda / mu;
  Rational rho_m = 1;
  Rational rho_l = 1;
  for (int i = 0; i < level; ++i) {
    if (i < start) rho_m *= rho;
    rho_l *= rho;
  }
  return (1 - rho_m) / (1 - rho_l);
}

Rational random_rational(Rng& rng, int max_num, int max_den) {
  const long num = static_cast<long>(rng.below(max_num)) + 1;
  const long den = static_cast<long>(rng.below(max_den)) + 1;
  return Rational(num, den);
}

}  // namespace

VerifyReport verify_walk(const WalkVerifyOptions& options) {
  VerifyReport report;

  // Up-probability formula against simulation of the free walk.
  uint64_t stream = 0;
  for (double ratio : {0.5, 1.0, 2.0}) {
    for (int level = 2; level <= 10; ++level) {
      for (int start = 1; start < level; ++start) {
        const WalkParams w{.lambda = ratio, .mu = 1.0, .level = level, .start = start};
        const double formula = gambler_up_probability(w);
        const ProbabilityEstimate mc =
            monte_carlo_up_probability(w, options.trials, derive_seed(options.seed, stream++));
        char witness[160];
        std::snprintf(witness, sizeof witness,
                      "lambda/mu=%g M=%d L=%d formula=%.6f mc=%.6f se=%.6f", ratio, start, level,
                      formula, mc.p, mc.se);
        report.check("upprob_vs_monte_carlo", std::abs(mc.p - formula) <= 3.0 * mc.se, witness);
      }
    }
  }

  // Reflecting-walk lower bound against the exact hitting time from L-1.
  for (const char* lam : {"0.25", "0.5", "1"}) {
    for (const char* mu_text : {"1.5", "2", "4"}) {
      const Rational lambda = parse_rational(lam);
      const Rational mu = parse_rational(mu_text);
      for (int level = 2; level <= 20; ++level) {
        const Rational exact = exact_hitting_time(reflecting_walk_chain(lambda, mu, level), level - 1);
        const Rational bound = *random_walk_lower_bound_exact(lambda, mu, level).exact();
        const Rational p = exact_up_probability(lambda, mu, level - 1, level);
        const Rational regeneration = p / ((1 - p) * lambda);
        const std::string witness = std::string("lambda=") + lam + " mu=" + mu_text +
                                    " L=" + std::to_string(level) + " exact=" + to_string(exact) +
                                    " bound=" + to_string(bound);
        report.check("lowerrandom_le_exact_hitting", bound <= exact, witness);
        report.check("regeneration_le_exact_hitting", regeneration <= exact,
                     witness + " regeneration=" + to_string(regeneration));
        report.check("lowerrandom_le_regeneration", bound <= regeneration, witness);
        const double p_double = gambler_up_probability(
            {.lambda = to_double(lambda), .mu = to_double(mu), .level = level, .start = level - 1});
        report.check("upprob_double_matches_exact",
                     std::abs(p_double - to_double(p)) <= 1e-12, witness);
      }
    }
  }

  // The extinction bound is the walk bound with lambda = r,
  // mu = gamma0/3 - (3E+4)Delta and L = gamma0 / (3 Delta).
  Rng rng(derive_seed(options.seed, 1'000'000));
  for (int trial = 0; trial < 100; ++trial) {
    BoundInputs in;
    in.max_degree = static_cast<int>(rng.below(6)) + 1;
    in.slack = 2 + Rational(static_cast<long>(rng.below(21)), static_cast<long>(rng.below(6)) + 1);
    in.budget = random_rational(rng, 40, 4);
    const Rational threshold = in.max_degree * (9 * in.slack + 12) + 3 * in.budget;
    const BigInt floor_threshold = boost::multiprecision::numerator(threshold) /
                                   boost::multiprecision::denominator(threshold);
    in.gamma0 = floor_threshold.convert_to<int>() + 1 + static_cast<int>(rng.below(200));
    const Theorem4Result t4 = theorem4_bound(in);
    const Rational delta(in.max_degree);
    const Rational mu = Rational(in.gamma0, 3) - (3 * in.slack + 4) * delta;
    const PowerBound walk =
        random_walk_lower_bound_exact(in.budget, mu, Rational(in.gamma0) / (3 * delta));
    report.check("extinction_bound_equals_walk_bound", t4.condition_met && t4.bound && *t4.bound == walk,
                 "gamma0=" + std::to_string(in.gamma0) + " Delta=" + std::to_string(in.max_degree) +
                     " E=" + to_string(in.slack) + " r=" + to_string(in.budget));
  }
  // Desk-scale graphs sit far below the hypothesis.
  const BoundInputs k4{.gamma0 = 4, .max_degree = 3, .slack = Rational(10, 3), .budget = 1};
  const BoundInputs p4{.gamma0 = 1, .max_degree = 2, .slack = 5, .budget = 1};
  report.check("extinction_bound_unmet_k4", !theorem4_bound(k4).condition_met, "K_4 inputs");
  report.check("extinction_bound_unmet_p4", !theorem4_bound(p4).condition_met, "P_4 inputs");
  return report;
}

VerifyScope parse_verify_scope(std::string_view text) {
  if (text == "props") return VerifyScope::kProps;
  if (text == "lemmas") return VerifyScope::kLemmas;
  if (text == "oracle") return VerifyScope::kOracle;
  if (text == "walk") return VerifyScope::kWalk;
  if (text == "all") return VerifyScope::kAll;
  throw InvalidArgument("unknown verify scope '" + std::string(text) + "'");
}

std::string to_string(VerifyScope scope) {
  switch (scope) {
    case VerifyScope::kProps: return "props";
    case VerifyScope::kLemmas: return "lemmas";
    case VerifyScope::kOracle: return "oracle";
    case VerifyScope::kWalk: return "walk";
    case VerifyScope::kAll: return "all";
  }
  return "all";
}

VerifyReport run_verify(const VerifyOptions& options) {
  VerifyReport report;
  const bool props = options.scope == VerifyScope::kProps || options.scope == VerifyScope::kAll;
  const bool lemmas = options.scope == VerifyScope::kLemmas || options.scope == VerifyScope::kAll;
  const bool oracle = options.scope == VerifyScope::kOracle || options.scope == VerifyScope::kAll;
  const bool walk = options.scope == VerifyScope::kWalk || options.scope == VerifyScope::kAll;

  if (props || lemmas || oracle) {
    auto visit = [&](const Graph& g) {
      if (props || lemmas) {
        const LemmaContext ctx = make_lemma_context(g);
        if (props) check_cut_properties(ctx, report);
        if (lemmas) check_resilience_lemmas(ctx, report);
      }
      if (oracle) check_against_oracle(g, report);
    };
    for (int n = 2; n <= options.max_n; ++n) for_each_connected_graph(n, visit);
    const int span = std::max(options.random_max_n - options.random_min_n + 1, 1);
    for (int i = 0; i < options.random_graphs; ++i) {
      const int n = options.random_min_n + i % span;
      visit(random_connected_graph(n, derive_seed(options.seed, i)));
    }
  }
  if (walk) {
    report.merge(verify_walk({.trials = options.walk_trials, .seed = options.seed}));
  }
  return report;
}

}  // namespace epigraph
