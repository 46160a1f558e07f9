#include "commands.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "epigraph/bounds.h"
#include "epigraph/crusade.h"
#include "epigraph/error.h"
#include "epigraph/estimate.h"
#include "epigraph/format.h"
#include "epigraph/generators.h"
#include "epigraph/graph_io.h"
#include "epigraph/policy.h"
#include "epigraph/resilience.h"
#include "epigraph/rng.h"
#include "epigraph/simulator.h"
#include "epigraph/verify.h"

namespace epigraph::cli {
namespace {

// Nonzero exit that is not an exception from the library.
struct Degenerate : Error {
  using Error::Error;
};

Graph load_graph(const RunConfig& c) {
  const Connectivity mode = c.waive_connectivity ? Connectivity::kWaive : Connectivity::kRequire;
  if (!c.graph.empty() && !c.gen.empty()) throw InvalidArgument("give either --graph or --gen, not both");
  if (!c.graph.empty()) return read_graph_file(c.graph, mode);
  if (!c.gen.empty()) {
    GeneratorSpec spec = parse_generator_spec(c.gen);
    spec.seed = c.seed;
    return generate(spec);
  }
  throw InvalidArgument("no graph: pass --graph FILE or --gen SPEC");
}

std::string graph_label(const RunConfig& c) {
  if (!c.gen.empty()) return c.gen;
  return std::filesystem::path(c.graph).stem().string();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidArgument("cannot write " + path);
  f << text;
}

void emit(const RunConfig& c, std::ostream& out, const std::string& text) {
  if (c.out.empty()) {
    out << text;
  } else {
    write_file(c.out, text);
  }
}

NodeSet checked_bag(const Graph& g, const std::string& text) {
  const NodeSet bag = parse_node_set(text);
  if (!g.contains(bag)) {
    throw InvalidArgument("bag " + to_string(bag) + " names a vertex >= n=" + std::to_string(g.n()));
  }
  return bag;
}

BoundInputs bound_inputs(const Graph& g, int gamma0, int w, double r) {
  return BoundInputs{.gamma0 = gamma0,
                     .max_degree = g.max_degree(),
                     .slack = slack_E(g.n(), g.max_degree(), w),
                     .budget = Rational(r)};
}

int cmd_cutwidth(const RunConfig& c, std::ostream& out) {
  const Graph g = load_graph(c);
  const MonotoneTable table(g);
  const int w = table.cutwidth();
  const Rational e = slack_E(g.n(), g.max_degree(), w);
  std::string text = "W=" + std::to_string(w) + ", E=" + to_string(e) + "\n";
  text += "certificate:\n" + serialize_crusade(optimal_crusade(table, g.vertices()));
  emit(c, out, text);
  if (!c.table_csv.empty()) write_file(c.table_csv, table_to_csv(ResilienceTable(g)));
  if (!c.bound_csv.empty()) {
    write_file(c.bound_csv,
               bound_report_header() + bound_report_row(g.n(), w, bound_inputs(g, w, w, c.r)));
  }
  return kExitOk;
}

int cmd_resilience(const RunConfig& c, std::ostream& out) {
  if (c.bag.empty()) throw InvalidArgument("resilience needs --bag");
  const Graph g = load_graph(c);
  const NodeSet bag = checked_bag(g, c.bag);
  const MonotoneTable table(g);
  const int gamma = resilience(table, bag);
  const int w = table.cutwidth();
  std::string text = "gamma=" + std::to_string(gamma) +
                     ", E=" + to_string(slack_E(g.n(), g.max_degree(), w)) + "\n";
  text += "certificate:\n";
  text += bag.empty() ? to_string(bag) + "\n" : serialize_crusade(optimal_crusade(table, bag));
  emit(c, out, text);
  if (!c.table_csv.empty()) write_file(c.table_csv, table_to_csv(ResilienceTable(g)));
  if (!c.bound_csv.empty()) {
    write_file(c.bound_csv,
               bound_report_header() + bound_report_row(g.n(), w, bound_inputs(g, gamma, w, c.r)));
  }
  return kExitOk;
}

std::shared_ptr<const CuringPolicy> make_policy(const std::string& name, const Graph& g) {
  const PolicyKind kind = parse_policy_kind(name);
  std::shared_ptr<const ResilienceTable> table;
  if (kind == PolicyKind::kResilienceGreedy) table = std::make_shared<ResilienceTable>(g);
  return builtin_policy(kind, table);
}

NodeSet initial_infection(const RunConfig& c, const Graph& g) {
  return c.i0 == "all" ? g.vertices() : checked_bag(g, c.i0);
}

int cmd_simulate(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.reps < 1) throw InvalidArgument("--reps must be at least 1");
  if (!(c.r >= 0.0)) throw InvalidArgument("--r must be nonnegative");
  const Graph g = load_graph(c);
  const auto policy = make_policy(c.policy, g);
  const NodeSet i0 = initial_infection(c, g);
  EstimateOptions options;
  options.caps = {.max_time = c.max_time, .max_events = c.max_events};
  options.threads = c.threads;
  const SimEstimate est = estimate_extinction(g, i0, *policy, c.r, c.reps, c.seed, options);
  emit(c, out, estimate_csv_header() + estimate_csv_row(graph_label(c), policy->name(), c.r, est));

  if (!c.trace_dir.empty()) {
    std::filesystem::create_directories(c.trace_dir);
    const long count = std::min<long>(std::max(c.traces, 1), c.reps);
    for (long i = 0; i < count; ++i) {
      SimOptions sim;
      sim.caps = options.caps;
      const EpidemicTrace trace = simulate(g, i0, *policy, c.r, derive_seed(c.seed, i), sim);
      write_file((std::filesystem::path(c.trace_dir) / ("trace_" + std::to_string(i) + ".csv")).string(),
                 trace_to_csv(trace));
    }
  }
  if (!est.usable()) {
    err << "all " << est.replications << " replications censored; no extinction-time estimate\n";
    return kExitDegenerate;
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  VerifyOptions options;
  options.scope = parse_verify_scope(c.scope);
  options.max_n = c.max_n;
  options.random_graphs = c.random_graphs;
  options.seed = c.seed;
  options.walk_trials = c.walk_trials;
  if (options.max_n > 7) throw InvalidArgument("--max-n above 7 is not supported for exhaustive runs");
  const VerifyReport report = run_verify(options);
  emit(c, out, c.json ? report.to_json() : report.to_text());
  return report.ok() ? kExitOk : kExitCheckFailed;
}

std::string sweep_header() { return "graph,n,policy,r,reps,mean_tau,se,censored,status\n"; }

std::string sweep_cell(const RunConfig& c, int n, double r, const std::string& policy_name,
                       uint64_t cell_seed) {
  GeneratorSpec spec = parse_generator_spec(c.family + ":" + std::to_string(n));
  spec.seed = cell_seed;
  const std::string label = to_string(spec);
  const std::string prefix = label + "," + std::to_string(n) + "," + policy_name + "," + format_real(r) + ",";
  try {
    if (policy_name == "exact") {
      if (spec.family != GraphFamily::kComplete) {
        return prefix + "0,NA,NA,0,error:exact needs the complete family\n";
      }
      return prefix + "0," + format_real(exact_extinction_complete(n, r)) + ",NA,0,ok\n";
    }
    const Graph g = generate(spec);
    const auto policy = make_policy(policy_name, g);
    EstimateOptions options;
    options.caps = {.max_time = c.max_time, .max_events = c.max_events};
    options.threads = c.threads;
    const SimEstimate est = estimate_extinction(g, g.vertices(), *policy, r, c.reps, cell_seed, options);
    std::string row = estimate_csv_row(label, policy_name, r, est);
    // estimate row is graph,policy,r,reps,mean,se,censored; splice n in.
    row.insert(label.size(), "," + std::to_string(n));
    row.pop_back();
    return row + (est.censored > 0 ? ",censored\n" : ",ok\n");
  } catch (const std::exception& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), ',', ';');
    return prefix + std::to_string(c.reps) + ",NA,NA,0,error:" + msg + "\n";
  }
}

int cmd_sweep(const RunConfig& c, std::ostream& out) {
  if (c.reps < 1) throw InvalidArgument("--reps must be at least 1");
  std::vector<std::string> policies = c.policies;
  if (policies.empty()) policies = {c.policy};
  for (const std::string& p : policies) {
    if (p != "exact") parse_policy_kind(p);
  }
  // Completed cells from a previous run, keyed by cell index.
  std::map<long, std::string> done;
  if (!c.log.empty() && std::filesystem::exists(c.log)) {
    std::ifstream in(c.log);
    std::string line;
    while (std::getline(in, line)) {
      const size_t tab = line.find('\t');
      if (tab == std::string::npos) continue;
      done[std::stol(line.substr(0, tab))] = line.substr(tab + 1) + "\n";
    }
  }
  std::ofstream log;
  if (!c.log.empty()) log.open(c.log, std::ios::app);

  std::string text = sweep_header();
  long cell = 0;
  for (int n : c.ns) {
    for (double r : c.rs) {
      for (const std::string& p : policies) {
        std::string row;
        if (auto it = done.find(cell); it != done.end()) {
          row = it->second;
        } else {
          row = sweep_cell(c, n, r, p, derive_seed(c.seed, cell));
          if (log.is_open()) {
            log << cell << '\t' << row.substr(0, row.size() - 1) << '\n';
            log.flush();
          }
        }
        text += row;
        ++cell;
      }
    }
  }
  emit(c, out, text);
  return kExitOk;
}

int cmd_gen(const RunConfig& c, std::ostream& out) {
  emit(c, out, write_graph(load_graph(c)));
  return kExitOk;
}

}  // namespace

int run_command(const RunConfig& c, std::ostream& out, std::ostream& err) {
  err << "config: " << to_json(c).dump() << '\n';
  try {
    if (c.command == "cutwidth") return cmd_cutwidth(c, out);
    if (c.command == "resilience") return cmd_resilience(c, out);
    if (c.command == "simulate") return cmd_simulate(c, out, err);
    if (c.command == "verify") return cmd_verify(c, out);
    if (c.command == "sweep") return cmd_sweep(c, out);
    if (c.command == "gen") return cmd_gen(c, out);
    err << "error: unknown command '" << c.command << "'\n";
    return kExitUsage;
  } catch (const PolicyFault& e) {
    err << "policy fault: " << e.what() << '\n';
    return kExitPolicyFault;
  } catch (const Degenerate& e) {
    err << e.what() << '\n';
    return kExitDegenerate;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

namespace {

// Collects (option, copy-into-config) pairs so that only flags actually
// given on the command line override the config file.
class Overrides {
 public:
  explicit Overrides(RunConfig& flags) : flags_(flags) {}

  template <typename T>
  CLI::Option* option(CLI::App* app, const std::string& name, T RunConfig::*field,
                      const std::string& help) {
    CLI::Option* opt = app->add_option(name, flags_.*field, help);
    entries_.push_back({opt, [field](const RunConfig& from, RunConfig& to) { to.*field = from.*field; }});
    return opt;
  }

  void flag(CLI::App* app, const std::string& name, bool RunConfig::*field, const std::string& help) {
    CLI::Option* opt = app->add_flag(name, flags_.*field, help);
    entries_.push_back({opt, [field](const RunConfig& from, RunConfig& to) { to.*field = from.*field; }});
  }

  // A comma list parsed into a vector field.
  template <typename T>
  void list(CLI::App* app, const std::string& name, std::vector<T> RunConfig::*field,
            std::function<std::vector<T>(const std::string&)> parse, const std::string& help) {
    auto text = std::make_shared<std::string>();
    CLI::Option* opt = app->add_option(name, *text, help);
    entries_.push_back({opt, [field, parse, text](const RunConfig&, RunConfig& to) {
                          to.*field = parse(*text);
                        }});
  }

  void apply(RunConfig& to) const {
    for (const auto& [opt, copy] : entries_) {
      if (opt->count() > 0) copy(flags_, to);
    }
  }

 private:
  RunConfig& flags_;
  std::vector<std::pair<CLI::Option*, std::function<void(const RunConfig&, RunConfig&)>>> entries_;
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"epigraph: CutWidth, resilience and budgeted SIS extinction experiments"};
  app.require_subcommand(1);
  RunConfig flags;
  Overrides overrides(flags);
  std::string config_path;
  std::string echo_path;

  auto common = [&](CLI::App* sub, bool graph_source) {
    sub->add_option("--config", config_path, "JSON run config; flags override its fields");
    sub->add_option("--echo-config", echo_path, "also write the resolved config to this file");
    overrides.option(sub, "--seed", &RunConfig::seed, "master seed (default $EPIGRAPH_SEED or 42)");
    overrides.option(sub, "-o,--out", &RunConfig::out, "output file (default stdout)");
    if (graph_source) {
      overrides.option(sub, "--graph", &RunConfig::graph, "graph file");
      overrides.option(sub, "--gen", &RunConfig::gen, "generator spec, e.g. complete:4, er:10:0.3");
      overrides.flag(sub, "--waive-connectivity", &RunConfig::waive_connectivity,
                     "accept disconnected graph files");
    }
  };

  CLI::App* cutwidth = app.add_subcommand("cutwidth", "CutWidth W, slack E and an optimal crusade");
  common(cutwidth, true);
  overrides.option(cutwidth, "--table-csv", &RunConfig::table_csv, "export the resilience table");
  overrides.option(cutwidth, "--bound-csv", &RunConfig::bound_csv, "write the bound report for gamma0 = W");
  overrides.option(cutwidth, "--r", &RunConfig::r, "budget used in the bound report");

  CLI::App* resil = app.add_subcommand("resilience", "resilience of a bag with a certificate crusade");
  common(resil, true);
  overrides.option(resil, "--bag", &RunConfig::bag, "bag, e.g. 0,1 or [0,1] (required here or in --config)");
  overrides.option(resil, "--table-csv", &RunConfig::table_csv, "export the resilience table");
  overrides.option(resil, "--bound-csv", &RunConfig::bound_csv, "write the bound report for this bag");
  overrides.option(resil, "--r", &RunConfig::r, "budget used in the bound report");

  CLI::App* sim = app.add_subcommand("simulate", "Monte Carlo estimate of the extinction time");
  common(sim, true);
  overrides.option(sim, "--policy", &RunConfig::policy, "curing policy");
  overrides.option(sim, "--r", &RunConfig::r, "curing budget");
  overrides.option(sim, "--reps", &RunConfig::reps, "replications");
  overrides.option(sim, "--i0", &RunConfig::i0, "initial infection: all, or a bag");
  overrides.option(sim, "--max-time", &RunConfig::max_time, "censoring time");
  overrides.option(sim, "--max-events", &RunConfig::max_events, "censoring event count");
  overrides.option(sim, "--threads", &RunConfig::threads, "worker threads (0 = all cores)");
  overrides.option(sim, "--trace-dir", &RunConfig::trace_dir, "write event traces here");
  overrides.option(sim, "--traces", &RunConfig::traces, "number of traces to write");

  CLI::App* verify = app.add_subcommand("verify", "property and lemma verification suites");
  common(verify, false);
  overrides.option(verify, "--scope", &RunConfig::scope, "props, lemmas, oracle, walk or all");
  overrides.option(verify, "--max-n", &RunConfig::max_n, "exhaustive over connected graphs up to this size");
  overrides.option(verify, "--random-graphs", &RunConfig::random_graphs, "extra random graphs on 7..8 vertices");
  overrides.option(verify, "--walk-trials", &RunConfig::walk_trials, "Monte Carlo trials per walk cell");
  overrides.flag(verify, "--json", &RunConfig::json, "JSON report");

  CLI::App* sweep = app.add_subcommand("sweep", "grid over (n, r, policy), one CSV row per cell");
  common(sweep, false);
  overrides.option(sweep, "--family", &RunConfig::family, "graph family: complete, path, cycle, star, grid");
  overrides.list<int>(sweep, "--n", &RunConfig::ns, parse_int_list, "vertex counts, e.g. 2..14");
  overrides.list<double>(sweep, "--r", &RunConfig::rs, parse_real_list, "budgets, e.g. 1,2");
  overrides.list<std::string>(sweep, "--policies", &RunConfig::policies, parse_word_list,
                              "policies, including 'exact' for complete graphs");
  overrides.option(sweep, "--reps", &RunConfig::reps, "replications per cell");
  overrides.option(sweep, "--max-time", &RunConfig::max_time, "censoring time");
  overrides.option(sweep, "--max-events", &RunConfig::max_events, "censoring event count");
  overrides.option(sweep, "--threads", &RunConfig::threads, "worker threads (0 = all cores)");
  overrides.option(sweep, "--log", &RunConfig::log, "completion log; finished cells are reused");

  CLI::App* gen = app.add_subcommand("gen", "write a generated graph in the edge-list format");
  common(gen, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream usage_out;
    std::ostringstream usage_err;
    const int code = app.exit(e, usage_out, usage_err);
    out << usage_out.str();
    err << usage_err.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  RunConfig config;
  try {
    config.seed = default_seed();
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw ParseError("cannot open config " + config_path);
      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(in);
      } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("config: ") + e.what());
      }
      merge_json(doc, config);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  overrides.apply(config);
  config.command = app.get_subcommands().front()->get_name();
  if (!echo_path.empty()) {
    std::ofstream echo(echo_path);
    echo << to_json(config).dump(2) << '\n';
  }
  return run_command(config, out, err);
}

}  // namespace epigraph::cli
