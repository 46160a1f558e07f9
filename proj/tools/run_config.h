#ifndef EPIGRAPH_TOOLS_RUN_CONFIG_H_
#define EPIGRAPH_TOOLS_RUN_CONFIG_H_

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace epigraph::cli {

inline constexpr uint64_t kDefaultSeed = 42;

// Everything a command needs. Serialises to a flat JSON document; running
// a command from its echoed config reproduces the output bytes.
struct RunConfig {
  std::string command;

  // Graph source: a file, or a generator spec such as "complete:4".
  std::string graph;
  std::string gen;
  bool waive_connectivity = false;

  std::string bag;         // resilience
  std::string i0 = "all";  // simulate: "all" or a bag
  std::string policy = "max_degree_infected";
  double r = 1.0;
  long reps = 1000;
  double max_time = 1e6;
  long max_events = 100'000'000;
  uint64_t seed = kDefaultSeed;
  int threads = 0;

  std::string out;        // "" = stdout
  std::string trace_dir;  // simulate: write per-replication traces here
  int traces = 0;
  std::string table_csv;  // resilience table export
  std::string bound_csv;  // bound report

  // verify
  std::string scope = "all";
  int max_n = 6;
  int random_graphs = 200;
  long walk_trials = 100'000;
  bool json = false;

  // sweep
  std::string family = "complete";
  std::vector<int> ns;
  std::vector<double> rs;
  std::vector<std::string> policies;
  std::string log;
};

nlohmann::json to_json(const RunConfig& config);
// Fields missing from `doc` keep the values already in `config`.
void merge_json(const nlohmann::json& doc, RunConfig& config);

// Seed when none is configured: $EPIGRAPH_SEED if set, else 42.
uint64_t default_seed();

// "2..14", "2,3,5", "" (empty list).
std::vector<int> parse_int_list(const std::string& text);
std::vector<double> parse_real_list(const std::string& text);
std::vector<std::string> parse_word_list(const std::string& text);

}  // namespace epigraph::cli

#endif  // EPIGRAPH_TOOLS_RUN_CONFIG_H_
