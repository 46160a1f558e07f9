#include "run_config.h"

#include <cstdlib>
#include <sstream>

#include "epigraph/error.h"

namespace epigraph::cli {

nlohmann::json to_json(const RunConfig& c) {
  return nlohmann::json{
      {"command", c.command},
      {"graph", c.graph},
      {"gen", c.gen},
      {"waive_connectivity", c.waive_connectivity},
      {"bag", c.bag},
      {"i0", c.i0},
      {"policy", c.policy},
      {"r", c.r},
      {"reps", c.reps},
      {"max_time", c.max_time},
      {"max_events", c.max_events},
      {"seed", c.seed},
      {"threads", c.threads},
      {"out", c.out},
      {"trace_dir", c.trace_dir},
      {"traces", c.traces},
      {"table_csv", c.table_csv},
      {"bound_csv", c.bound_csv},
      {"scope", c.scope},
      {"max_n", c.max_n},
      {"random_graphs", c.random_graphs},
      {"walk_trials", c.walk_trials},
      {"json", c.json},
      {"family", c.family},
      {"ns", c.ns},
      {"rs", c.rs},
      {"policies", c.policies},
      {"log", c.log},
  };
}

namespace {

template <typename T>
void take(const nlohmann::json& doc, const char* key, T& field) {
  if (auto it = doc.find(key); it != doc.end()) it->get_to(field);
}

}  // namespace

void merge_json(const nlohmann::json& doc, RunConfig& c) {
  if (!doc.is_object()) throw ParseError("config must be a JSON object");
  try {
    take(doc, "command", c.command);
    take(doc, "graph", c.graph);
    take(doc, "gen", c.gen);
    take(doc, "waive_connectivity", c.waive_connectivity);
    take(doc, "bag", c.bag);
    take(doc, "i0", c.i0);
    take(doc, "policy", c.policy);
    take(doc, "r", c.r);
    take(doc, "reps", c.reps);
    take(doc, "max_time", c.max_time);
    take(doc, "max_events", c.max_events);
    take(doc, "seed", c.seed);
    take(doc, "threads", c.threads);
    take(doc, "out", c.out);
    take(doc, "trace_dir", c.trace_dir);
    take(doc, "traces", c.traces);
    take(doc, "table_csv", c.table_csv);
    take(doc, "bound_csv", c.bound_csv);
    take(doc, "scope", c.scope);
    take(doc, "max_n", c.max_n);
    take(doc, "random_graphs", c.random_graphs);
    take(doc, "walk_trials", c.walk_trials);
    take(doc, "json", c.json);
    take(doc, "family", c.family);
    take(doc, "ns", c.ns);
    take(doc, "rs", c.rs);
    take(doc, "policies", c.policies);
    take(doc, "log", c.log);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
}

uint64_t default_seed() {
  if (const char* env = std::getenv("EPIGRAPH_SEED"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (*end != '\0') throw ParseError("EPIGRAPH_SEED must be an unsigned integer");
    return value;
  }
  return kDefaultSeed;
}

std::vector<std::string> parse_word_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const std::string& item : parse_word_list(text)) {
    const size_t dots = item.find("..");
    try {
      if (dots == std::string::npos) {
        out.push_back(std::stoi(item));
      } else {
        const int lo = std::stoi(item.substr(0, dots));
        const int hi = std::stoi(item.substr(dots + 2));
        for (int v = lo; v <= hi; ++v) out.push_back(v);
      }
    } catch (const std::exception&) {
      throw ParseError("bad integer list item '" + item + "'");
    }
  }
  return out;
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  for (const std::string& item : parse_word_list(text)) {
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (end != item.c_str() + item.size()) throw ParseError("bad number '" + item + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace epigraph::cli
