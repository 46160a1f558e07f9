#ifndef EPIGRAPH_GENERATORS_H_
#define EPIGRAPH_GENERATORS_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "epigraph/graph.h"

namespace epigraph {

enum class GraphFamily {
  kComplete,
  kPath,
  kCycle,
  kStar,
  kGrid,
  kErdosRenyi,
  kRandomRegular,
};

struct GeneratorSpec {
  GraphFamily family = GraphFamily::kComplete;
  int n = 2;
  double p = 0.5;   // erdos_renyi edge probability
  int degree = 3;   // random_regular degree
  int rows = 0;     // grid; 0 picks the most square factorisation of n
  std::optional<uint64_t> seed;
  int max_retries = 1000;
};

// Throws InvalidArgument on bad parameters and ConnectivityError when a
// random family stays disconnected for max_retries draws.
Graph generate(const GeneratorSpec& spec);

// Compact textual form used on the command line:
//   complete:N  path:N  cycle:N  star:N  grid:RxC  er:N:P  regular:N:D
GeneratorSpec parse_generator_spec(std::string_view text);
std::string to_string(const GeneratorSpec& spec);

// Uniformly random connected labeled graph on n vertices (rejection over
// edge subsets with probability 1/2 each).
Graph random_connected_graph(int n, uint64_t seed);

// Calls `visit` on every connected labeled graph with vertex set 0..n-1.
// Returns the number visited. n <= 7.
long for_each_connected_graph(int n, const std::function<void(const Graph&)>& visit);

}  // namespace epigraph

#endif  // EPIGRAPH_GENERATORS_H_
