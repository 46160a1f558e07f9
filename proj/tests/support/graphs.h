#ifndef EPIGRAPH_TESTS_GRAPHS_H_
#define EPIGRAPH_TESTS_GRAPHS_H_

#include <string_view>
#include <vector>

#include "epigraph/generators.h"
#include "epigraph/graph.h"

namespace epigraph::testing {

inline Graph make(std::string_view spec) { return generate(parse_generator_spec(spec)); }

inline Graph from_edges(int n, std::vector<Edge> edges,
                        Connectivity mode = Connectivity::kRequire) {
  return Graph::FromEdges(n, edges, mode);
}

}  // namespace epigraph::testing

#endif  // EPIGRAPH_TESTS_GRAPHS_H_
