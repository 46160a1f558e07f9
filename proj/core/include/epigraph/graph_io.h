#ifndef EPIGRAPH_GRAPH_IO_H_
#define EPIGRAPH_GRAPH_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "epigraph/graph.h"

namespace epigraph {

// Text format:
//   n m
//   u v        (m lines, 0 <= u < v < n)
// Lines starting with '#' are comments. Blank lines are ignored.
Graph parse_graph(std::string_view text,
                  Connectivity mode = Connectivity::kRequire);

// Emits the canonical form: header, then edges sorted with u < v, LF endings.
std::string write_graph(const Graph& g);

Graph read_graph_file(const std::filesystem::path& path,
                      Connectivity mode = Connectivity::kRequire);
void write_graph_file(const std::filesystem::path& path, const Graph& g);

}  // namespace epigraph

#endif  // EPIGRAPH_GRAPH_IO_H_
