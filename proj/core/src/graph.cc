#include "epigraph/graph.h"

#include <algorithm>
#include <string>

#include "epigraph/error.h"

namespace epigraph {

Graph Graph::FromEdges(int n, std::span<const Edge> edges, Connectivity mode) {
  if (n < 1 || n > kMaxVertices) {
    throw InvalidArgument("vertex count must be in [1, 64], got " + std::to_string(n));
  }
  Graph g;
  g.n_ = n;
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw InvalidArgument("vertex id out of range in edge " + std::to_string(e.u) + " " +
                            std::to_string(e.v));
    }
    if (e.u == e.v) throw InvalidArgument("self-loop at vertex " + std::to_string(e.u));
    Edge norm{std::min(e.u, e.v), std::max(e.u, e.v)};
    if (g.adjacency_[norm.u].contains(norm.v)) {
      throw InvalidArgument("duplicate edge " + std::to_string(norm.u) + " " +
                            std::to_string(norm.v));
    }
    g.adjacency_[norm.u] = g.adjacency_[norm.u].with(norm.v);
    g.adjacency_[norm.v] = g.adjacency_[norm.v].with(norm.u);
    g.edges_.push_back(norm);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  for (int v = 0; v < n; ++v) {
    g.degree_[v] = g.adjacency_[v].size();
    g.max_degree_ = std::max(g.max_degree_, g.degree_[v]);
  }
  g.connected_ = is_connected(n, std::span(g.adjacency_.data(), n));
  if (!g.connected_ && mode == Connectivity::kRequire) {
    throw ConnectivityError("graph is disconnected");
  }
  return g;
}

int cut_recount(const Graph& g, NodeSet a) {
  int total = 0;
  for (const Edge& e : g.edges()) {
    if (a.contains(e.u) != a.contains(e.v)) ++total;
  }
  return total;
}

std::vector<uint16_t> cut_table(const Graph& g, int max_n) {
  const int n = g.n();
  if (n > max_n) {
    throw SizeCapExceeded("cut table needs n <= " + std::to_string(max_n) + ", got " +
                          std::to_string(n));
  }
  const uint64_t count = uint64_t{1} << n;
  std::vector<uint16_t> table(count, 0);
  for (uint64_t m = 1; m < count; ++m) {
    const int v = std::countr_zero(m);
    const NodeSet rest = NodeSet::FromMask(m & (m - 1));
    table[m] = static_cast<uint16_t>(cut_after_add(g, rest, table[rest.mask()], v));
  }
  return table;
}

bool is_connected(int n, std::span<const NodeSet> adjacency) {
  if (n <= 1) return true;
  NodeSet seen = NodeSet::Singleton(0);
  NodeSet frontier = seen;
  while (!frontier.empty()) {
    NodeSet next;
    for (int v : frontier) next = next | adjacency[v];
    frontier = next - seen;
    seen = seen | next;
  }
  return seen == NodeSet::Full(n);
}

}  // namespace epigraph
