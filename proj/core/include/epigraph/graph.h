#ifndef EPIGRAPH_GRAPH_H_
#define EPIGRAPH_GRAPH_H_

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "epigraph/node_set.h"

namespace epigraph {

struct Edge {
  int u = 0;
  int v = 0;
  auto operator<=>(const Edge&) const = default;
};

enum class Connectivity {
  kRequire,  // reject disconnected input
  kWaive,    // accept it; resilience queries will still refuse
};

// Immutable undirected simple graph on vertices 0..n-1, n <= 64.
class Graph {
 public:
  // Validates simplicity (no self loops, no duplicates, ids in range) and,
  // unless waived, connectivity. Edges may be given in either orientation;
  // they are stored as (min, max) in sorted order.
  static Graph FromEdges(int n, std::span<const Edge> edges,
                         Connectivity mode = Connectivity::kRequire);

  int n() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int max_degree() const { return max_degree_; }
  int degree(int v) const { return degree_[v]; }
  NodeSet neighbors(int v) const { return adjacency_[v]; }
  NodeSet vertices() const { return NodeSet::Full(n_); }
  const std::vector<Edge>& edges() const { return edges_; }
  bool connected() const { return connected_; }
  bool has_edge(int u, int v) const { return adjacency_[u].contains(v); }
  // True when every member of `set` is a vertex of this graph.
  bool contains(NodeSet set) const { return set.subset_of(vertices()); }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  Graph() = default;

  int n_ = 0;
  int max_degree_ = 0;
  bool connected_ = false;
  std::vector<Edge> edges_;
  std::array<NodeSet, kMaxVertices> adjacency_{};
  std::array<int, kMaxVertices> degree_{};
};

// Number of edges with exactly one endpoint in `a`.
inline int cut(const Graph& g, NodeSet a) {
  int total = 0;
  for (int v : a) total += (g.neighbors(v) - a).size();
  return total;
}

// Edge-list recount of cut(); independent of the adjacency masks.
int cut_recount(const Graph& g, NodeSet a);

// cut(a + v) given cut(a), for v not in a.
inline int cut_after_add(const Graph& g, NodeSet a, int cut_a, int v) {
  return cut_a + g.degree(v) - 2 * (g.neighbors(v) & a).size();
}

// cut(a - v) given cut(a), for v in a.
inline int cut_after_remove(const Graph& g, NodeSet a, int cut_a, int v) {
  return cut_a - g.degree(v) + 2 * (g.neighbors(v) & a.without(v)).size();
}

// cut() of every subset, indexed by mask. Built incrementally by peeling
// the lowest vertex. Requires n <= max_n.
std::vector<uint16_t> cut_table(const Graph& g, int max_n = 24);

// Whether the vertices 0..n-1 with the given adjacency form one component.
bool is_connected(int n, std::span<const NodeSet> adjacency);

}  // namespace epigraph

#endif  // EPIGRAPH_GRAPH_H_
