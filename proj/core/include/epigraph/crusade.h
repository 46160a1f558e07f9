#ifndef EPIGRAPH_CRUSADE_H_
#define EPIGRAPH_CRUSADE_H_

#include <string>
#include <string_view>
#include <vector>

#include "epigraph/graph.h"
#include "epigraph/node_set.h"

namespace epigraph {

// A sequence of bags where each step removes at most one vertex (and may
// add any number). `width` is the largest cut over bags[1..], so the
// starting bag never counts.
struct Crusade {
  std::vector<NodeSet> bags;
  int width = 0;
};

// Largest cut over bags 1..k; 0 for a single-bag sequence. Throws
// InvalidArgument if some step drops two or more vertices, if the
// sequence is empty, or if a bag is not over g's vertices.
int width(const Graph& g, std::span<const NodeSet> bags);
inline int width(const Graph& g, const Crusade& c) { return width(g, c.bags); }

// Builds a Crusade with its width filled in (validating as width() does).
Crusade make_crusade(const Graph& g, std::vector<NodeSet> bags);

// One bag per line, each as a sorted id list in brackets: "[0,1,2]".
std::string serialize_crusade(const Crusade& c);
std::vector<NodeSet> parse_crusade_bags(std::string_view text);

}  // namespace epigraph

#endif  // EPIGRAPH_CRUSADE_H_
