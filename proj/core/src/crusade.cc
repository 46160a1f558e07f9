#include "epigraph/crusade.h"

#include <algorithm>

#include "epigraph/error.h"

namespace epigraph {

int width(const Graph& g, std::span<const NodeSet> bags) {
  if (bags.empty()) throw InvalidArgument("a crusade has at least one bag");
  int best = 0;
  for (size_t i = 0; i < bags.size(); ++i) {
    if (!g.contains(bags[i])) {
      throw InvalidArgument("bag " + to_string(bags[i]) + " has vertices outside the graph");
    }
    if (i == 0) continue;
    if ((bags[i - 1] - bags[i]).size() > 1) {
      throw InvalidArgument("step " + std::to_string(i - 1) + " removes more than one vertex: " +
                            to_string(bags[i - 1]) + " -> " + to_string(bags[i]));
    }
    best = std::max(best, cut(g, bags[i]));
  }
  return best;
}

Crusade make_crusade(const Graph& g, std::vector<NodeSet> bags) {
  Crusade c;
  c.width = width(g, bags);
  c.bags = std::move(bags);
  return c;
}

std::string serialize_crusade(const Crusade& c) {
  std::string out;
  for (NodeSet bag : c.bags) {
    out += to_string(bag);
    out += '\n';
  }
  return out;
}

std::vector<NodeSet> parse_crusade_bags(std::string_view text) {
  std::vector<NodeSet> bags;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    bags.push_back(parse_node_set(line));
  }
  return bags;
}

}  // namespace epigraph
