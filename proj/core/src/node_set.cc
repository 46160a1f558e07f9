#include "epigraph/node_set.h"

#include <cctype>
#include <charconv>
#include <string>

#include "epigraph/error.h"

namespace epigraph {

std::string to_string(NodeSet set) {
  std::string out = "[";
  bool first = true;
  for (int v : set) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  out += ']';
  return out;
}

NodeSet parse_node_set(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::string_view body = trim(text);
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw ParseError("unterminated bag: " + std::string(text));
    body = trim(body.substr(1, body.size() - 2));
  }
  NodeSet out;
  if (body.empty()) return out;
  while (true) {
    size_t comma = body.find(',');
    std::string_view item = trim(body.substr(0, comma));
    int v = -1;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size() || item.empty()) {
      throw ParseError("bad vertex id '" + std::string(item) + "'");
    }
    if (v < 0 || v >= kMaxVertices) {
      throw ParseError("vertex id out of range: " + std::to_string(v));
    }
    out = out.with(v);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return out;
}

std::vector<int> to_vector(NodeSet set) { return {set.begin(), set.end()}; }

}  // namespace epigraph
