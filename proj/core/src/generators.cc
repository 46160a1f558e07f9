#include "epigraph/generators.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "epigraph/error.h"
#include "epigraph/rng.h"

namespace epigraph {
namespace {

std::vector<Edge> complete_edges(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return edges;
}

int default_rows(int n) {
  int rows = static_cast<int>(std::sqrt(static_cast<double>(n)));
  while (rows > 1 && n % rows != 0) --rows;
  return std::max(rows, 1);
}

uint64_t require_seed(const GeneratorSpec& spec) {
  if (!spec.seed) throw InvalidArgument("random graph families need a seed");
  return *spec.seed;
}

Graph erdos_renyi(const GeneratorSpec& spec) {
  if (!(spec.p > 0.0 && spec.p <= 1.0)) {
    throw InvalidArgument("erdos_renyi needs 0 < p <= 1");
  }
  Rng rng(require_seed(spec));
  for (int attempt = 0; attempt < spec.max_retries; ++attempt) {
    std::vector<Edge> edges;
    for (int u = 0; u < spec.n; ++u)
      for (int v = u + 1; v < spec.n; ++v)
        if (rng.bernoulli(spec.p)) edges.push_back({u, v});
    Graph g = Graph::FromEdges(spec.n, edges, Connectivity::kWaive);
    if (g.connected()) return g;
  }
  throw ConnectivityError("erdos_renyi: no connected draw within retry budget");
}

// Pairing model: shuffle n*d half-edges, pair neighbours, reject loops,
// multi-edges and disconnected results.
Graph random_regular(const GeneratorSpec& spec) {
  const int n = spec.n;
  const int d = spec.degree;
  if (d < 1 || d >= n) throw InvalidArgument("random_regular needs 1 <= d < n");
  if ((n * d) % 2 != 0) throw InvalidArgument("random_regular needs n*d even");
  Rng rng(require_seed(spec));
  std::vector<int> stubs(static_cast<size_t>(n) * d);
  for (int attempt = 0; attempt < spec.max_retries; ++attempt) {
    for (size_t i = 0; i < stubs.size(); ++i) stubs[i] = static_cast<int>(i) / d;
    for (size_t i = stubs.size() - 1; i > 0; --i) {
      std::swap(stubs[i], stubs[rng.below(i + 1)]);
    }
    std::vector<NodeSet> adjacency(n);
    std::vector<Edge> edges;
    bool simple = true;
    for (size_t i = 0; i < stubs.size() && simple; i += 2) {
      const int u = stubs[i];
      const int v = stubs[i + 1];
      if (u == v || adjacency[u].contains(v)) {
        simple = false;
        break;
      }
      adjacency[u] = adjacency[u].with(v);
      adjacency[v] = adjacency[v].with(u);
      edges.push_back({u, v});
    }
    if (!simple) continue;
    Graph g = Graph::FromEdges(n, edges, Connectivity::kWaive);
    if (g.connected()) return g;
  }
  throw ConnectivityError("random_regular: no simple connected draw within retry budget");
}

int parse_int(std::string_view s, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

Graph generate(const GeneratorSpec& spec) {
  const int n = spec.n;
  if (n < 2 || n > kMaxVertices) throw InvalidArgument("generator needs 2 <= n <= 64");
  std::vector<Edge> edges;
  switch (spec.family) {
    case GraphFamily::kComplete:
      edges = complete_edges(n);
      break;
    case GraphFamily::kPath:
      for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
      break;
    case GraphFamily::kCycle:
      if (n < 3) throw InvalidArgument("cycle needs n >= 3");
      for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
      edges.push_back({0, n - 1});
      break;
    case GraphFamily::kStar:
      for (int v = 1; v < n; ++v) edges.push_back({0, v});
      break;
    case GraphFamily::kGrid: {
      const int rows = spec.rows > 0 ? spec.rows : default_rows(n);
      if (n % rows != 0) throw InvalidArgument("grid rows must divide n");
      const int cols = n / rows;
      for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
          const int v = r * cols + c;
          if (c + 1 < cols) edges.push_back({v, v + 1});
          if (r + 1 < rows) edges.push_back({v, v + cols});
        }
      }
      break;
    }
    case GraphFamily::kErdosRenyi:
      return erdos_renyi(spec);
    case GraphFamily::kRandomRegular:
      return random_regular(spec);
  }
  return Graph::FromEdges(n, edges);
}

GeneratorSpec parse_generator_spec(std::string_view text) {
  std::vector<std::string_view> parts;
  size_t pos = 0;
  while (true) {
    size_t colon = text.find(':', pos);
    parts.push_back(text.substr(pos, colon == std::string_view::npos ? colon : colon - pos));
    if (colon == std::string_view::npos) break;
    pos = colon + 1;
  }
  if (parts.size() < 2) throw ParseError("generator spec needs family:params, got '" + std::string(text) + "'");
  GeneratorSpec spec;
  const std::string_view family = parts[0];
  auto expect = [&](size_t count) {
    if (parts.size() != count) throw ParseError("wrong number of fields in '" + std::string(text) + "'");
  };
  if (family == "complete" || family == "path" || family == "cycle" || family == "star") {
    expect(2);
    spec.family = family == "complete" ? GraphFamily::kComplete
                  : family == "path"   ? GraphFamily::kPath
                  : family == "cycle"  ? GraphFamily::kCycle
                                       : GraphFamily::kStar;
    spec.n = parse_int(parts[1], "vertex count");
  } else if (family == "grid") {
    expect(2);
    spec.family = GraphFamily::kGrid;
    const size_t x = parts[1].find('x');
    if (x == std::string_view::npos) {
      spec.n = parse_int(parts[1], "vertex count");
    } else {
      spec.rows = parse_int(parts[1].substr(0, x), "rows");
      spec.n = spec.rows * parse_int(parts[1].substr(x + 1), "cols");
    }
  } else if (family == "er") {
    expect(3);
    spec.family = GraphFamily::kErdosRenyi;
    spec.n = parse_int(parts[1], "vertex count");
    const std::string p(parts[2]);
    char* end = nullptr;
    spec.p = std::strtod(p.c_str(), &end);
    if (end != p.c_str() + p.size()) throw ParseError("bad probability '" + p + "'");
  } else if (family == "regular") {
    expect(3);
    spec.family = GraphFamily::kRandomRegular;
    spec.n = parse_int(parts[1], "vertex count");
    spec.degree = parse_int(parts[2], "degree");
  } else {
    throw ParseError("unknown graph family '" + std::string(family) + "'");
  }
  return spec;
}

std::string to_string(const GeneratorSpec& spec) {
  const std::string n = std::to_string(spec.n);
  switch (spec.family) {
    case GraphFamily::kComplete: return "complete:" + n;
    case GraphFamily::kPath: return "path:" + n;
    case GraphFamily::kCycle: return "cycle:" + n;
    case GraphFamily::kStar: return "star:" + n;
    case GraphFamily::kGrid: {
      const int rows = spec.rows > 0 ? spec.rows : default_rows(spec.n);
      return "grid:" + std::to_string(rows) + "x" + std::to_string(spec.n / rows);
    }
    case GraphFamily::kErdosRenyi: {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", spec.p);
      return "er:" + n + ":" + buf;
    }
    case GraphFamily::kRandomRegular:
      return "regular:" + n + ":" + std::to_string(spec.degree);
  }
  return n;
}

Graph random_connected_graph(int n, uint64_t seed) {
  if (n < 1 || n > kMaxVertices) throw InvalidArgument("random_connected_graph: bad n");
  Rng rng(seed);
  while (true) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.next() >> 63) edges.push_back({u, v});
    Graph g = Graph::FromEdges(n, edges, Connectivity::kWaive);
    if (g.connected()) return g;
  }
}

long for_each_connected_graph(int n, const std::function<void(const Graph&)>& visit) {
  if (n < 1 || n > 7) throw InvalidArgument("exhaustive enumeration supports 1 <= n <= 7");
  const std::vector<Edge> pairs = complete_edges(n);
  const uint64_t count = uint64_t{1} << pairs.size();
  long visited = 0;
  std::vector<NodeSet> adjacency(n);
  std::vector<Edge> edges;
  for (uint64_t m = 0; m < count; ++m) {
    std::fill(adjacency.begin(), adjacency.end(), NodeSet());
    edges.clear();
    for (size_t i = 0; i < pairs.size(); ++i) {
      if ((m >> i) & 1) {
        const Edge& e = pairs[i];
        adjacency[e.u] = adjacency[e.u].with(e.v);
        adjacency[e.v] = adjacency[e.v].with(e.u);
        edges.push_back(e);
      }
    }
    if (!is_connected(n, adjacency)) continue;
    visit(Graph::FromEdges(n, edges));
    ++visited;
  }
  return visited;
}

}  // namespace epigraph
