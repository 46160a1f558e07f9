#include "epigraph/graph_io.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "epigraph/error.h"

namespace epigraph {
namespace {

// Splits a line into whitespace-separated integer fields.
std::vector<long> parse_ints(std::string_view line, int line_no) {
  std::vector<long> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
    if (ec != std::errc() || ptr != line.data() + j) {
      throw ParseError("line " + std::to_string(line_no) + ": expected integer, got '" +
                       std::string(line.substr(i, j - i)) + "'");
    }
    out.push_back(value);
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_graph(std::string_view text, Connectivity mode) {
  bool have_header = false;
  long n = 0;
  long m = 0;
  std::vector<Edge> edges;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.front() == '#') continue;
    std::vector<long> fields = parse_ints(line, line_no);
    if (fields.empty()) continue;
    if (fields.size() != 2) {
      throw ParseError("line " + std::to_string(line_no) + ": expected two fields");
    }
    if (!have_header) {
      n = fields[0];
      m = fields[1];
      if (n < 1 || n > kMaxVertices) {
        throw ParseError("header: vertex count must be in [1, 64]");
      }
      if (m < 0 || m > n * (n - 1) / 2) throw ParseError("header: bad edge count");
      have_header = true;
      continue;
    }
    const long u = fields[0];
    const long v = fields[1];
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw ParseError("line " + std::to_string(line_no) + ": vertex id out of range");
    }
    if (u == v) throw ParseError("line " + std::to_string(line_no) + ": self-loop");
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  if (!have_header) throw ParseError("missing header line");
  if (static_cast<long>(edges.size()) != m) {
    throw ParseError("header declares " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  }
  try {
    return Graph::FromEdges(static_cast<int>(n), edges, mode);
  } catch (const ConnectivityError&) {
    throw;
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

std::string write_graph(const Graph& g) {
  std::string out = std::to_string(g.n()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

Graph read_graph_file(const std::filesystem::path& path, Connectivity mode) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str(), mode);
}

void write_graph_file(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  out << write_graph(g);
}

}  // namespace epigraph
