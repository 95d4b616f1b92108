#include "pathpart/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "pathpart/error.hpp"

namespace pathpart {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": " + what);
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string text;
  std::size_t line_no = 0;
  bool have_header = false, directed = false;
  std::size_t n = 0, m = 0;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (std::getline(in, text)) {
    ++line_no;
    std::istringstream ls(text);
    std::string tag;
    if (!(ls >> tag) || tag[0] == 'c') continue;
    if (tag == "p") {
      if (have_header) fail(line_no, "second header");
      std::string dir;
      long long nn = -1, mm = -1;
      if (!(ls >> dir >> nn >> mm) || nn < 0 || mm < 0) fail(line_no, "malformed header");
      if (dir == "directed") directed = true;
      else if (dir != "undirected") fail(line_no, "direction must be undirected or directed");
      n = static_cast<std::size_t>(nn);
      m = static_cast<std::size_t>(mm);
      have_header = true;
    } else if (tag == "e") {
      if (!have_header) fail(line_no, "edge before header");
      long long u = 0, v = 0;
      if (!(ls >> u >> v)) fail(line_no, "malformed edge");
      if (u < 1 || v < 1 || static_cast<std::size_t>(u) > n || static_cast<std::size_t>(v) > n)
        fail(line_no, "endpoint out of range");
      if (u == v) fail(line_no, "self-loop");
      Edge e{static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)};
      Edge key = directed ? e : Edge{std::min(e.first, e.second), std::max(e.first, e.second)};
      if (!seen.insert(key).second) fail(line_no, "duplicate edge");
      edges.push_back(e);
    } else {
      fail(line_no, "unknown line type '" + tag + "'");
    }
    std::string extra;
    if (ls >> extra) fail(line_no, "trailing tokens");
  }
  if (!have_header) fail(line_no, "missing header");
  if (edges.size() != m) fail(line_no, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  return directed ? Graph::directed(n, edges) : Graph::undirected(n, edges);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "p " << (g.is_directed() ? "directed" : "undirected") << ' ' << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

void write_labels(std::ostream& out, const std::vector<std::string>& labels) {
  for (std::size_t i = 0; i < labels.size(); ++i) out << i + 1 << '\t' << labels[i] << '\n';
}

}  // namespace pathpart
