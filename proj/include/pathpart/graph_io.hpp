#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pathpart/graph.hpp"

namespace pathpart {

// Text format: "p <undirected|directed> <n> <m>", then exactly m lines
// "e <u> <v>" with 1-indexed endpoints. Lines starting with 'c' and blank
// lines are ignored. Throws Error(kParseError) with a line number.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);

void write_graph(std::ostream& out, const Graph& g);

// One "vertex-id<TAB>label" line per vertex, 1-indexed.
void write_labels(std::ostream& out, const std::vector<std::string>& labels);

}  // namespace pathpart
