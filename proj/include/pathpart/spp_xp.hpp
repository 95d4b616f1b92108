#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "pathpart/checker.hpp"
#include "pathpart/graph.hpp"

namespace pathpart {

struct TerminalPair {
  Vertex source = 0;
  Vertex target = 0;
  friend auto operator<=>(const TerminalPair&, const TerminalPair&) = default;
};

using TerminalSet = std::vector<TerminalPair>;

struct XpOptions {
  unsigned threads = 1;
  // When false, every endpoint-disjoint pair set is tried and a placement is
  // accepted only if it spans V.
  bool require_distance_identity = true;
};

// Calls visit for every canonical set of k pairs with pairwise distinct
// endpoints and finite distances (plus, if required, sum of d+1 equal to n).
// Undirected pairs are normalised source <= target; sets are sorted.
// Enumeration stops when visit returns false.
void enumerate_terminal_sets(const Graph& g, const DistanceMatrix& dist, std::size_t k,
                             const std::function<bool(const TerminalSet&)>& visit,
                             bool require_distance_identity = true);

// Vertex-disjoint shortest paths joining each pair, found by backtracking
// inside the shortest-path DAGs; nullopt when no placement exists.
std::optional<std::vector<Path>> disjoint_shortest_paths(const Graph& g, const DistanceMatrix& dist,
                                                         const TerminalSet& terminals);

// Shortest path partition with at most k paths. Undirected graphs and DAGs
// only; other digraphs throw Error(kUnsupportedInput).
Decision solve_spp_xp(const Graph& g, std::size_t k, const XpOptions& options = {});

}  // namespace pathpart
