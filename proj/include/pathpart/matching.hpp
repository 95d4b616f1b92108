#pragma once

#include <cstdint>
#include <vector>

#include "pathpart/graph.hpp"

namespace pathpart {

struct BipartiteEdge {
  std::uint32_t left = 0;
  std::uint32_t right = 0;
  std::int64_t weight = 1;
};

struct BipartiteGraph {
  std::size_t left_size = 0;
  std::size_t right_size = 0;
  std::vector<BipartiteEdge> edges;

  // Throws Error(kInvalidGraph) on out-of-range endpoints, duplicate pairs
  // or non-positive weights.
  void validate() const;
};

// Indices into BipartiteGraph::edges.
struct Matching {
  std::vector<std::size_t> edges;
  std::int64_t weight = 0;

  std::size_t size() const { return edges.size(); }
};

Matching max_cardinality_matching(const BipartiteGraph& bg);
Matching max_weight_matching(const BipartiteGraph& bg);

// Inclusion-maximal matching from a lexicographic scan of g.edges(). Arcs of
// a digraph keep their orientation.
std::vector<Edge> greedy_maximal_matching(const Graph& g);

}  // namespace pathpart
