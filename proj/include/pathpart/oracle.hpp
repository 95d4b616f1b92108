#pragma once

#include <cstdint>
#include <vector>

#include "pathpart/checker.hpp"
#include "pathpart/graph.hpp"

namespace pathpart {

struct OracleBudget {
  // 0 selects the per-mode default (14 for partition, 10 for cover modes).
  std::size_t max_vertices = 0;
  std::uint64_t node_limit = 50'000'000;
  bool use_lower_bounds = true;
};

std::size_t default_max_vertices(CoverMode mode);

// All paths of the given kind that begin at `start`, in DFS order.
std::vector<Path> enumerate_valid_paths(const Graph& g, PathKind kind, Vertex start);

// Minimum-size system for the variant. Paths are listed in lexicographic
// order. Throws Error(kBudgetExceeded) if n exceeds the budget (hard cap 64)
// or the node limit is hit.
PathSystem solve_exact(const Graph& g, Variant variant, const OracleBudget& budget = {});

Decision decide(const Graph& g, Variant variant, std::size_t k, const OracleBudget& budget = {});

}  // namespace pathpart
