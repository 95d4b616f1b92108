#include "pathpart/dag_pp.hpp"

#include <algorithm>
#include <limits>

#include "pathpart/error.hpp"
#include "pathpart/matching.hpp"

namespace pathpart {

PathSystem solve_dagpp(const Graph& g) {
  if (!is_dag(g)) throw Error(ErrorCode::kNotADag, "dag-pp requires a directed acyclic graph");
  const auto n = g.order();
  BipartiteGraph bg{n, n, {}};
  for (auto [u, v] : g.edges()) bg.edges.push_back({u, v, 1});
  auto matching = max_cardinality_matching(bg);

  constexpr Vertex kNone = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> next(n, kNone);
  std::vector<bool> has_pred(n, false);
  for (auto ei : matching.edges) {
    next[bg.edges[ei].left] = bg.edges[ei].right;
    has_pred[bg.edges[ei].right] = true;
  }
  PathSystem out{{}, {PathKind::kUnrestricted, CoverMode::kPartition}};
  for (Vertex v = 0; v < n; ++v) {
    if (has_pred[v]) continue;
    Path p;
    for (Vertex w = v; w != kNone; w = next[w]) p.push_back(w);
    out.paths.push_back(std::move(p));
  }
  if (out.paths.size() != n - matching.size()) {
    throw Error(ErrorCode::kMalformedMatching, "path count differs from n - |M|");
  }
  return out;
}

}  // namespace pathpart
