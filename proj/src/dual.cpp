#include "pathpart/vc.hpp"

#include <algorithm>

#include "pathpart/error.hpp"
#include "pathpart/matching.hpp"
#include "pathpart/nd.hpp"

namespace pathpart {

DualResult solve_dual(const Graph& g, std::size_t k_dual, Variant variant) {
  if (variant.mode != CoverMode::kPartition) {
    throw Error(ErrorCode::kUnsupportedInput, "dual parameterization is defined for partitions");
  }
  if (g.is_directed() && variant.kind == PathKind::kUnrestricted) {
    throw Error(ErrorCode::kUnsupportedInput, "dual-parameter unrestricted partition of digraphs is open");
  }
  const auto n = g.order();
  if (k_dual > n) throw Error(ErrorCode::kBadK, "dual parameter exceeds the vertex count");
  const auto budget = n - k_dual;

  auto matching = greedy_maximal_matching(g);
  if (matching.size() >= k_dual) {
    PathSystem witness{{}, variant};
    std::vector<bool> used(n, false);
    for (std::size_t i = 0; i < k_dual; ++i) {
      auto [u, v] = matching[i];
      witness.paths.push_back({u, v});
      used[u] = used[v] = true;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (!used[v]) witness.paths.push_back({v});
    }
    std::sort(witness.paths.begin(), witness.paths.end());
    return {{true, std::move(witness)}, true};
  }

  // Every maximal matching is small here, so vc <= 2 * |matching| < 2 * k_dual.
  PathSystem best;
  if (variant.kind == PathKind::kUnrestricted) {
    best = solve_upp_vc(g);
  } else if (g.is_directed()) {
    best = solve_nd(g, variant);
  } else {
    auto kernel = kernelize_vc(g);
    auto reduced = solve_nd(kernel.reduced, variant);
    best.variant = variant;
    std::vector<bool> kept(n, false);
    for (Vertex v : kernel.kept) kept[v] = true;
    for (const auto& p : reduced.paths) {
      Path q;
      for (Vertex v : p) q.push_back(kernel.kept[v]);
      best.paths.push_back(std::move(q));
    }
    for (Vertex v = 0; v < n; ++v) {
      if (!kept[v]) best.paths.push_back({v});
    }
    std::sort(best.paths.begin(), best.paths.end());
  }
  best.variant = variant;
  if (best.size() <= budget) return {{true, std::move(best)}, false};
  return {{false, std::nullopt}, false};
}

}  // namespace pathpart
