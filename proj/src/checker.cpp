#include "pathpart/checker.hpp"

#include <algorithm>
#include <set>

namespace pathpart {

std::string_view to_string(PathKind kind) {
  switch (kind) {
    case PathKind::kUnrestricted: return "pp";
    case PathKind::kInduced: return "ipp";
    case PathKind::kShortest: return "spp";
  }
  return "?";
}

std::string_view to_string(CoverMode mode) {
  switch (mode) {
    case CoverMode::kPartition: return "partition";
    case CoverMode::kCover: return "cover";
    case CoverMode::kEdgeDisjointCover: return "ed-cover";
  }
  return "?";
}

std::string_view to_string(FailureReason reason) {
  switch (reason) {
    case FailureReason::kNotAPath: return "NOT_A_PATH";
    case FailureReason::kNotInduced: return "NOT_INDUCED";
    case FailureReason::kNotShortest: return "NOT_SHORTEST";
    case FailureReason::kVertexReused: return "VERTEX_REUSED";
    case FailureReason::kEdgeReused: return "EDGE_REUSED";
    case FailureReason::kUncoveredVertex: return "UNCOVERED_VERTEX";
  }
  return "?";
}

bool Verdict::has(FailureReason reason) const {
  return std::any_of(failures.begin(), failures.end(),
                     [reason](const Failure& f) { return f.reason == reason; });
}

bool is_path(const Graph& g, std::span<const Vertex> seq) {
  if (seq.empty()) return false;
  std::vector<bool> seen(g.order(), false);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    Vertex v = seq[i];
    if (v >= g.order() || seen[v]) return false;
    seen[v] = true;
    if (i > 0 && !g.has_edge(seq[i - 1], v)) return false;
  }
  return true;
}

bool is_induced_path(const Graph& g, std::span<const Vertex> seq) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 2; j < seq.size(); ++j) {
      if (g.adjacent(seq[i], seq[j])) return false;
    }
  }
  return true;
}

bool is_shortest_path(const Graph&, const DistanceMatrix& dist, std::span<const Vertex> seq) {
  auto d = dist.at(seq.front(), seq.back());
  return d && *d + 1 == seq.size();
}

bool satisfies_kind(const Graph& g, const DistanceMatrix& dist, std::span<const Vertex> seq, PathKind kind) {
  if (!is_path(g, seq)) return false;
  switch (kind) {
    case PathKind::kUnrestricted: return true;
    case PathKind::kInduced: return is_induced_path(g, seq);
    case PathKind::kShortest: return is_shortest_path(g, dist, seq);
  }
  return false;
}

Verdict verify(const Graph& g, const PathSystem& system) {
  if (system.variant.kind != PathKind::kShortest) return verify(g, DistanceMatrix(0), system);
  return verify(g, all_pairs_distances(g), system);
}

Verdict verify(const Graph& g, const DistanceMatrix& dist, const PathSystem& system) {
  Verdict verdict;
  const auto n = g.order();
  std::vector<std::size_t> uses(n, 0);
  std::set<Edge> used_edges;
  const auto mode = system.variant.mode;
  for (std::size_t i = 0; i < system.paths.size(); ++i) {
    const auto& p = system.paths[i];
    if (!is_path(g, p)) {
      verdict.failures.push_back({i, std::nullopt, FailureReason::kNotAPath});
    } else if (system.variant.kind == PathKind::kInduced && !is_induced_path(g, p)) {
      verdict.failures.push_back({i, std::nullopt, FailureReason::kNotInduced});
    } else if (system.variant.kind == PathKind::kShortest && !is_shortest_path(g, dist, p)) {
      verdict.failures.push_back({i, std::nullopt, FailureReason::kNotShortest});
    }
    for (Vertex v : p) {
      if (v >= n) continue;
      if (++uses[v] == 2 && mode == CoverMode::kPartition) {
        verdict.failures.push_back({i, v, FailureReason::kVertexReused});
      }
    }
    if (mode == CoverMode::kEdgeDisjointCover) {
      for (std::size_t j = 1; j < p.size(); ++j) {
        Edge e{p[j - 1], p[j]};
        if (!g.is_directed() && e.first > e.second) std::swap(e.first, e.second);
        if (!used_edges.insert(e).second) {
          verdict.failures.push_back({i, std::nullopt, FailureReason::kEdgeReused});
        }
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (uses[v] == 0) verdict.failures.push_back({std::nullopt, v, FailureReason::kUncoveredVertex});
  }
  return verdict;
}

}  // namespace pathpart
