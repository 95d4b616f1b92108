#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "pathpart/graph.hpp"

namespace pathpart {

enum class PathKind { kUnrestricted, kInduced, kShortest };
enum class CoverMode { kPartition, kCover, kEdgeDisjointCover };

struct Variant {
  PathKind kind = PathKind::kUnrestricted;
  CoverMode mode = CoverMode::kPartition;
  friend bool operator==(const Variant&, const Variant&) = default;
};

std::string_view to_string(PathKind kind);
std::string_view to_string(CoverMode mode);

using Path = std::vector<Vertex>;

struct PathSystem {
  std::vector<Path> paths;
  Variant variant;

  std::size_t size() const { return paths.size(); }
};

enum class FailureReason {
  kNotAPath,
  kNotInduced,
  kNotShortest,
  kVertexReused,
  kEdgeReused,
  kUncoveredVertex,
};

std::string_view to_string(FailureReason reason);

struct Failure {
  std::optional<std::size_t> path_index;
  std::optional<Vertex> vertex;
  FailureReason reason;
};

struct Verdict {
  std::vector<Failure> failures;

  bool valid() const { return failures.empty(); }
  bool has(FailureReason reason) const;
};

bool is_path(const Graph& g, std::span<const Vertex> seq);
// Assumes is_path. Digraphs: no arc in either direction between
// non-consecutive vertices; consecutive pairs may also carry the back arc.
bool is_induced_path(const Graph& g, std::span<const Vertex> seq);
// Assumes is_path.
bool is_shortest_path(const Graph& g, const DistanceMatrix& dist, std::span<const Vertex> seq);
bool satisfies_kind(const Graph& g, const DistanceMatrix& dist, std::span<const Vertex> seq, PathKind kind);

Verdict verify(const Graph& g, const PathSystem& system);
Verdict verify(const Graph& g, const DistanceMatrix& dist, const PathSystem& system);

}  // namespace pathpart

namespace pathpart {

// Outcome of a decision query "at most k paths?". witness is set on YES.
struct Decision {
  bool yes = false;
  std::optional<PathSystem> witness;
};

}  // namespace pathpart
