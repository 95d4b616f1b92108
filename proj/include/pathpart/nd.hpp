#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pathpart/checker.hpp"
#include "pathpart/graph.hpp"
#include "pathpart/ilp.hpp"

namespace pathpart {

enum class ClassKind { kClique, kIndependent };

struct NdClassification {
  bool directed = false;
  // Classes ordered by smallest member; members sorted.
  std::vector<std::vector<Vertex>> classes;
  // Singleton classes are reported as independent. For digraphs kClique
  // means a bidirected clique.
  std::vector<ClassKind> kinds;
  std::vector<std::uint32_t> class_of;
  // quotient[i][j] (i != j): every vertex of class i has an arc (edge) to
  // every vertex of class j. Types make this all-or-nothing.
  std::vector<std::vector<bool>> quotient;

  std::size_t size() const { return classes.size(); }
  // |E_ij|: edges (arcs) between classes i and j; i == j counts the edges
  // inside a clique class. Undirected callers may pass i, j in any order.
  std::uint64_t edge_budget(std::uint32_t i, std::uint32_t j) const;
};

// Type classes of g (for digraphs, of the underlying undirected graph).
NdClassification nd_classes(const Graph& g);
// Classes of the directed relation; undirected input is treated as
// bidirected, which gives the same classes as nd_classes.
NdClassification dnd_classes(const Graph& g);

struct ClassPathVector {
  PathKind kind = PathKind::kShortest;
  std::vector<std::uint32_t> sequence;  // class visiting order
  std::vector<std::uint32_t> counts;    // p^j
  // t_{p,i,j} flattened as i * d + j; undirected pairs stored with i <= j.
  std::vector<std::uint32_t> edge_counts;

  std::size_t length() const { return sequence.empty() ? 0 : sequence.size() - 1; }
};

// Realizable class sequences of the given kind, deduplicated by count
// vector (and by edge-count vector too when with_edge_counts is set).
std::vector<ClassPathVector> enumerate_path_classes(const Graph& g, const NdClassification& cls,
                                                    PathKind kind, bool with_edge_counts = false);

// Rows: one per class, then (edge-disjoint mode) one per class pair that
// some vector uses. Variables follow the order of `vectors`.
IlpInstance build_ilp(const NdClassification& cls, const std::vector<ClassPathVector>& vectors,
                      Variant variant);

// Concrete paths for a feasible assignment. Throws
// Error(kReconstructionFailed) when no edge-disjoint realization exists.
PathSystem reconstruct(const Graph& g, const NdClassification& cls,
                       const std::vector<std::int64_t>& assignment,
                       const std::vector<ClassPathVector>& vectors, Variant variant);

// Optimum for kind SHORTEST or INDUCED, solved per weakly connected
// component. UNRESTRICTED throws Error(kUnsupportedInput).
PathSystem solve_nd(const Graph& g, Variant variant);

// Per-component ILP instances as solve_nd would build them.
std::vector<IlpInstance> nd_ilps(const Graph& g, Variant variant);

}  // namespace pathpart
