#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pathpart/checker.hpp"
#include "pathpart/graph.hpp"

namespace pathpart {

// Elements are numbered 0..p-1 on each side; a triple is (x, y, z).
struct ThreeDmInstance {
  std::uint32_t p = 0;
  std::vector<std::array<std::uint32_t, 3>> triples;
};

// Throws Error(kMalformedInstance) on out-of-range or repeated triples,
// an element occurring more than three times, or p == 0.
void validate(const ThreeDmInstance& inst);

// Brute-force 3-DM: is there a set of p triples covering every element once?
bool has_perfect_matching(const ThreeDmInstance& inst);

enum class Orientation { kClockwise, kCounterClockwise };
enum class ReductionKind { kThreeDm, kClique, kFourUipp };

struct ReductionOutput {
  ReductionKind kind = ReductionKind::kThreeDm;
  Graph graph;
  std::size_t k_target = 0;
  Variant variant;
  std::vector<std::string> labels;
  // Clique reduction only: source graph and clique size.
  std::optional<Graph> base;
  std::size_t clique_k = 0;
  // 3-DM: p and q. Four-UIPP: order of the source graph in base_order.
  std::size_t base_order = 0;
  std::size_t triple_count = 0;

  // Vertex with the given label, if any.
  std::optional<Vertex> find(const std::string& label) const;
};

// kind must be kShortest or kInduced. An empty orientation vector means
// clockwise for every triple; otherwise one entry per triple.
ReductionOutput gen_3dm_to_dagspp(const ThreeDmInstance& inst,
                                  std::vector<Orientation> orientation = {},
                                  PathKind kind = PathKind::kShortest);

// Throws Error(kBadK) unless 2 <= k <= n; Error(kInvalidGraph) for digraphs.
ReductionOutput gen_clique_to_dagspp(const Graph& g, std::size_t k);

// g must be bipartite (Error(kNotBipartite)) with order divisible by four
// and maximum degree at most three (Error(kBadOrder)).
ReductionOutput gen_4uipp_to_uspp(const Graph& g);

struct ClaimCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ReductionReport {
  std::vector<ClaimCheck> checks;

  bool all_passed() const;
};

ReductionReport verify_reduction(const ReductionOutput& out);

}  // namespace pathpart
