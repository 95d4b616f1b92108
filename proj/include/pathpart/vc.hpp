#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "pathpart/checker.hpp"
#include "pathpart/graph.hpp"
#include "pathpart/matching.hpp"

namespace pathpart {

// Minimum vertex cover (sorted). Digraphs use the underlying graph.
std::vector<Vertex> min_vertex_cover(const Graph& g);

struct Kernel {
  Graph reduced;
  std::size_t forced_singletons = 0;
  std::vector<Vertex> kept;  // reduced vertex i is original kept[i]
};

// Drops independent-set vertices of an over-full type (more than 2*vc
// members) one at a time; each drop is a forced singleton path.
Kernel kernelize_vc(const Graph& g);

enum class AuxRule {
  kBridge,  // weight 2: x between v_i and v_{i+1}
  kDummy,   // v_i - u_i: v_i and v_{i+1} joined directly
  kTail,    // weight 1: x ends the path at v_i
  kHead,    // weight 1 from a primed vertex: x starts the path
};

// Auxiliary bipartite graph for one permutation and bit vector.
// Left ids: 0..r-1 are the cover vertices in permutation order, then the
// primed copies. Right ids: 0..|I|-1 are the independent vertices (sorted),
// then the dummies.
struct AuxMatchGraph {
  BipartiteGraph graph;
  std::vector<Vertex> order;          // v_pi(1..r), original ids
  std::vector<std::uint8_t> bits;     // b_1..b_{r-1}
  std::vector<Vertex> independent;    // right id -> vertex, for real vertices
  std::vector<std::size_t> prime_of;  // position -> left id, or npos
  std::vector<std::size_t> dummy_of;  // position -> right id, or npos
  std::vector<AuxRule> rule;          // per edge

  bool is_dummy(std::uint32_t right) const { return right >= independent.size(); }
};

AuxMatchGraph build_aux_graph(const Graph& g, std::span<const Vertex> order,
                              std::span<const std::uint8_t> bits);

// The two redundancy tests: a path could have been joined at a 0-bit, or
// the last block could be glued in front of the first one.
bool passes_skip_tests(const AuxMatchGraph& aux, const Matching& m);

// Walks the blocks of the permutation. Throws Error(kMalformedMatching)
// when a 1-bit position is left unmatched.
PathSystem reconstruct_pp_from_matching(const Graph& g, const AuxMatchGraph& aux, const Matching& m);

// Max-weight matching that, among maximum-weight ones, matches as many
// cover vertices sitting on 1-bits as possible.
Matching aux_matching(const AuxMatchGraph& aux);

struct UppCandidate {
  std::vector<Vertex> order;
  std::vector<std::uint8_t> bits;
  std::int64_t matching_weight = 0;
  std::size_t path_count = 0;
  std::size_t order_size = 0;  // |V| of the component
};

struct UppVcOptions {
  bool prune = true;
  unsigned threads = 1;
  // Called (serialised) for each candidate that passes the skip tests.
  std::function<void(const UppCandidate&)> on_candidate;
};

PathSystem solve_upp_vc(const Graph& g, const UppVcOptions& options = {});

struct DualResult {
  Decision decision;
  bool via_matching = false;
};

// "At most n - k_dual paths?" for mode PARTITION. Directed UNRESTRICTED and
// non-partition modes throw Error(kUnsupportedInput); k_dual > n throws
// Error(kBadK).
DualResult solve_dual(const Graph& g, std::size_t k_dual, Variant variant);

}  // namespace pathpart
