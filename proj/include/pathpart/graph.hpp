#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace pathpart {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Simple graph on vertices 0..n-1, directed or undirected. Adjacency lists
// are sorted and duplicate-free; undirected edges appear in both lists.
// Immutable after construction.
class Graph {
 public:
  Graph() = default;

  // Both factories throw Error(kInvalidGraph) on self-loops, repeated edges
  // or endpoints >= n.
  static Graph undirected(std::size_t n, std::span<const Edge> edges);
  static Graph directed(std::size_t n, std::span<const Edge> arcs);

  std::size_t order() const { return succ_.size(); }
  std::size_t size() const { return m_; }
  bool is_directed() const { return directed_; }

  std::span<const Vertex> successors(Vertex v) const { return succ_[v]; }
  std::span<const Vertex> predecessors(Vertex v) const {
    return directed_ ? std::span<const Vertex>(pred_[v]) : std::span<const Vertex>(succ_[v]);
  }
  // Neighbours ignoring direction.
  std::span<const Vertex> neighbors(Vertex v) const {
    return directed_ ? std::span<const Vertex>(both_[v]) : std::span<const Vertex>(succ_[v]);
  }

  // Arc u->v (undirected: edge uv).
  bool has_edge(Vertex u, Vertex v) const;
  // Arc in either direction.
  bool adjacent(Vertex u, Vertex v) const { return has_edge(u, v) || (directed_ && has_edge(v, u)); }

  std::size_t out_degree(Vertex v) const { return succ_[v].size(); }
  std::size_t in_degree(Vertex v) const { return predecessors(v).size(); }
  // Undirected degree; for digraphs the number of distinct neighbours.
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  // Undirected: pairs (u,v) with u<v. Directed: every arc. Lexicographic.
  std::vector<Edge> edges() const;

  // Subgraph induced by `vertices`, renumbered so vertices[i] becomes i.
  Graph induced_subgraph(std::span<const Vertex> vertices) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.directed_ == b.directed_ && a.succ_ == b.succ_;
  }

 private:
  static Graph build(std::size_t n, std::span<const Edge> edges, bool directed);

  bool directed_ = false;
  std::size_t m_ = 0;
  std::vector<std::vector<Vertex>> succ_;
  std::vector<std::vector<Vertex>> pred_;
  std::vector<std::vector<Vertex>> both_;
};

// Hop distances; "unreachable" is a distinct state, never a large number.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), data_(n * n, kNone) {}

  std::size_t order() const { return n_; }
  std::optional<std::uint32_t> at(Vertex u, Vertex v) const {
    auto d = data_[index(u, v)];
    if (d == kNone) return std::nullopt;
    return static_cast<std::uint32_t>(d);
  }
  bool reachable(Vertex u, Vertex v) const { return data_[index(u, v)] != kNone; }
  // Throws Error(kInvalidGraph) when v is unreachable from u.
  std::uint32_t hops(Vertex u, Vertex v) const;
  void set(Vertex u, Vertex v, std::uint32_t d) { data_[index(u, v)] = static_cast<std::int32_t>(d); }

  // Largest finite entry (0 for the empty or edgeless graph).
  std::uint32_t max_finite() const;

 private:
  static constexpr std::int32_t kNone = -1;
  std::size_t index(Vertex u, Vertex v) const { return static_cast<std::size_t>(u) * n_ + v; }

  std::size_t n_ = 0;
  std::vector<std::int32_t> data_;
};

std::vector<std::optional<std::uint32_t>> bfs_distances(const Graph& g, Vertex source);
DistanceMatrix all_pairs_distances(const Graph& g);

// nullopt when the digraph contains a directed cycle.
std::optional<std::vector<Vertex>> topological_order(const Graph& g);
bool is_dag(const Graph& g);

struct Degeneracy {
  std::uint32_t value = 0;
  std::vector<Vertex> elimination_order;
};
// Repeated min-degree removal. Directed inputs use the underlying graph.
Degeneracy degeneracy(const Graph& g);

// Proper 2-colouring (colours 0/1, BFS from the lowest vertex of each
// component gets 0), or nullopt on an odd cycle. Direction is ignored.
std::optional<std::vector<std::uint8_t>> bipartition(const Graph& g);

Graph underlying_undirected(const Graph& g);

// Weakly connected components, each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

}  // namespace pathpart
