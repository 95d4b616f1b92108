#include "pathpart/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "pathpart/error.hpp"

namespace pathpart {

Graph Graph::undirected(std::size_t n, std::span<const Edge> edges) { return build(n, edges, false); }

Graph Graph::directed(std::size_t n, std::span<const Edge> arcs) { return build(n, arcs, true); }

Graph Graph::build(std::size_t n, std::span<const Edge> edges, bool directed) {
  Graph g;
  g.directed_ = directed;
  g.succ_.assign(n, {});
  if (directed) {
    g.pred_.assign(n, {});
    g.both_.assign(n, {});
  }
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(ErrorCode::kInvalidGraph,
                  "edge endpoint out of range: " + std::to_string(u) + "," + std::to_string(v));
    }
    if (u == v) throw Error(ErrorCode::kInvalidGraph, "self-loop at " + std::to_string(u));
    g.succ_[u].push_back(v);
    if (directed) {
      g.pred_[v].push_back(u);
      g.both_[u].push_back(v);
      g.both_[v].push_back(u);
    } else {
      g.succ_[v].push_back(u);
    }
  }
  auto sort_lists = [](std::vector<std::vector<Vertex>>& lists, bool dedupe) {
    for (auto& l : lists) {
      std::sort(l.begin(), l.end());
      if (dedupe) l.erase(std::unique(l.begin(), l.end()), l.end());
    }
  };
  sort_lists(g.succ_, false);
  for (std::size_t v = 0; v < n; ++v) {
    if (std::adjacent_find(g.succ_[v].begin(), g.succ_[v].end()) != g.succ_[v].end()) {
      throw Error(ErrorCode::kInvalidGraph, "repeated edge at vertex " + std::to_string(v));
    }
  }
  if (directed) {
    sort_lists(g.pred_, false);
    sort_lists(g.both_, true);
  }
  g.m_ = edges.size();
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= order() || v >= order()) return false;
  const auto& l = succ_[u];
  return std::binary_search(l.begin(), l.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : succ_[u]) {
      if (directed_ || u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::induced_subgraph(std::span<const Vertex> vertices) const {
  std::vector<std::int64_t> pos(order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) pos[vertices[i]] = static_cast<std::int64_t>(i);
  std::vector<Edge> sub;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : succ_[vertices[i]]) {
      if (pos[w] < 0) continue;
      auto j = static_cast<Vertex>(pos[w]);
      if (directed_ || i < j) sub.emplace_back(static_cast<Vertex>(i), j);
    }
  }
  return directed_ ? directed(vertices.size(), sub) : undirected(vertices.size(), sub);
}

std::uint32_t DistanceMatrix::hops(Vertex u, Vertex v) const {
  auto d = at(u, v);
  if (!d) {
    throw Error(ErrorCode::kInvalidGraph,
                "vertex " + std::to_string(v) + " unreachable from " + std::to_string(u));
  }
  return *d;
}

std::uint32_t DistanceMatrix::max_finite() const {
  std::int32_t best = 0;
  for (auto d : data_) best = std::max(best, d);
  return static_cast<std::uint32_t>(best);
}

std::vector<std::optional<std::uint32_t>> bfs_distances(const Graph& g, Vertex source) {
  std::vector<std::optional<std::uint32_t>> dist(g.order());
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.successors(u)) {
      if (!dist[w]) {
        dist[w] = *dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  DistanceMatrix m(g.order());
  for (Vertex s = 0; s < g.order(); ++s) {
    auto row = bfs_distances(g, s);
    for (Vertex t = 0; t < g.order(); ++t) {
      if (row[t]) m.set(s, t, *row[t]);
    }
  }
  return m;
}

std::optional<std::vector<Vertex>> topological_order(const Graph& g) {
  const auto n = g.order();
  std::vector<std::size_t> indeg(n);
  for (Vertex v = 0; v < n; ++v) indeg[v] = g.in_degree(v);
  if (!g.is_directed()) {
    // An undirected edge is a 2-cycle in the symmetric reading.
    if (g.size() > 0) return std::nullopt;
  }
  std::vector<Vertex> order;
  order.reserve(n);
  std::vector<Vertex> ready;
  for (Vertex v = n; v-- > 0;) {
    if (indeg[v] == 0) ready.push_back(v);
  }
  while (!ready.empty()) {
    Vertex u = ready.back();
    ready.pop_back();
    order.push_back(u);
    for (Vertex w : g.successors(u)) {
      if (--indeg[w] == 0) ready.push_back(w);
    }
  }
  if (order.size() != n) return std::nullopt;
  return order;
}

bool is_dag(const Graph& g) { return g.is_directed() && topological_order(g).has_value(); }

Degeneracy degeneracy(const Graph& g) {
  const auto n = g.order();
  std::vector<std::size_t> deg(n);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<bool> removed(n, false);
  Degeneracy out;
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = 0;
    std::size_t best_deg = SIZE_MAX;
    for (Vertex v = 0; v < n; ++v) {
      if (!removed[v] && deg[v] < best_deg) {
        best = v;
        best_deg = deg[v];
      }
    }
    removed[best] = true;
    out.elimination_order.push_back(best);
    out.value = std::max(out.value, static_cast<std::uint32_t>(best_deg));
    for (Vertex w : g.neighbors(best)) {
      if (!removed[w]) --deg[w];
    }
  }
  return out;
}

std::optional<std::vector<std::uint8_t>> bipartition(const Graph& g) {
  const auto n = g.order();
  std::vector<int> color(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (color[w] < 0) {
          color[w] = 1 - color[u];
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return std::vector<std::uint8_t>(color.begin(), color.end());
}

Graph underlying_undirected(const Graph& g) {
  if (!g.is_directed()) return g;
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex w : g.neighbors(u)) {
      if (u < w) edges.emplace_back(u, w);
    }
  }
  return Graph::undirected(g.order(), edges);
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const auto n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : g.neighbors(comp[i])) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace pathpart
