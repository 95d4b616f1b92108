#include "pathpart/matching.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>

#include "pathpart/error.hpp"

namespace pathpart {

void BipartiteGraph::validate() const {
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (const auto& e : edges) {
    if (e.left >= left_size || e.right >= right_size) {
      throw Error(ErrorCode::kInvalidGraph, "bipartite edge endpoint out of range");
    }
    if (e.weight <= 0) throw Error(ErrorCode::kInvalidGraph, "bipartite edge weight must be positive");
    if (!seen.insert({e.left, e.right}).second) {
      throw Error(ErrorCode::kInvalidGraph, "duplicate bipartite edge");
    }
  }
}

Matching max_cardinality_matching(const BipartiteGraph& bg) {
  bg.validate();
  constexpr std::uint32_t kFree = std::numeric_limits<std::uint32_t>::max();
  const auto L = bg.left_size, R = bg.right_size;
  std::vector<std::vector<std::size_t>> adj(L);
  for (std::size_t i = 0; i < bg.edges.size(); ++i) adj[bg.edges[i].left].push_back(i);
  std::vector<std::uint32_t> match_l(L, kFree), match_r(R, kFree);
  std::vector<std::size_t> via_l(L);
  std::vector<std::uint32_t> layer(L);
  std::vector<std::size_t> it(L);

  auto bfs = [&] {
    std::deque<std::uint32_t> q;
    bool reach_free = false;
    for (std::uint32_t l = 0; l < L; ++l) {
      layer[l] = match_l[l] == kFree ? 0 : kFree;
      if (layer[l] == 0) q.push_back(l);
    }
    while (!q.empty()) {
      auto l = q.front();
      q.pop_front();
      for (auto ei : adj[l]) {
        auto r = bg.edges[ei].right;
        auto next = match_r[r];
        if (next == kFree) {
          reach_free = true;
        } else if (layer[next] == kFree) {
          layer[next] = layer[l] + 1;
          q.push_back(next);
        }
      }
    }
    return reach_free;
  };

  auto dfs = [&](auto&& self, std::uint32_t l) -> bool {
    for (; it[l] < adj[l].size(); ++it[l]) {
      auto ei = adj[l][it[l]];
      auto r = bg.edges[ei].right;
      auto next = match_r[r];
      if (next == kFree || (layer[next] == layer[l] + 1 && self(self, next))) {
        match_l[l] = r;
        match_r[r] = l;
        via_l[l] = ei;
        ++it[l];
        return true;
      }
    }
    layer[l] = kFree;
    return false;
  };

  while (bfs()) {
    std::fill(it.begin(), it.end(), 0);
    for (std::uint32_t l = 0; l < L; ++l) {
      if (match_l[l] == kFree) dfs(dfs, l);
    }
  }
  Matching m;
  for (std::uint32_t l = 0; l < L; ++l) {
    if (match_l[l] != kFree) {
      m.edges.push_back(via_l[l]);
      m.weight += bg.edges[via_l[l]].weight;
    }
  }
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

Matching max_weight_matching(const BipartiteGraph& bg) {
  bg.validate();
  // Min-cost flow: source -> left -> right -> sink, cost -weight on the
  // middle arcs. Augment along cheapest paths while they have negative cost.
  const auto L = bg.left_size, R = bg.right_size;
  const std::size_t source = L + R, sink = L + R + 1, nodes = L + R + 2;
  struct Arc {
    std::size_t to;
    int cap;
    std::int64_t cost;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<std::size_t>> out(nodes);
  auto add = [&](std::size_t a, std::size_t b, std::int64_t cost) {
    out[a].push_back(arcs.size());
    arcs.push_back({b, 1, cost});
    out[b].push_back(arcs.size());
    arcs.push_back({a, 0, -cost});
  };
  for (std::size_t l = 0; l < L; ++l) add(source, l, 0);
  std::vector<std::size_t> middle(bg.edges.size());
  for (std::size_t i = 0; i < bg.edges.size(); ++i) {
    middle[i] = arcs.size();
    add(bg.edges[i].left, L + bg.edges[i].right, -bg.edges[i].weight);
  }
  for (std::size_t r = 0; r < R; ++r) add(L + r, sink, 0);

  constexpr auto kInf = std::numeric_limits<std::int64_t>::max() / 4;
  for (;;) {
    std::vector<std::int64_t> dist(nodes, kInf);
    std::vector<std::size_t> via(nodes, arcs.size());
    dist[source] = 0;
    for (std::size_t round = 0; round < nodes; ++round) {
      bool changed = false;
      for (std::size_t a = 0; a < nodes; ++a) {
        if (dist[a] == kInf) continue;
        for (auto ai : out[a]) {
          const auto& arc = arcs[ai];
          if (arc.cap > 0 && dist[a] + arc.cost < dist[arc.to]) {
            dist[arc.to] = dist[a] + arc.cost;
            via[arc.to] = ai;
            changed = true;
          }
        }
      }
      if (!changed) break;
    }
    if (dist[sink] >= 0) break;
    for (auto v = sink; v != source;) {
      auto ai = via[v];
      arcs[ai].cap -= 1;
      arcs[ai ^ 1].cap += 1;
      v = arcs[ai ^ 1].to;
    }
  }
  Matching m;
  for (std::size_t i = 0; i < bg.edges.size(); ++i) {
    if (arcs[middle[i]].cap == 0) {
      m.edges.push_back(i);
      m.weight += bg.edges[i].weight;
    }
  }
  return m;
}

std::vector<Edge> greedy_maximal_matching(const Graph& g) {
  std::vector<bool> used(g.order(), false);
  std::vector<Edge> out;
  for (auto [u, v] : g.edges()) {
    if (!used[u] && !used[v]) {
      used[u] = used[v] = true;
      out.emplace_back(u, v);
    }
  }
  return out;
}

}  // namespace pathpart
