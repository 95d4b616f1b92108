#include "support.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace pathpart::testkit {

namespace {

Graph from_edges(std::size_t n, const std::set<Edge>& edges, bool directed) {
  std::vector<Edge> list(edges.begin(), edges.end());
  return directed ? Graph::directed(n, list) : Graph::undirected(n, list);
}

std::vector<Vertex> shuffled(std::size_t n, Rng& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

// Own BFS so the brute force does not lean on the library's distances.
std::vector<std::vector<int>> hop_table(const Graph& g) {
  const auto n = g.order();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
  for (Vertex s = 0; s < n; ++s) {
    std::queue<Vertex> q;
    d[s][s] = 0;
    q.push(s);
    while (!q.empty()) {
      auto u = q.front();
      q.pop();
      for (Vertex v = 0; v < n; ++v)
        if (d[s][v] < 0 && g.has_edge(u, v)) {
          d[s][v] = d[s][u] + 1;
          q.push(v);
        }
    }
  }
  return d;
}

std::uint32_t mask_of(const Path& p) {
  std::uint32_t m = 0;
  for (auto v : p) m |= 1u << v;
  return m;
}

}  // namespace

Graph random_undirected(std::size_t n, double prob, Rng& rng) {
  std::bernoulli_distribution coin(prob);
  std::set<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.insert({u, v});
  return from_edges(n, edges, false);
}

Graph random_dag(std::size_t n, double prob, Rng& rng) {
  std::bernoulli_distribution coin(prob);
  auto perm = shuffled(n, rng);
  std::set<Edge> arcs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) arcs.insert({perm[i], perm[j]});
  return from_edges(n, arcs, true);
}

Graph random_digraph(std::size_t n, double prob, Rng& rng) {
  std::bernoulli_distribution coin(prob);
  std::set<Edge> arcs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && coin(rng)) arcs.insert({u, v});
  return from_edges(n, arcs, true);
}

Graph random_tournament(std::size_t n, Rng& rng) {
  std::bernoulli_distribution coin(0.5);
  std::set<Edge> arcs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) arcs.insert(coin(rng) ? Edge{u, v} : Edge{v, u});
  return from_edges(n, arcs, true);
}

Graph random_small_vc(std::size_t n, std::size_t vc, double prob, Rng& rng) {
  std::bernoulli_distribution coin(prob);
  auto perm = shuffled(n, rng);
  std::set<Edge> edges;
  for (std::size_t i = 0; i < std::min(vc, n); ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) edges.insert({std::min(perm[i], perm[j]), std::max(perm[i], perm[j])});
  return from_edges(n, edges, false);
}

Graph path_graph(std::size_t n) {
  std::set<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.insert({v, v + 1});
  return from_edges(n, edges, false);
}

Graph cycle_graph(std::size_t n) {
  std::set<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.insert({v, v + 1});
  edges.insert({0, static_cast<Vertex>(n - 1)});
  return from_edges(n, edges, false);
}

Graph complete_graph(std::size_t n) {
  std::set<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.insert({u, v});
  return from_edges(n, edges, false);
}

Graph star_graph(std::size_t leaves) {
  std::set<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.insert({0, v});
  return from_edges(leaves + 1, edges, false);
}

std::vector<Graph> all_graphs(std::size_t n) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
  std::vector<Graph> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs.size()); ++bits) {
    std::set<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (bits >> i & 1) edges.insert(pairs[i]);
    out.push_back(from_edges(n, edges, false));
  }
  return out;
}

std::vector<Variant> all_variants() {
  std::vector<Variant> out;
  for (auto kind : {PathKind::kUnrestricted, PathKind::kInduced, PathKind::kShortest})
    for (auto mode : {CoverMode::kPartition, CoverMode::kCover, CoverMode::kEdgeDisjointCover})
      out.push_back({kind, mode});
  return out;
}

std::string describe(const Graph& g) {
  std::ostringstream os;
  os << (g.is_directed() ? "digraph" : "graph") << " n=" << g.order() << " {";
  for (auto [u, v] : g.edges()) os << ' ' << u << (g.is_directed() ? ">" : "-") << v;
  os << " }";
  return os.str();
}

std::vector<Path> brute_paths(const Graph& g, PathKind kind) {
  const auto n = g.order();
  auto d = hop_table(g);
  std::vector<Path> out;
  Path cur;
  std::vector<bool> on(n, false);
  std::function<void()> extend = [&] {
    out.push_back(cur);
    auto last = cur.back();
    for (Vertex v = 0; v < n; ++v) {
      if (on[v] || !g.has_edge(last, v)) continue;
      bool ok = true;
      if (kind == PathKind::kInduced) {
        for (std::size_t i = 0; i + 1 < cur.size() && ok; ++i)
          if (g.has_edge(cur[i], v) || g.has_edge(v, cur[i])) ok = false;
      } else if (kind == PathKind::kShortest) {
        ok = d[cur.front()][v] == static_cast<int>(cur.size());
      }
      if (!ok) continue;
      cur.push_back(v);
      on[v] = true;
      extend();
      on[v] = false;
      cur.pop_back();
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    cur = {s};
    on[s] = true;
    extend();
    on[s] = false;
  }
  return out;
}

std::size_t brute_optimum(const Graph& g, Variant variant) {
  const auto n = g.order();
  if (n == 0) return 0;
  const std::uint32_t full = (1u << n) - 1;
  auto paths = brute_paths(g, variant.kind);

  if (variant.mode != CoverMode::kEdgeDisjointCover) {
    std::vector<bool> realizable(full + 1, false);
    for (const auto& p : paths) realizable[mask_of(p)] = true;
    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 1; m <= full; ++m)
      if (realizable[m]) masks.push_back(m);
    constexpr std::size_t kInf = 1000;
    std::vector<std::size_t> best(full + 1, kInf);
    best[0] = 0;
    if (variant.mode == CoverMode::kPartition) {
      for (std::uint32_t s = 1; s <= full; ++s) {
        std::uint32_t low = s & (~s + 1);
        for (auto m : masks)
          if ((m & low) && (m & s) == m) best[s] = std::min(best[s], best[s ^ m] + 1);
      }
    } else {
      // Breadth-first over covered sets.
      std::queue<std::uint32_t> q;
      q.push(0);
      while (!q.empty()) {
        auto s = q.front();
        q.pop();
        for (auto m : masks)
          if (best[s | m] == kInf) {
            best[s | m] = best[s] + 1;
            q.push(s | m);
          }
      }
    }
    return best[full];
  }

  // Edge-disjoint cover: iterative deepening, the lowest uncovered vertex
  // must lie on the next path.
  std::vector<std::pair<std::uint32_t, std::uint64_t>> items;
  {
    std::set<std::pair<std::uint32_t, std::uint64_t>> uniq;
    for (const auto& p : paths) {
      std::uint64_t em = 0;
      for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        Vertex a = p[i], b = p[i + 1];
        if (!g.is_directed() && a > b) std::swap(a, b);
        em |= std::uint64_t{1} << (a * n + b);
      }
      uniq.insert({mask_of(p), em});
    }
    items.assign(uniq.begin(), uniq.end());
  }
  std::sort(items.begin(), items.end(),
            [](const auto& a, const auto& b) { return std::popcount(a.first) > std::popcount(b.first); });
  std::size_t max_len = 1;
  for (const auto& it : items) max_len = std::max<std::size_t>(max_len, std::popcount(it.first));
  std::function<bool(std::uint32_t, std::uint64_t, std::size_t)> rec = [&](std::uint32_t covered, std::uint64_t used,
                                                                           std::size_t left) -> bool {
    if (covered == full) return true;
    auto rest = static_cast<std::size_t>(std::popcount(full & ~covered));
    if (left == 0 || rest > left * max_len) return false;
    std::uint32_t low = ~covered & (covered + 1);
    for (const auto& [m, em] : items) {
      if (!(m & low) || (em & used)) continue;
      if (rec(covered | m, used | em, left - 1)) return true;
    }
    return false;
  };
  for (std::size_t k = 1;; ++k)
    if (rec(0, 0, k)) return k;
}

std::size_t brute_nd(const Graph& g) {
  const auto n = g.order();
  auto same = [&](Vertex u, Vertex v) {
    for (Vertex w = 0; w < n; ++w)
      if (w != u && w != v && g.adjacent(u, w) != g.adjacent(v, w)) return false;
    return true;
  };
  std::vector<Vertex> reps;
  for (Vertex v = 0; v < n; ++v)
    if (std::none_of(reps.begin(), reps.end(), [&](Vertex r) { return same(r, v); })) reps.push_back(v);
  return reps.size();
}

std::size_t brute_dnd(const Graph& g) {
  const auto n = g.order();
  auto same = [&](Vertex u, Vertex v) {
    for (Vertex w = 0; w < n; ++w) {
      if (w == u || w == v) continue;
      if (g.has_edge(u, w) != g.has_edge(v, w) || g.has_edge(w, u) != g.has_edge(w, v)) return false;
    }
    // Members of a class are pairwise bidirected or pairwise non-adjacent.
    return g.has_edge(u, v) == g.has_edge(v, u);
  };
  std::vector<Vertex> reps;
  for (Vertex v = 0; v < n; ++v)
    if (std::none_of(reps.begin(), reps.end(), [&](Vertex r) { return same(r, v); })) reps.push_back(v);
  return reps.size();
}

std::size_t brute_vertex_cover(const Graph& g) {
  const auto n = g.order();
  auto edges = g.edges();
  std::size_t best = n;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    auto size = static_cast<std::size_t>(std::popcount(s));
    if (size >= best) continue;
    bool ok = std::all_of(edges.begin(), edges.end(), [&](Edge e) { return (s >> e.first & 1) || (s >> e.second & 1); });
    if (ok) best = size;
  }
  return best;
}

std::size_t longest_induced_path(const Graph& g) {
  std::size_t best = 0;
  for (const auto& p : brute_paths(g, PathKind::kInduced)) best = std::max(best, p.size());
  return best;
}

bool has_clique(const Graph& g, std::size_t k) {
  const auto n = g.order();
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (static_cast<std::size_t>(std::popcount(s)) != k) continue;
    bool ok = true;
    for (Vertex u = 0; u < n && ok; ++u)
      for (Vertex v = u + 1; v < n && ok; ++v)
        if ((s >> u & 1) && (s >> v & 1) && !g.adjacent(u, v)) ok = false;
    if (ok) return true;
  }
  return false;
}

bool has_induced_p4_partition(const Graph& g) {
  const auto n = g.order();
  if (n % 4 != 0) return false;
  std::set<std::uint32_t> quads;
  for (const auto& p : brute_paths(g, PathKind::kInduced))
    if (p.size() == 4) quads.insert(mask_of(p));
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  std::function<bool(std::uint32_t)> rec = [&](std::uint32_t covered) -> bool {
    if (covered == full) return true;
    std::uint32_t low = ~covered & (covered + 1);
    for (auto m : quads)
      if ((m & low) && !(m & covered) && rec(covered | m)) return true;
    return false;
  };
  return rec(0);
}

}  // namespace pathpart::testkit
