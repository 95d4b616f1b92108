#include "pathpart/vc.hpp"

#include <algorithm>
#include <map>

namespace pathpart {
namespace {

class CoverSearch {
 public:
  explicit CoverSearch(const Graph& g) : g_(g), n_(g.order()), alive_(n_, true), chosen_(n_, false) {
    best_size_ = n_ + 1;
  }

  std::vector<Vertex> run() {
    rec(0);
    return best_;
  }

 private:
  std::size_t live_degree(Vertex v) const {
    std::size_t d = 0;
    for (Vertex w : g_.neighbors(v)) d += alive_[w];
    return d;
  }

  // Paths and cycles: walk each component and take every other vertex.
  std::size_t cover_low_degree(std::vector<Vertex>& out) const {
    std::vector<bool> seen(n_, false);
    std::size_t added = 0;
    auto walk = [&](Vertex start) {
      std::vector<Vertex> seq{start};
      seen[start] = true;
      for (;;) {
        Vertex cur = seq.back();
        bool moved = false;
        for (Vertex w : g_.neighbors(cur)) {
          if (alive_[w] && !seen[w]) {
            seen[w] = true;
            seq.push_back(w);
            moved = true;
            break;
          }
        }
        if (!moved) break;
      }
      bool cycle = seq.size() >= 3 && g_.adjacent(seq.front(), seq.back());
      for (std::size_t i = 1; i < seq.size(); i += 2) {
        out.push_back(seq[i]);
        ++added;
      }
      if (cycle && seq.size() % 2 == 1) {
        out.push_back(seq.back());
        ++added;
      }
    };
    for (Vertex v = 0; v < n_; ++v) {
      if (alive_[v] && !seen[v] && live_degree(v) == 1) walk(v);
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (alive_[v] && !seen[v] && live_degree(v) == 2) walk(v);
    }
    return added;
  }

  void rec(std::size_t taken) {
    if (taken >= best_size_) return;
    Vertex pick = 0;
    std::size_t max_deg = 0, edges2 = 0;
    for (Vertex v = 0; v < n_; ++v) {
      if (!alive_[v]) continue;
      auto d = live_degree(v);
      edges2 += d;
      if (d > max_deg) {
        max_deg = d;
        pick = v;
      }
    }
    if (max_deg == 0) {
      record(taken, {});
      return;
    }
    // Each cover vertex handles at most max_deg of the remaining edges.
    auto edges = edges2 / 2;
    if (taken + (edges + max_deg - 1) / max_deg >= best_size_) return;
    if (max_deg <= 2) {
      std::vector<Vertex> rest;
      auto extra = cover_low_degree(rest);
      record(taken + extra, rest);
      return;
    }
    alive_[pick] = false;
    chosen_[pick] = true;
    rec(taken + 1);
    chosen_[pick] = false;

    std::vector<Vertex> nbrs;
    for (Vertex w : g_.neighbors(pick)) {
      if (alive_[w]) nbrs.push_back(w);
    }
    for (Vertex w : nbrs) {
      alive_[w] = false;
      chosen_[w] = true;
    }
    rec(taken + nbrs.size());
    for (Vertex w : nbrs) {
      alive_[w] = true;
      chosen_[w] = false;
    }
    alive_[pick] = true;
  }

  void record(std::size_t size, const std::vector<Vertex>& extra) {
    if (size >= best_size_) return;
    best_size_ = size;
    best_.clear();
    for (Vertex v = 0; v < n_; ++v) {
      if (chosen_[v]) best_.push_back(v);
    }
    best_.insert(best_.end(), extra.begin(), extra.end());
    std::sort(best_.begin(), best_.end());
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<bool> alive_;
  std::vector<bool> chosen_;
  std::size_t best_size_;
  std::vector<Vertex> best_;
};

}  // namespace

std::vector<Vertex> min_vertex_cover(const Graph& g) { return CoverSearch(g).run(); }

Kernel kernelize_vc(const Graph& g) {
  auto cover = min_vertex_cover(g);
  const auto vc = cover.size();
  std::vector<bool> in_cover(g.order(), false);
  for (Vertex v : cover) in_cover[v] = true;
  std::map<std::vector<Vertex>, std::vector<Vertex>> types;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (in_cover[v]) continue;
    auto nb = g.neighbors(v);
    types[std::vector<Vertex>(nb.begin(), nb.end())].push_back(v);
  }
  std::vector<bool> drop(g.order(), false);
  Kernel k;
  for (auto& [nbrs, members] : types) {
    while (members.size() > 2 * vc) {
      drop[members.back()] = true;
      members.pop_back();
      ++k.forced_singletons;
    }
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!drop[v]) k.kept.push_back(v);
  }
  k.reduced = g.induced_subgraph(k.kept);
  return k;
}

}  // namespace pathpart
