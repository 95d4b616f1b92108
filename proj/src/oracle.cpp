#include "pathpart/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <string>
#include <unordered_map>

#include "pathpart/error.hpp"

namespace pathpart {
namespace {

using Mask = std::uint64_t;

constexpr Mask bit(Vertex v) { return Mask{1} << v; }

// Precomputed adjacency masks of one (small) graph plus the incremental
// path-extension predicates shared by enumeration and search.
struct Context {
  const Graph& g;
  PathKind kind;
  std::size_t n;
  DistanceMatrix dist;
  std::vector<Mask> out, in, nb;
  std::vector<std::uint8_t> used;  // ED only, n*n arc usage
  bool track_edges = false;

  Context(const Graph& graph, PathKind k) : g(graph), kind(k), n(graph.order()) {
    if (kind == PathKind::kShortest) dist = all_pairs_distances(g);
    out.assign(n, 0);
    in.assign(n, 0);
    nb.assign(n, 0);
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex w : g.successors(v)) out[v] |= bit(w);
      for (Vertex w : g.predecessors(v)) in[v] |= bit(w);
      for (Vertex w : g.neighbors(v)) nb[v] |= bit(w);
    }
  }

  bool edge_free(Vertex a, Vertex b) const { return !track_edges || !used[a * n + b]; }

  void mark(const Path& p, std::uint8_t value) {
    for (std::size_t i = 1; i < p.size(); ++i) {
      used[p[i - 1] * n + p[i]] = value;
      if (!g.is_directed()) used[p[i] * n + p[i - 1]] = value;
    }
  }

  bool can_append(const Path& seq, Mask seq_mask, Vertex w) const {
    Vertex back = seq.back();
    if ((seq_mask & bit(w)) || !(out[back] & bit(w)) || !edge_free(back, w)) return false;
    if (kind == PathKind::kInduced) return (nb[w] & seq_mask & ~bit(back)) == 0;
    if (kind == PathKind::kShortest) {
      auto d = dist.at(seq.front(), w);
      return d && *d == seq.size();
    }
    return true;
  }

  bool can_prepend(const Path& rev, Mask seq_mask, Vertex u) const {
    // rev holds the sequence reversed: rev.back() is the current front.
    Vertex front = rev.back();
    if ((seq_mask & bit(u)) || !(out[u] & bit(front)) || !edge_free(u, front)) return false;
    if (kind == PathKind::kInduced) return (nb[u] & seq_mask & ~bit(front)) == 0;
    if (kind == PathKind::kShortest) {
      auto d = dist.at(u, rev.front());
      return d && *d == rev.size();
    }
    return true;
  }

  bool extendable(const Path& p, Mask p_mask, Mask allowed) const {
    Path rev(p.rbegin(), p.rend());
    for (Mask m = out[p.back()] & allowed; m; m &= m - 1) {
      if (can_append(p, p_mask, static_cast<Vertex>(std::countr_zero(m)))) return true;
    }
    for (Mask m = in[p.front()] & allowed; m; m &= m - 1) {
      if (can_prepend(rev, p_mask, static_cast<Vertex>(std::countr_zero(m)))) return true;
    }
    return false;
  }

  void forward(Path& seq, Mask seq_mask, Mask allowed, const std::function<void(const Path&, Mask)>& emit) const {
    emit(seq, seq_mask);
    for (Mask m = out[seq.back()] & allowed; m; m &= m - 1) {
      auto w = static_cast<Vertex>(std::countr_zero(m));
      if (!can_append(seq, seq_mask, w)) continue;
      seq.push_back(w);
      forward(seq, seq_mask | bit(w), allowed, emit);
      seq.pop_back();
    }
  }

  void backward(Path& rev, Mask seq_mask, Mask allowed, const std::function<void(const Path&, Mask)>& emit) const {
    Path seq(rev.rbegin(), rev.rend());
    forward(seq, seq_mask, allowed, emit);
    for (Mask m = in[rev.back()] & allowed; m; m &= m - 1) {
      auto u = static_cast<Vertex>(std::countr_zero(m));
      if (!can_prepend(rev, seq_mask, u)) continue;
      rev.push_back(u);
      backward(rev, seq_mask | bit(u), allowed, emit);
      rev.pop_back();
    }
  }

  struct Candidate {
    Path path;
    Mask mask;
  };

  // Valid paths inside `allowed` containing v (only those starting at v when
  // forward_only). Undirected paths are reported in one orientation.
  std::vector<Candidate> through(Vertex v, Mask allowed, bool forward_only, bool maximal_only) const {
    std::vector<Candidate> found;
    auto emit = [&](const Path& p, Mask m) {
      if (!g.is_directed() && !forward_only && p.size() > 1 && p.front() > p.back()) return;
      if (maximal_only && extendable(p, m, allowed)) return;
      found.push_back({p, m});
    };
    Path seq{v};
    if (forward_only) {
      forward(seq, bit(v), allowed, emit);
    } else {
      backward(seq, bit(v), allowed, emit);
    }
    return found;
  }
};

class Search {
 public:
  Search(Context& ctx, CoverMode mode, const OracleBudget& budget, std::uint64_t& nodes)
      : ctx_(ctx), mode_(mode), budget_(budget), nodes_(nodes) {
    diam_ = ctx.kind == PathKind::kShortest ? ctx.dist.max_finite() : 0;
    if (mode == CoverMode::kEdgeDisjointCover) {
      ctx_.track_edges = true;
      ctx_.used.assign(ctx.n * ctx.n, 0);
    }
  }

  // Looks for systems with fewer than `bound` paths; stops early once a
  // system of size <= stop_at is known.
  void run(std::uint32_t bound, std::uint32_t stop_at) {
    best_size_ = bound;
    stop_at_ = stop_at;
    Mask all = ctx_.n == 64 ? ~Mask{0} : (bit(static_cast<Vertex>(ctx_.n)) - 1);
    rec(all, 0);
  }

  void seed(std::vector<Path> paths) {
    best_size_ = static_cast<std::uint32_t>(paths.size());
    best_ = std::move(paths);
  }

  bool found() const { return !best_.empty() || ctx_.n == 0; }
  const std::vector<Path>& best() const { return best_; }
  std::uint32_t best_size() const { return best_size_; }

 private:
  std::uint32_t lower_bound(Mask unc) const {
    auto rem = static_cast<std::uint32_t>(std::popcount(unc));
    std::uint32_t lb = rem > 0 ? 1 : 0;
    if (ctx_.kind == PathKind::kShortest) lb = std::max(lb, (rem + diam_) / (diam_ + 1));
    const bool part = mode_ == CoverMode::kPartition;
    if (ctx_.g.is_directed()) {
      std::uint32_t starts = 0, ends = 0;
      for (Mask m = unc; m; m &= m - 1) {
        auto v = std::countr_zero(m);
        Mask in = part ? ctx_.in[v] & unc : ctx_.in[v];
        Mask out = part ? ctx_.out[v] & unc : ctx_.out[v];
        starts += in == 0;
        ends += out == 0;
      }
      lb = std::max({lb, starts, ends});
    } else {
      std::uint32_t isolated = 0, leaves = 0;
      for (Mask m = unc; m; m &= m - 1) {
        auto v = std::countr_zero(m);
        int d = std::popcount(part ? ctx_.nb[v] & unc : ctx_.nb[v]);
        isolated += d == 0;
        leaves += d == 1;
      }
      lb = std::max(lb, isolated + (leaves + 1) / 2);
    }
    return lb;
  }

  void rec(Mask unc, std::uint32_t depth) {
    if (++nodes_ > budget_.node_limit) {
      throw Error(ErrorCode::kBudgetExceeded, "oracle node limit exceeded");
    }
    if (unc == 0) {
      if (depth < best_size_) {
        best_size_ = depth;
        best_ = stack_;
      }
      return;
    }
    if (depth + 1 >= best_size_) return;
    const bool use_memo = mode_ != CoverMode::kEdgeDisjointCover;
    if (use_memo) {
      auto it = memo_.find(unc);
      if (it != memo_.end() && depth + it->second >= best_size_) return;
    }
    if (budget_.use_lower_bounds && depth + lower_bound(unc) >= best_size_) return;

    const bool part = mode_ == CoverMode::kPartition;
    Vertex v = static_cast<Vertex>(std::countr_zero(unc));
    bool forward_only = false;
    if (part) {
      for (Mask m = unc; m; m &= m - 1) {
        auto u = static_cast<Vertex>(std::countr_zero(m));
        bool endpoint = ctx_.g.is_directed() ? (ctx_.in[u] & unc) == 0
                                             : std::popcount(ctx_.nb[u] & unc) <= 1;
        if (endpoint) {
          v = u;
          forward_only = true;
          break;
        }
      }
    }
    Mask all = ctx_.n == 64 ? ~Mask{0} : (bit(static_cast<Vertex>(ctx_.n)) - 1);
    auto cands = ctx_.through(v, part ? unc : all, forward_only, mode_ == CoverMode::kCover);
    std::stable_sort(cands.begin(), cands.end(), [&](const auto& a, const auto& b) {
      int ca = std::popcount(a.mask & unc), cb = std::popcount(b.mask & unc);
      if (ca != cb) return ca > cb;
      return a.path < b.path;
    });
    for (const auto& c : cands) {
      if (ctx_.track_edges) ctx_.mark(c.path, 1);
      stack_.push_back(c.path);
      rec(unc & ~c.mask, depth + 1);
      stack_.pop_back();
      if (ctx_.track_edges) ctx_.mark(c.path, 0);
      if (best_size_ <= stop_at_) return;
      if (depth + 1 >= best_size_) break;
    }
    if (use_memo && memo_.size() < kMemoCap) {
      auto& slot = memo_[unc];
      slot = std::max(slot, best_size_ - depth);
    }
  }

  static constexpr std::size_t kMemoCap = 4'000'000;

  Context& ctx_;
  CoverMode mode_;
  const OracleBudget& budget_;
  std::uint64_t& nodes_;
  std::uint32_t diam_ = 0;
  std::uint32_t best_size_ = 0;
  std::uint32_t stop_at_ = 0;
  std::vector<Path> best_;
  std::vector<Path> stack_;
  std::unordered_map<Mask, std::uint32_t> memo_;
};

void check_budget(const Graph& g, CoverMode mode, const OracleBudget& budget) {
  std::size_t cap = budget.max_vertices ? budget.max_vertices : default_max_vertices(mode);
  if (g.order() > cap) {
    throw Error(ErrorCode::kBudgetExceeded,
                "oracle budget allows " + std::to_string(cap) + " vertices, graph has " +
                    std::to_string(g.order()));
  }
}

void check_component(std::size_t size) {
  if (size > 64) throw Error(ErrorCode::kBudgetExceeded, "oracle component larger than 64 vertices");
}

std::vector<Path> map_back(const std::vector<Path>& paths, const std::vector<Vertex>& ids) {
  std::vector<Path> out;
  for (const auto& p : paths) {
    Path q;
    for (Vertex v : p) q.push_back(ids[v]);
    out.push_back(std::move(q));
  }
  return out;
}

std::vector<Path> singletons(std::size_t n) {
  std::vector<Path> out;
  for (Vertex v = 0; v < n; ++v) out.push_back({v});
  return out;
}

}  // namespace

std::size_t default_max_vertices(CoverMode mode) { return mode == CoverMode::kPartition ? 14 : 10; }

std::vector<Path> enumerate_valid_paths(const Graph& g, PathKind kind, Vertex start) {
  check_component(g.order());
  Context ctx(g, kind);
  std::vector<Path> out;
  Path seq{start};
  Mask all = g.order() == 64 ? ~Mask{0} : (bit(static_cast<Vertex>(g.order())) - 1);
  ctx.forward(seq, bit(start), all, [&](const Path& p, Mask) { out.push_back(p); });
  return out;
}

PathSystem solve_exact(const Graph& g, Variant variant, const OracleBudget& budget) {
  check_budget(g, variant.mode, budget);
  std::uint64_t nodes = 0;
  PathSystem result{{}, variant};
  for (const auto& comp : connected_components(g)) {
    check_component(comp.size());
    Graph sub = g.induced_subgraph(comp);
    Context ctx(sub, variant.kind);
    Search search(ctx, variant.mode, budget, nodes);
    search.seed(singletons(sub.order()));
    search.run(static_cast<std::uint32_t>(sub.order()), 0);
    for (auto& p : map_back(search.best(), comp)) result.paths.push_back(std::move(p));
  }
  std::sort(result.paths.begin(), result.paths.end());
  return result;
}

Decision decide(const Graph& g, Variant variant, std::size_t k, const OracleBudget& budget) {
  check_budget(g, variant.mode, budget);
  auto comps = connected_components(g);
  if (comps.size() != 1) {
    auto best = solve_exact(g, variant, budget);
    if (best.size() <= k) return {true, std::move(best)};
    return {false, std::nullopt};
  }
  check_component(g.order());
  if (k >= g.order()) return {true, PathSystem{singletons(g.order()), variant}};
  std::uint64_t nodes = 0;
  Context ctx(g, variant.kind);
  Search search(ctx, variant.mode, budget, nodes);
  search.run(static_cast<std::uint32_t>(k + 1), static_cast<std::uint32_t>(k));
  if (!search.found()) return {false, std::nullopt};
  PathSystem witness{search.best(), variant};
  std::sort(witness.paths.begin(), witness.paths.end());
  return {true, std::move(witness)};
}

}  // namespace pathpart
