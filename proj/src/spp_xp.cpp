#include "pathpart/spp_xp.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "pathpart/error.hpp"

namespace pathpart {
namespace {

struct Candidate {
  TerminalPair pair;
  std::uint32_t weight;  // d + 1
};

std::vector<Candidate> candidate_pairs(const Graph& g, const DistanceMatrix& dist) {
  std::vector<Candidate> out;
  for (Vertex s = 0; s < g.order(); ++s) {
    for (Vertex t = g.is_directed() ? 0 : s; t < g.order(); ++t) {
      if (auto d = dist.at(s, t)) out.push_back({{s, t}, *d + 1});
    }
  }
  return out;
}

class Placer {
 public:
  Placer(const Graph& g, const DistanceMatrix& dist, TerminalSet pairs)
      : g_(g), dist_(dist), pairs_(std::move(pairs)), used_(g.order(), false) {
    std::stable_sort(pairs_.begin(), pairs_.end(), [&](const auto& a, const auto& b) {
      return dist_.hops(a.source, a.target) > dist_.hops(b.source, b.target);
    });
    for (const auto& p : pairs_) used_[p.source] = used_[p.target] = true;
    paths_.resize(pairs_.size());
  }

  bool place(std::size_t i) {
    if (i == pairs_.size()) return true;
    const auto& pr = pairs_[i];
    paths_[i] = {pr.source};
    return extend(i, pr.source);
  }

  std::vector<Path> paths() const { return paths_; }

 private:
  bool extend(std::size_t i, Vertex at) {
    const auto& pr = pairs_[i];
    const auto total = dist_.hops(pr.source, pr.target);
    const auto len = static_cast<std::uint32_t>(paths_[i].size() - 1);
    if (at == pr.target) return place(i + 1);
    for (Vertex w : g_.successors(at)) {
      auto ds = dist_.at(pr.source, w);
      auto dt = dist_.at(w, pr.target);
      if (!ds || !dt || *ds != len + 1 || *dt != total - len - 1) continue;
      if (w != pr.target && used_[w]) continue;
      if (w != pr.target) used_[w] = true;
      paths_[i].push_back(w);
      if (extend(i, w)) return true;
      paths_[i].pop_back();
      if (w != pr.target) used_[w] = false;
    }
    return false;
  }

  const Graph& g_;
  const DistanceMatrix& dist_;
  TerminalSet pairs_;
  std::vector<bool> used_;
  std::vector<Path> paths_;
};

bool spans(const std::vector<Path>& paths, std::size_t n) {
  std::size_t total = 0;
  for (const auto& p : paths) total += p.size();
  return total == n;
}

}  // namespace

void enumerate_terminal_sets(const Graph& g, const DistanceMatrix& dist, std::size_t k,
                             const std::function<bool(const TerminalSet&)>& visit,
                             bool require_distance_identity) {
  const auto n = g.order();
  if (k == 0 || k > n) return;
  auto cands = candidate_pairs(g, dist);
  std::uint32_t max_weight = 0;
  for (const auto& c : cands) max_weight = std::max(max_weight, c.weight);
  std::vector<bool> used(n, false);
  TerminalSet current;
  bool stop = false;

  auto rec = [&](auto&& self, std::size_t from, std::size_t sum) -> void {
    const auto left = k - current.size();
    if (left == 0) {
      if (!require_distance_identity || sum == n) stop = !visit(current);
      return;
    }
    for (std::size_t i = from; i < cands.size() && !stop; ++i) {
      const auto& c = cands[i];
      if (used[c.pair.source] || used[c.pair.target]) continue;
      std::size_t next = sum + c.weight;
      if (next + (left - 1) > n) continue;
      if (require_distance_identity && next + (left - 1) * static_cast<std::size_t>(max_weight) < n) continue;
      used[c.pair.source] = used[c.pair.target] = true;
      current.push_back(c.pair);
      self(self, i + 1, next);
      current.pop_back();
      used[c.pair.source] = used[c.pair.target] = false;
    }
  };
  rec(rec, 0, 0);
}

std::optional<std::vector<Path>> disjoint_shortest_paths(const Graph& g, const DistanceMatrix& dist,
                                                         const TerminalSet& terminals) {
  for (const auto& p : terminals) {
    if (!dist.reachable(p.source, p.target)) return std::nullopt;
  }
  Placer placer(g, dist, terminals);
  if (!placer.place(0)) return std::nullopt;
  auto paths = placer.paths();
  std::sort(paths.begin(), paths.end());
  return paths;
}

Decision solve_spp_xp(const Graph& g, std::size_t k, const XpOptions& options) {
  if (g.is_directed() && !is_dag(g)) {
    throw Error(ErrorCode::kUnsupportedInput, "xp solver handles undirected graphs and DAGs only");
  }
  const Variant variant{PathKind::kShortest, CoverMode::kPartition};
  const auto n = g.order();
  if (n == 0) return {true, PathSystem{{}, variant}};
  auto dist = all_pairs_distances(g);
  const unsigned threads = std::max(1u, options.threads);
  constexpr std::size_t kBatch = 512;

  for (std::size_t kk = 1; kk <= std::min(k, n); ++kk) {
    std::optional<std::vector<Path>> answer;
    std::vector<TerminalSet> batch;

    auto attempt = [&](const TerminalSet& ts) -> std::optional<std::vector<Path>> {
      auto paths = disjoint_shortest_paths(g, dist, ts);
      if (paths && !spans(*paths, n)) {
        if (options.require_distance_identity) {
          throw Error(ErrorCode::kInfeasible, "placement under the distance identity missed vertices");
        }
        return std::nullopt;
      }
      return paths;
    };

    // Lowest batch index wins, so the outcome does not depend on scheduling.
    auto flush = [&]() {
      std::atomic<std::size_t> next{0};
      std::atomic<std::size_t> winner{std::numeric_limits<std::size_t>::max()};
      std::vector<std::optional<std::vector<Path>>> results(batch.size());
      auto work = [&]() {
        for (;;) {
          auto i = next.fetch_add(1);
          if (i >= batch.size() || i > winner.load()) return;
          results[i] = attempt(batch[i]);
          if (results[i]) {
            auto cur = winner.load();
            while (i < cur && !winner.compare_exchange_weak(cur, i)) {
            }
          }
        }
      };
      if (threads == 1) {
        work();
      } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
      }
      if (winner.load() < batch.size()) answer = results[winner.load()];
      batch.clear();
    };

    enumerate_terminal_sets(
        g, dist, kk,
        [&](const TerminalSet& ts) {
          batch.push_back(ts);
          if (batch.size() == kBatch) flush();
          return !answer.has_value();
        },
        options.require_distance_identity);
    if (!answer && !batch.empty()) flush();
    if (answer) return {true, PathSystem{std::move(*answer), variant}};
  }
  return {false, std::nullopt};
}

}  // namespace pathpart
