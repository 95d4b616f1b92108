#include "pathpart/vc.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <set>
#include <thread>

#include "pathpart/error.hpp"

namespace pathpart {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct Record {
  std::size_t size;
  std::uint64_t index;
  std::vector<Path> paths;
};

std::vector<Path> solve_component(const Graph& g, const UppVcOptions& options) {
  const auto n = g.order();
  auto cover = min_vertex_cover(g);
  const auto r = cover.size();
  if (r == 0) {
    std::vector<Path> out;
    for (Vertex v = 0; v < n; ++v) out.push_back({v});
    return out;
  }
  const auto free_count = n - r;
  std::vector<bool> in_cover(n, false);
  for (Vertex v : cover) in_cover[v] = true;

  // A 1-bit between a and b needs the edge ab or a shared independent neighbour.
  auto joinable = [&](Vertex a, Vertex b) {
    if (g.has_edge(a, b)) return true;
    for (Vertex x : g.neighbors(a)) {
      if (!in_cover[x] && g.has_edge(b, x)) return true;
    }
    return false;
  };

  Record record{n, 0, {}};
  for (Vertex v = 0; v < n; ++v) record.paths.push_back({v});
  std::mutex lock;

  const std::uint64_t bit_space = std::uint64_t{1} << (r - 1);
  const unsigned threads = std::max(1u, options.threads);

  auto worker = [&](unsigned tid) {
    std::vector<Vertex> perm = cover;
    std::vector<std::uint8_t> bits(r - 1);
    std::uint64_t perm_index = 0;
    do {
      if (perm_index % threads == tid) {
        for (std::uint64_t mask = 0; mask < bit_space; ++mask) {
          std::size_t zeros = 0;
          bool impossible = false;
          for (std::size_t i = 0; i + 1 < r; ++i) {
            bits[i] = static_cast<std::uint8_t>((mask >> (r - 2 - i)) & 1);
            if (!bits[i]) {
              ++zeros;
            } else if (options.prune && !joinable(perm[i], perm[i + 1])) {
              impossible = true;
            }
          }
          if (impossible) continue;
          const std::uint64_t index = perm_index * bit_space + mask;
          if (options.prune) {
            std::size_t absorb = (r - 1 - zeros) + 2 * (zeros + 1);
            std::size_t lb = (zeros + 1) + (free_count > absorb ? free_count - absorb : 0);
            std::lock_guard<std::mutex> guard(lock);
            if (lb > record.size || (lb == record.size && index > record.index)) continue;
          }
          auto aux = build_aux_graph(g, perm, bits);
          auto m = aux_matching(aux);
          if (!passes_skip_tests(aux, m)) continue;
          PathSystem sys;
          try {
            sys = reconstruct_pp_from_matching(g, aux, m);
          } catch (const Error& e) {
            if (e.code() == ErrorCode::kMalformedMatching) continue;
            throw;
          }
          if (static_cast<std::int64_t>(sys.size()) != static_cast<std::int64_t>(n) - m.weight) {
            throw Error(ErrorCode::kMalformedMatching, "candidate path count differs from |V| - w(M)");
          }
          std::lock_guard<std::mutex> guard(lock);
          if (options.on_candidate) {
            options.on_candidate({perm, bits, m.weight, sys.size(), n});
          }
          if (sys.size() < record.size || (sys.size() == record.size && index < record.index)) {
            record = {sys.size(), index, std::move(sys.paths)};
          }
        }
      }
      ++perm_index;
    } while (std::next_permutation(perm.begin(), perm.end()));
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  return record.paths;
}

}  // namespace

AuxMatchGraph build_aux_graph(const Graph& g, std::span<const Vertex> order,
                              std::span<const std::uint8_t> bits) {
  const auto r = order.size();
  AuxMatchGraph aux;
  aux.order.assign(order.begin(), order.end());
  aux.bits.assign(bits.begin(), bits.end());
  std::vector<bool> in_cover(g.order(), false);
  for (Vertex v : order) in_cover[v] = true;
  std::vector<std::uint32_t> right_of(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!in_cover[v]) {
      right_of[v] = static_cast<std::uint32_t>(aux.independent.size());
      aux.independent.push_back(v);
    }
  }
  aux.prime_of.assign(r, kNone);
  aux.dummy_of.assign(r, kNone);
  std::size_t left = r;
  for (std::size_t i = 0; i < r; ++i) {
    if (i == 0 || bits[i - 1] == 0) aux.prime_of[i] = left++;
  }
  std::size_t right = aux.independent.size();
  auto add = [&](std::size_t l, std::size_t rt, std::int64_t w, AuxRule rule) {
    aux.graph.edges.push_back({static_cast<std::uint32_t>(l), static_cast<std::uint32_t>(rt), w});
    aux.rule.push_back(rule);
  };
  for (std::size_t i = 0; i < r; ++i) {
    const Vertex v = order[i];
    if (i + 1 < r && bits[i] == 1) {
      for (Vertex x : g.neighbors(v)) {
        if (!in_cover[x] && g.has_edge(order[i + 1], x)) add(i, right_of[x], 2, AuxRule::kBridge);
      }
      if (g.has_edge(v, order[i + 1])) {
        aux.dummy_of[i] = right++;
        add(i, aux.dummy_of[i], 1, AuxRule::kDummy);
      }
    } else {
      for (Vertex x : g.neighbors(v)) {
        if (!in_cover[x]) add(i, right_of[x], 1, AuxRule::kTail);
      }
    }
    if (aux.prime_of[i] != kNone) {
      for (Vertex x : g.neighbors(v)) {
        if (!in_cover[x]) add(aux.prime_of[i], right_of[x], 1, AuxRule::kHead);
      }
    }
  }
  aux.graph.left_size = left;
  aux.graph.right_size = right;
  return aux;
}

Matching aux_matching(const AuxMatchGraph& aux) {
  const auto r = aux.order.size();
  const std::int64_t scale = static_cast<std::int64_t>(r) + 1;
  BipartiteGraph scaled = aux.graph;
  for (auto& e : scaled.edges) {
    bool one_bit = e.left + 1 < r && aux.bits[e.left] == 1;
    e.weight = e.weight * scale + (one_bit ? 1 : 0);
  }
  auto m = max_weight_matching(scaled);
  m.weight = 0;
  for (auto ei : m.edges) m.weight += aux.graph.edges[ei].weight;
  return m;
}

bool passes_skip_tests(const AuxMatchGraph& aux, const Matching& m) {
  const auto r = aux.order.size();
  std::set<std::pair<std::uint32_t, std::uint32_t>> present;
  for (const auto& e : aux.graph.edges) present.insert({e.left, e.right});
  const bool any_zero = std::find(aux.bits.begin(), aux.bits.end(), 0) != aux.bits.end();
  for (auto ei : m.edges) {
    if (aux.rule[ei] != AuxRule::kHead) continue;
    const auto& e = aux.graph.edges[ei];
    std::size_t pos = 0;
    while (aux.prime_of[pos] != e.left) ++pos;
    if (pos > 0) {
      if (present.count({static_cast<std::uint32_t>(pos - 1), e.right})) return false;
    } else if (any_zero && present.count({static_cast<std::uint32_t>(r - 1), e.right})) {
      return false;
    }
  }
  return true;
}

PathSystem reconstruct_pp_from_matching(const Graph& g, const AuxMatchGraph& aux, const Matching& m) {
  const auto r = aux.order.size();
  constexpr auto kFree = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> partner(aux.graph.left_size, kFree);
  std::vector<AuxRule> how(aux.graph.left_size, AuxRule::kTail);
  std::vector<bool> right_used(aux.graph.right_size, false);
  for (auto ei : m.edges) {
    const auto& e = aux.graph.edges[ei];
    if (partner[e.left] != kFree || right_used[e.right]) {
      throw Error(ErrorCode::kMalformedMatching, "edge set is not a matching");
    }
    partner[e.left] = e.right;
    how[e.left] = aux.rule[ei];
    right_used[e.right] = true;
  }
  PathSystem out{{}, {PathKind::kUnrestricted, CoverMode::kPartition}};
  Path current;
  for (std::size_t i = 0; i < r; ++i) {
    if (aux.prime_of[i] != kNone) {
      current.clear();
      auto p = partner[aux.prime_of[i]];
      if (p != kFree) current.push_back(aux.independent[p]);
    }
    current.push_back(aux.order[i]);
    const bool last = i + 1 == r || aux.bits[i] == 0;
    auto p = partner[i];
    if (last) {
      if (p != kFree) current.push_back(aux.independent[p]);
      out.paths.push_back(current);
      continue;
    }
    if (p == kFree) {
      throw Error(ErrorCode::kMalformedMatching, "cover vertex on a 1-bit is unmatched");
    }
    if (how[i] == AuxRule::kBridge) current.push_back(aux.independent[p]);
  }
  for (std::size_t x = 0; x < aux.independent.size(); ++x) {
    if (!right_used[x]) out.paths.push_back({aux.independent[x]});
  }
  (void)g;
  return out;
}

PathSystem solve_upp_vc(const Graph& g, const UppVcOptions& options) {
  if (g.is_directed()) {
    throw Error(ErrorCode::kUnsupportedInput, "vertex-cover algorithm handles undirected graphs");
  }
  PathSystem result{{}, {PathKind::kUnrestricted, CoverMode::kPartition}};
  for (const auto& comp : connected_components(g)) {
    Graph sub = g.induced_subgraph(comp);
    for (const auto& p : solve_component(sub, options)) {
      Path q;
      for (Vertex v : p) q.push_back(comp[v]);
      result.paths.push_back(std::move(q));
    }
  }
  std::sort(result.paths.begin(), result.paths.end());
  if (!verify(g, result).valid()) {
    throw Error(ErrorCode::kMalformedMatching, "reconstructed partition failed verification");
  }
  return result;
}

}  // namespace pathpart
