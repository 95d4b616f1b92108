#include "pathpart/reductions.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_map>

#include "pathpart/error.hpp"

namespace pathpart {

namespace {

// Labelled vertex factory; arcs are deduplicated so overlapping rules are
// harmless.
class Builder {
 public:
  Vertex add(std::string label) {
    auto id = static_cast<Vertex>(labels_.size());
    ids_.emplace(label, id);
    labels_.push_back(std::move(label));
    return id;
  }
  Vertex at(const std::string& label) const { return ids_.at(label); }
  void arc(Vertex u, Vertex v) { arcs_.insert({u, v}); }

  Graph directed() const {
    std::vector<Edge> arcs(arcs_.begin(), arcs_.end());
    return Graph::directed(labels_.size(), arcs);
  }
  Graph undirected() const {
    std::set<Edge> uniq;
    for (auto [u, v] : arcs_) uniq.insert({std::min(u, v), std::max(u, v)});
    std::vector<Edge> edges(uniq.begin(), uniq.end());
    return Graph::undirected(labels_.size(), edges);
  }
  std::vector<std::string> take_labels() { return std::move(labels_); }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Vertex> ids_;
  std::set<Edge> arcs_;
};

std::string num(std::size_t v) { return std::to_string(v); }

}  // namespace

void validate(const ThreeDmInstance& inst) {
  if (inst.p == 0) throw Error(ErrorCode::kMalformedInstance, "3-DM instance needs p >= 1");
  std::vector<std::uint32_t> count(3 * static_cast<std::size_t>(inst.p), 0);
  std::set<std::array<std::uint32_t, 3>> seen;
  for (const auto& t : inst.triples) {
    for (int s = 0; s < 3; ++s) {
      if (t[s] >= inst.p) throw Error(ErrorCode::kMalformedInstance, "3-DM element out of range");
      if (++count[s * inst.p + t[s]] > 3)
        throw Error(ErrorCode::kMalformedInstance, "3-DM element occurs more than three times");
    }
    if (!seen.insert(t).second) throw Error(ErrorCode::kMalformedInstance, "repeated 3-DM triple");
  }
}

bool has_perfect_matching(const ThreeDmInstance& inst) {
  validate(inst);
  const auto p = inst.p;
  std::vector<bool> used(3 * static_cast<std::size_t>(p), false);
  std::function<bool(std::uint32_t)> rec = [&](std::uint32_t x) -> bool {
    if (x == p) return true;
    for (const auto& t : inst.triples) {
      if (t[0] != x || used[p + t[1]] || used[2 * p + t[2]]) continue;
      used[p + t[1]] = used[2 * p + t[2]] = true;
      if (rec(x + 1)) return true;
      used[p + t[1]] = used[2 * p + t[2]] = false;
    }
    return false;
  };
  return rec(0);
}

std::optional<Vertex> ReductionOutput::find(const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) return std::nullopt;
  return static_cast<Vertex>(it - labels.begin());
}

ReductionOutput gen_3dm_to_dagspp(const ThreeDmInstance& inst, std::vector<Orientation> orientation,
                                  PathKind kind) {
  validate(inst);
  const auto q = inst.triples.size();
  if (orientation.empty()) orientation.assign(q, Orientation::kClockwise);
  if (orientation.size() != q)
    throw Error(ErrorCode::kMalformedInstance, "one orientation per triple required");
  if (kind == PathKind::kUnrestricted)
    throw Error(ErrorCode::kUnsupportedInput, "3-DM reduction targets shortest or induced paths");

  Builder b;
  std::vector<Vertex> elem[3];
  const char* side = "xyz";
  for (int s = 0; s < 3; ++s)
    for (std::uint32_t e = 0; e < inst.p; ++e) elem[s].push_back(b.add(std::string(1, side[s]) + "_" + num(e + 1)));

  for (std::size_t i = 0; i < q; ++i) {
    Vertex l[4][4];
    for (int r = 1; r <= 3; ++r)
      for (int c = 1; c <= 3; ++c) l[r][c] = b.add("l_" + num(r) + num(c) + "^" + num(i + 1));
    const std::pair<int, int> internal[][2] = {
        {{1, 1}, {1, 2}}, {{1, 2}, {1, 3}}, {{2, 1}, {2, 2}}, {{2, 2}, {2, 3}},
        {{2, 1}, {3, 3}}, {{3, 1}, {3, 2}}, {{3, 2}, {3, 3}}, {{1, 3}, {2, 3}},
        {{2, 3}, {3, 3}}, {{1, 1}, {2, 3}},
    };
    for (const auto& a : internal) b.arc(l[a[0].first][a[0].second], l[a[1].first][a[1].second]);
    const auto& t = inst.triples[i];
    b.arc(l[1][2], elem[0][t[0]]);
    bool cw = orientation[i] == Orientation::kClockwise;
    b.arc(l[2][2], cw ? elem[2][t[2]] : elem[1][t[1]]);
    b.arc(l[3][2], cw ? elem[1][t[1]] : elem[2][t[2]]);
  }

  ReductionOutput out;
  out.kind = ReductionKind::kThreeDm;
  out.graph = b.directed();
  out.k_target = inst.p + 3 * q;
  out.variant = {kind, CoverMode::kPartition};
  out.labels = b.take_labels();
  out.base_order = inst.p;
  out.triple_count = q;
  return out;
}

ReductionOutput gen_clique_to_dagspp(const Graph& g, std::size_t k) {
  if (g.is_directed()) throw Error(ErrorCode::kInvalidGraph, "clique reduction expects an undirected graph");
  const auto n = g.order();
  if (k < 2 || k > n) throw Error(ErrorCode::kBadK, "clique reduction needs 2 <= k <= n");

  Builder b;
  auto col = [&](std::size_t u) { return u == n + 1 ? std::string("n+1") : num(u); };
  auto a = [&](std::size_t r, std::size_t i, std::size_t u) { return "a_" + num(r) + "^{" + num(i) + "," + col(u) + "}"; };
  auto bb = [&](std::size_t r, std::size_t i, std::size_t u) { return "b_" + num(r) + "^{" + num(i) + "," + col(u) + "}"; };
  auto pair = [&](const char* name, std::size_t i, std::size_t j) { return std::string(name) + "_{" + num(i) + "," + num(j) + "}"; };

  // Top and bottom level of each gadget, in wire order.
  std::vector<std::vector<std::vector<Vertex>>> top(k + 1), bottom(k + 1);
  for (std::size_t i = 1; i <= k; ++i) {
    Vertex s = b.add("s_" + num(i)), sp = b.add("s'_" + num(i));
    Vertex tp = b.add("t'_" + num(i)), t = b.add("t_" + num(i));
    b.arc(s, sp);
    b.arc(tp, t);
    top[i].resize(n + 2);
    bottom[i].resize(n + 2);
    top[i][0] = {b.add(a(1, i, 0)), b.add(a(2, i, 0))};
    bottom[i][0] = {b.add(bb(1, i, 0)), b.add(bb(2, i, 0))};
    for (std::size_t u = 1; u <= n; ++u) {
      for (std::size_t r = 1; r <= k; ++r) {
        if (r == i) continue;
        Vertex ar = b.add(a(r, i, u)), br = b.add(bb(r, i, u));
        b.arc(ar, br);
        top[i][u].push_back(ar);
        bottom[i][u].push_back(br);
      }
    }
    for (std::size_t x = 1; x <= k + 2; ++x) top[i][n + 1].push_back(b.add(a(x, i, n + 1)));
    bottom[i][n + 1] = {b.add(bb(1, i, n + 1)), b.add(bb(2, i, n + 1))};
    for (std::size_t u = 0; u <= n + 1; ++u) {
      for (std::size_t w = 1; w < top[i][u].size(); ++w) b.arc(top[i][u][w - 1], top[i][u][w]);
      for (std::size_t w = 1; w < bottom[i][u].size(); ++w) b.arc(bottom[i][u][w - 1], bottom[i][u][w]);
      if (u <= n) {
        b.arc(top[i][u].back(), top[i][u + 1].front());
        b.arc(bottom[i][u].back(), bottom[i][u + 1].front());
      }
      if (u >= 1 && u <= n) b.arc(top[i][u - 1].back(), bottom[i][u + 1].front());
    }
    b.arc(sp, top[i][0].front());
    b.arc(bottom[i][n + 1].back(), tp);
  }
  for (std::size_t i = 1; i <= k; ++i) {
    for (std::size_t j = i + 1; j <= k; ++j) {
      Vertex s = b.add(pair("s", i, j)), sp = b.add(pair("s'", i, j));
      Vertex tp = b.add(pair("t'", i, j)), t = b.add(pair("t", i, j));
      b.arc(s, sp);
      b.arc(tp, t);
    }
  }

  // Verifiers: column terminals reach wire j of row i and leave from wire i
  // of row j; cross arcs encode the edges of g.
  for (std::size_t i = 1; i <= k; ++i) {
    for (std::size_t j = i + 1; j <= k; ++j) {
      Vertex sp = b.at(pair("s'", i, j)), tp = b.at(pair("t'", i, j));
      for (std::size_t u = 1; u <= n; ++u) {
        b.arc(sp, b.at(a(j, i, u)));
        b.arc(b.at(bb(i, j, u)), tp);
      }
      for (auto [u, v] : g.edges()) {
        b.arc(b.at(bb(j, i, u + 1)), b.at(a(i, j, v + 1)));
        b.arc(b.at(bb(j, i, v + 1)), b.at(a(i, j, u + 1)));
      }
    }
  }

  // Shortest path enforcers.
  auto row_end = [&](std::size_t l) { return std::array{b.at("t_" + num(l)), b.at("t'_" + num(l))}; };
  for (std::size_t i = 1; i <= k; ++i) {
    for (const auto& src : {"s_", "s'_"}) {
      Vertex from = b.at(src + num(i));
      for (std::size_t l = i + 1; l <= k; ++l)
        for (Vertex to : row_end(l)) b.arc(from, to);
    }
  }
  for (std::size_t i = 1; i <= k; ++i) {
    for (std::size_t j = i + 1; j <= k; ++j) {
      for (const auto* src : {"s", "s'"}) {
        Vertex from = b.at(pair(src, i, j));
        for (std::size_t p = 1; p < j; ++p)
          if (p != i) b.arc(from, b.at(pair("t'", p, j)));
        for (std::size_t l = i; l <= k; ++l)
          for (Vertex to : row_end(l)) b.arc(from, to);
      }
    }
  }
  for (std::size_t i = 1; i <= k; ++i) {
    for (Vertex from : bottom[i][0]) {
      for (std::size_t m = i; m <= k; ++m)
        for (Vertex to : row_end(m)) b.arc(from, to);
      for (std::size_t h = std::max<std::size_t>(i, 2); h <= k; ++h)
        for (std::size_t m = 1; m < h; ++m) b.arc(from, b.at(pair("t", m, h)));
    }
  }
  for (std::size_t i = 1; i <= k; ++i) {
    std::vector<Vertex> from;
    for (std::size_t j = 1; j < i; ++j)
      for (std::size_t u = 0; u <= n; ++u) {
        from.insert(from.end(), top[j][u].begin(), top[j][u].end());
        from.insert(from.end(), bottom[j][u].begin(), bottom[j][u].end());
      }
    for (std::size_t l = 1; l <= i; ++l) {
      from.push_back(b.at("s_" + num(l)));
      from.push_back(b.at("s'_" + num(l)));
      for (std::size_t m = l + 1; m <= k; ++m) {
        from.push_back(b.at(pair("s", l, m)));
        from.push_back(b.at(pair("s'", l, m)));
      }
    }
    for (Vertex f : from)
      for (Vertex to : top[i][n + 1]) b.arc(f, to);
  }

  ReductionOutput out;
  out.kind = ReductionKind::kClique;
  out.graph = b.directed();
  out.k_target = k * (k - 1) / 2 + 3 * k;
  out.variant = {PathKind::kShortest, CoverMode::kPartition};
  out.labels = b.take_labels();
  out.base = g;
  out.clique_k = k;
  return out;
}

ReductionOutput gen_4uipp_to_uspp(const Graph& g) {
  if (g.is_directed()) throw Error(ErrorCode::kInvalidGraph, "4-UIPP reduction expects an undirected graph");
  auto colour = bipartition(g);
  if (!colour) throw Error(ErrorCode::kNotBipartite, "4-UIPP reduction needs a bipartite graph");
  const auto n = g.order();
  if (n == 0 || n % 4 != 0) throw Error(ErrorCode::kBadOrder, "4-UIPP reduction needs order divisible by four");
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) > 3) throw Error(ErrorCode::kBadOrder, "4-UIPP reduction needs maximum degree three");

  Builder b;
  for (Vertex v = 0; v < n; ++v) b.add("v_" + num(v + 1));
  Vertex x[6], y[6];
  for (int i = 1; i <= 5; ++i) x[i] = b.add("x_" + num(i));
  for (int i = 1; i <= 5; ++i) y[i] = b.add("y_" + num(i));
  for (auto [u, v] : g.edges()) b.arc(u, v);
  for (Vertex v = 0; v < n; ++v) {
    bool in_a = (*colour)[v] == 0;
    for (Vertex hub : in_a ? std::array{y[2], y[4]} : std::array{x[2], x[4]}) b.arc(hub, v);
  }
  for (Vertex hx : {x[2], x[4]})
    for (Vertex hy : {y[2], y[4]}) b.arc(hx, hy);
  for (int i = 1; i < 5; ++i) {
    b.arc(x[i], x[i + 1]);
    b.arc(y[i], y[i + 1]);
  }

  ReductionOutput out;
  out.kind = ReductionKind::kFourUipp;
  out.graph = b.undirected();
  out.k_target = n / 4 + 2;
  out.variant = {PathKind::kShortest, CoverMode::kPartition};
  out.labels = b.take_labels();
  out.base_order = n;
  return out;
}

bool ReductionReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const ClaimCheck& c) { return c.passed; });
}

namespace {

void add(ReductionReport& r, std::string name, bool passed, std::string detail) {
  r.checks.push_back({std::move(name), passed, std::move(detail)});
}

void check_count(ReductionReport& r, std::string name, std::size_t got, std::size_t want) {
  add(r, std::move(name), got == want, num(got) + " (expected " + num(want) + ")");
}

void check_dag(ReductionReport& r, const Graph& g) {
  add(r, "dag", g.is_directed() && is_dag(g), g.is_directed() ? "" : "graph is undirected");
}

void check_bipartite(ReductionReport& r, const Graph& g) {
  add(r, "bipartite", bipartition(g).has_value(), "underlying undirected graph");
}

}  // namespace

ReductionReport verify_reduction(const ReductionOutput& out) {
  ReductionReport r;
  const auto& g = out.graph;
  const auto n = g.order();
  switch (out.kind) {
    case ReductionKind::kThreeDm: {
      const auto p = out.base_order, q = out.triple_count;
      check_dag(r, g);
      check_bipartite(r, g);
      std::size_t max_deg = 0;
      for (Vertex v = 0; v < n; ++v) max_deg = std::max(max_deg, g.in_degree(v) + g.out_degree(v));
      add(r, "max_degree", max_deg <= 4, num(max_deg) + " (bound 4)");
      check_count(r, "vertex_count", n, 3 * p + 9 * q);
      check_count(r, "k_target", out.k_target, p + 3 * q);
      break;
    }
    case ReductionKind::kClique: {
      const auto k = out.clique_k;
      const auto kp = k * (k - 1) / 2 + 3 * k;
      check_dag(r, g);
      check_count(r, "k_target", out.k_target, kp);
      std::size_t sources = 0, sinks = 0;
      for (Vertex v = 0; v < n; ++v) {
        sources += g.in_degree(v) == 0;
        sinks += g.out_degree(v) == 0;
      }
      check_count(r, "in_degree_zero", sources, kp - k);
      check_count(r, "out_degree_zero", sinks, kp - k);
      // Wire j of G_{i,u} feeds wire i of G_{j,v} exactly when uv is an edge.
      bool ok = out.base.has_value();
      std::string detail;
      if (ok) {
        const auto& base = *out.base;
        const auto bn = base.order();
        for (std::size_t i = 1; i <= k && ok; ++i)
          for (std::size_t j = i + 1; j <= k && ok; ++j)
            for (Vertex u = 0; u < bn && ok; ++u)
              for (Vertex v = 0; v < bn && ok; ++v) {
                auto from = out.find("b_" + num(j) + "^{" + num(i) + "," + num(u + 1) + "}");
                auto to = out.find("a_" + num(i) + "^{" + num(j) + "," + num(v + 1) + "}");
                if (!from || !to || g.has_edge(*from, *to) != base.has_edge(u, v)) {
                  ok = false;
                  detail = "rows " + num(i) + "," + num(j) + " columns " + num(u + 1) + "," + num(v + 1);
                }
              }
      } else {
        detail = "source graph missing";
      }
      add(r, "connect", ok, detail);
      break;
    }
    case ReductionKind::kFourUipp: {
      check_bipartite(r, g);
      auto deg = degeneracy(g).value;
      add(r, "degeneracy", deg <= 5, num(deg) + " (bound 5)");
      bool connected = connected_components(g).size() == 1;
      auto diam = all_pairs_distances(g).max_finite();
      add(r, "diameter", connected && diam <= 4,
          connected ? num(diam) + " (bound 4)" : std::string("graph is disconnected"));
      check_count(r, "vertex_count", n, out.base_order + 10);
      check_count(r, "k_target", out.k_target, out.base_order / 4 + 2);
      break;
    }
  }
  return r;
}

}  // namespace pathpart
