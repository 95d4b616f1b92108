#include <algorithm>
#include <set>

#include "doctest.h"
#include "pathpart/error.hpp"
#include "pathpart/ilp.hpp"
#include "pathpart/nd.hpp"
#include "pathpart/oracle.hpp"
#include "pathpart/vc.hpp"
#include "support.hpp"

using namespace pathpart;
using namespace pathpart::testkit;

namespace {

// v = 0, v' = 1, v_1..v_{d-1} = 2..d.
Graph g_d(std::size_t d) {
  std::vector<Edge> arcs;
  for (Vertex i = 2; i + 1 <= d; ++i) arcs.push_back({i, i + 1});
  auto last = static_cast<Vertex>(d);
  arcs.push_back({last, 0});
  arcs.push_back({last, 1});
  arcs.push_back({0, 2});
  arcs.push_back({1, 2});
  return Graph::directed(d + 1, arcs);
}

Graph bidirected(const Graph& g) {
  std::vector<Edge> arcs;
  for (auto [u, v] : g.edges()) {
    arcs.push_back({u, v});
    arcs.push_back({v, u});
  }
  return Graph::directed(g.order(), arcs);
}

bool dnd_related(const Graph& g, Vertex u, Vertex v) {
  for (Vertex w = 0; w < g.order(); ++w) {
    if (w == u || w == v) continue;
    if (g.has_edge(u, w) != g.has_edge(v, w) || g.has_edge(w, u) != g.has_edge(w, v)) return false;
  }
  return g.has_edge(u, v) == g.has_edge(v, u);
}

NdClassification classes_for(const Graph& g) { return g.is_directed() ? dnd_classes(g) : nd_classes(g); }

using CountKey = std::vector<std::uint32_t>;

CountKey project(const NdClassification& cls, const Path& p, bool with_edges) {
  const auto d = cls.size();
  CountKey key(d, 0);
  for (auto v : p) ++key[cls.class_of[v]];
  if (with_edges) {
    std::vector<std::uint32_t> e(d * d, 0);
    for (std::size_t i = 1; i < p.size(); ++i) {
      auto a = cls.class_of[p[i - 1]], b = cls.class_of[p[i]];
      if (!cls.directed && a > b) std::swap(a, b);
      ++e[a * d + b];
    }
    key.insert(key.end(), e.begin(), e.end());
  }
  return key;
}

Graph random_any(std::size_t n, int flavour, Rng& rng) {
  switch (flavour % 3) {
    case 0: return random_undirected(n, 0.45, rng);
    case 1: return random_dag(n, 0.4, rng);
    default: return random_digraph(n, 0.35, rng);
  }
}

}  // namespace

TEST_CASE("nd classes of small graphs") {
  auto k5 = nd_classes(complete_graph(5));
  CHECK(k5.size() == 1);
  CHECK(k5.kinds[0] == ClassKind::kClique);
  auto empty = nd_classes(Graph::undirected(5, {}));
  CHECK(empty.size() == 1);
  CHECK(empty.kinds[0] == ClassKind::kIndependent);
  auto p3 = nd_classes(path_graph(3));
  CHECK(p3.classes == std::vector<std::vector<Vertex>>{{0, 2}, {1}});
  CHECK(nd_classes(path_graph(4)).size() == 4);
  auto c4 = nd_classes(cycle_graph(4));
  CHECK(c4.classes == std::vector<std::vector<Vertex>>{{0, 2}, {1, 3}});
  CHECK(c4.quotient[0][1]);
  CHECK(c4.edge_budget(0, 1) == 4);
  CHECK(k5.edge_budget(0, 0) == 10);
}

TEST_CASE("dnd classes") {
  for (std::size_t n = 1; n <= 6; ++n) CHECK(dnd_classes(bidirected(complete_graph(n))).size() == 1);
  Rng rng(2);
  for (std::size_t n = 1; n <= 7; ++n) {
    auto t = random_tournament(n, rng);
    CHECK(dnd_classes(t).size() == n);
    CHECK(brute_dnd(t) == n);
  }
  for (std::size_t d = 2; d <= 7; ++d) {
    auto cls = dnd_classes(g_d(d));
    CHECK(cls.size() == d);
    CHECK(cls.class_of[0] == cls.class_of[1]);
    CHECK(std::count(cls.class_of.begin(), cls.class_of.end(), cls.class_of[0]) == 2);
    CHECK(all_pairs_distances(g_d(d)).max_finite() == d);
  }
}

TEST_CASE("the dnd relation is an equivalence and classes are cliques or independent sets") {
  Rng rng(10);
  for (int trial = 0; trial < 250; ++trial) {
    std::size_t n = 1 + trial % 9;
    auto g = trial % 4 == 0 ? random_undirected(n, 0.4, rng) : random_digraph(n, 0.35, rng);
    auto dg = g.is_directed() ? g : bidirected(g);
    for (Vertex u = 0; u < n; ++u) {
      CHECK(dnd_related(dg, u, u));
      for (Vertex v = 0; v < n; ++v) {
        CHECK(dnd_related(dg, u, v) == dnd_related(dg, v, u));
        for (Vertex w = 0; w < n; ++w)
          if (dnd_related(dg, u, v) && dnd_related(dg, v, w)) CHECK(dnd_related(dg, u, w));
      }
    }
    auto cls = dnd_classes(g);
    CHECK(cls.size() == brute_dnd(dg));
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v) CHECK((cls.class_of[u] == cls.class_of[v]) == dnd_related(dg, u, v));
    for (std::size_t c = 0; c < cls.size(); ++c) {
      const auto& members = cls.classes[c];
      for (auto a : members)
        for (auto b : members) {
          if (a == b) continue;
          bool clique = g.has_edge(a, b) && g.has_edge(b, a);
          bool indep = !g.has_edge(a, b) && !g.has_edge(b, a);
          if (g.is_directed()) CHECK((cls.kinds[c] == ClassKind::kClique ? clique : indep));
          else CHECK((cls.kinds[c] == ClassKind::kClique ? g.has_edge(a, b) : !g.has_edge(a, b)));
        }
    }
    if (!g.is_directed()) CHECK(nd_classes(g).size() == brute_nd(g));
  }
}

TEST_CASE("diameter and longest induced path are bounded by nd and dnd") {
  Rng rng(14);
  int connected = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + trial % 10;
    auto g = random_undirected(n, 0.35, rng);
    auto nd = nd_classes(g).size();
    if (connected_components(g).size() == 1) {
      ++connected;
      CHECK(all_pairs_distances(g).max_finite() <= nd);
    }
    if (n <= 9) CHECK(longest_induced_path(g) - 1 <= nd);
    auto dg = random_digraph(std::min<std::size_t>(n, 9), 0.3, rng);
    auto dnd = dnd_classes(dg).size();
    CHECK(longest_induced_path(dg) - 1 <= dnd);
    CHECK(nd_classes(underlying_undirected(dg)).size() <= dnd);
  }
  CHECK(connected > 100);
}

TEST_CASE("dnd is at most 4^vc + vc") {
  Rng rng(15);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 250; ++trial) {
    std::size_t n = 2 + trial % 9, vc = 1 + trial % 3;
    auto base = random_small_vc(n, vc, 0.6, rng);
    std::vector<Edge> arcs;
    for (auto [u, v] : base.edges()) {
      int style = static_cast<int>(coin(rng)) + 2 * static_cast<int>(coin(rng));
      if (style != 1) arcs.push_back({u, v});
      if (style != 0) arcs.push_back({v, u});
    }
    auto g = Graph::directed(n, arcs);
    auto c = brute_vertex_cover(underlying_undirected(g));
    REQUIRE(c <= 3);
    std::size_t bound = 1;
    for (std::size_t i = 0; i < c; ++i) bound *= 4;
    CHECK(dnd_classes(g).size() <= bound + c);
  }
}

TEST_CASE("path class enumeration examples") {
  auto k4 = complete_graph(4);
  auto cls = nd_classes(k4);
  for (auto kind : {PathKind::kShortest, PathKind::kInduced}) {
    auto vecs = enumerate_path_classes(k4, cls, kind);
    std::set<CountKey> got;
    for (const auto& v : vecs) got.insert(v.counts);
    CHECK(got == std::set<CountKey>{{1}, {2}});
  }
  auto p3 = path_graph(3);
  auto vecs = enumerate_path_classes(p3, nd_classes(p3), PathKind::kShortest);
  std::set<CountKey> got;
  for (const auto& v : vecs) got.insert(v.counts);
  CHECK(got == std::set<CountKey>{{1, 0}, {0, 1}, {1, 1}, {2, 1}});
  CHECK_THROWS_AS(enumerate_path_classes(p3, nd_classes(p3), PathKind::kUnrestricted), Error);

  for (std::size_t d = 2; d <= 6; ++d) {
    auto g = g_d(d);
    auto dc = dnd_classes(g);
    auto full = [&](PathKind kind) {
      for (const auto& v : enumerate_path_classes(g, dc, kind))
        if (v.sequence.size() == d + 1 && v.counts[dc.class_of[0]] == 2) return true;
      return false;
    };
    CHECK(full(PathKind::kShortest));
    // For d = 2 the back arc v_1 -> v' joins consecutive vertices.
    CHECK(full(PathKind::kInduced) == (d == 2));
  }
}

TEST_CASE("path class vectors are exactly the projections of concrete paths") {
  Rng rng(16);
  for (int trial = 0; trial < 150; ++trial) {
    auto g = random_any(1 + trial % 8, trial, rng);
    auto cls = classes_for(g);
    for (auto kind : {PathKind::kShortest, PathKind::kInduced}) {
      for (bool edges : {false, true}) {
        std::set<CountKey> brute, lib;
        for (const auto& p : brute_paths(g, kind)) brute.insert(project(cls, p, edges));
        for (const auto& v : enumerate_path_classes(g, cls, kind, edges)) {
          auto key = v.counts;
          if (edges) key.insert(key.end(), v.edge_counts.begin(), v.edge_counts.end());
          lib.insert(key);
        }
        CHECK_MESSAGE(brute == lib, describe(g));
      }
    }
  }
}

TEST_CASE("ilp construction and solving") {
  auto k3 = complete_graph(3);
  auto cls = nd_classes(k3);
  auto vecs = enumerate_path_classes(k3, cls, PathKind::kShortest);
  auto ilp = build_ilp(cls, vecs, {PathKind::kShortest, CoverMode::kPartition});
  REQUIRE(ilp.num_vars() == 2);
  REQUIRE(ilp.rows.size() == 1);
  CHECK(ilp.rows[0].op == RowOp::kEqual);
  CHECK(ilp.rows[0].rhs == 3);
  auto coeffs = ilp.rows[0].coeffs;
  std::sort(coeffs.begin(), coeffs.end());
  CHECK(coeffs == std::vector<std::int64_t>{1, 2});
  auto z = solve_ilp(ilp);
  REQUIRE(z);
  CHECK(z->at(0) + z->at(1) == 2);
  CHECK(z->at(0) == 1);
  CHECK(z->at(1) == 1);
  auto sys = reconstruct(k3, cls, *z, vecs, {PathKind::kShortest, CoverMode::kPartition});
  CHECK(sys.size() == 2);
  CHECK(verify(k3, sys).valid());

  auto empty = Graph::undirected(5, {});
  auto ec = nd_classes(empty);
  auto eilp = build_ilp(ec, enumerate_path_classes(empty, ec, PathKind::kInduced),
                        {PathKind::kInduced, CoverMode::kPartition});
  auto ez = solve_ilp(eilp);
  REQUIRE(ez);
  CHECK(ez->at(0) == 5);

  IlpInstance parity{{1}, {{{2}, RowOp::kEqual, 3}}};
  CHECK(!solve_ilp(parity));

  auto c4 = cycle_graph(4);
  auto cc = nd_classes(c4);
  auto cvecs = enumerate_path_classes(c4, cc, PathKind::kShortest, true);
  auto ed = build_ilp(cc, cvecs, {PathKind::kShortest, CoverMode::kEdgeDisjointCover});
  CHECK(ed.rows.size() > cc.size());
  bool has_le = std::any_of(ed.rows.begin(), ed.rows.end(), [](const IlpRow& r) { return r.op == RowOp::kLessEqual; });
  CHECK(has_le);
  auto text = to_lp_text(ed);
  CHECK(text.rfind("min", 0) == 0);
  CHECK(text.find("<=") != std::string::npos);
}

TEST_CASE("ilp solutions at a value are enumerated completely") {
  IlpInstance ilp{{1, 1, 1}, {{{1, 2, 3}, RowOp::kEqual, 6}}};
  std::set<std::vector<std::int64_t>> got;
  enumerate_ilp_solutions(ilp, 3, [&](const std::vector<std::int64_t>& z) {
    got.insert(z);
    return true;
  });
  CHECK(got == std::set<std::vector<std::int64_t>>{{0, 3, 0}, {1, 1, 1}});
}

TEST_CASE("solve_nd examples") {
  CHECK(solve_nd(cycle_graph(6), {PathKind::kShortest, CoverMode::kPartition}).size() == 2);
  std::vector<Edge> k33;
  for (Vertex a = 0; a < 3; ++a)
    for (Vertex b = 3; b < 6; ++b) k33.push_back({a, b});
  auto g = Graph::undirected(6, k33);
  Variant ipp{PathKind::kInduced, CoverMode::kPartition};
  CHECK(solve_nd(g, ipp).size() == solve_exact(g, ipp).size());
  CHECK(solve_nd(bidirected(cycle_graph(4)), {PathKind::kShortest, CoverMode::kPartition}).size() == 2);
  CHECK_THROWS_AS(solve_nd(g, {PathKind::kUnrestricted, CoverMode::kPartition}), Error);
}

TEST_CASE("solve_nd matches the oracle on every shortest and induced variant") {
  Rng rng(18);
  for (int trial = 0; trial < 120; ++trial) {
    auto g = random_any(1 + trial % 8, trial, rng);
    for (auto v : all_variants()) {
      if (v.kind == PathKind::kUnrestricted) continue;
      auto sys = solve_nd(g, v);
      CHECK(verify(g, sys).valid());
      CHECK_MESSAGE(sys.size() == solve_exact(g, v).size(), describe(g));
    }
  }
}
