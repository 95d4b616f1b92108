#include <algorithm>
#include <set>

#include "doctest.h"
#include "pathpart/error.hpp"
#include "pathpart/oracle.hpp"
#include "support.hpp"

using namespace pathpart;
using namespace pathpart::testkit;

namespace {

std::set<Path> as_set(const std::vector<Path>& paths) { return {paths.begin(), paths.end()}; }

const Variant kSpp{PathKind::kShortest, CoverMode::kPartition};
const Variant kIpp{PathKind::kInduced, CoverMode::kPartition};

}  // namespace

TEST_CASE("enumerate valid paths") {
  CHECK(as_set(enumerate_valid_paths(complete_graph(3), PathKind::kInduced, 0)) ==
        std::set<Path>{{0}, {0, 1}, {0, 2}});
  CHECK(as_set(enumerate_valid_paths(path_graph(3), PathKind::kShortest, 0)) ==
        std::set<Path>{{0}, {0, 1}, {0, 1, 2}});
  CHECK(as_set(enumerate_valid_paths(cycle_graph(4), PathKind::kShortest, 0)) ==
        std::set<Path>{{0}, {0, 1}, {0, 3}, {0, 1, 2}, {0, 3, 2}});
}

TEST_CASE("enumerated paths match the brute-force enumeration") {
  Rng rng(4);
  for (int trial = 0; trial < 90; ++trial) {
    std::size_t n = 1 + trial % 7;
    Graph g = trial % 3 == 0 ? random_digraph(n, 0.3, rng) : random_undirected(n, 0.4, rng);
    for (auto kind : {PathKind::kUnrestricted, PathKind::kInduced, PathKind::kShortest}) {
      std::set<Path> lib;
      for (Vertex s = 0; s < n; ++s)
        for (auto& p : enumerate_valid_paths(g, kind, s)) lib.insert(p);
      CHECK(lib == as_set(brute_paths(g, kind)));
    }
  }
}

TEST_CASE("solve_exact examples") {
  for (std::size_t n = 1; n <= 7; ++n)
    for (auto v : all_variants()) CHECK(solve_exact(path_graph(n), v).size() == 1);
  CHECK(solve_exact(complete_graph(4), kIpp).size() == 2);
  CHECK(solve_exact(cycle_graph(6), kSpp).size() == 2);
  CHECK(solve_exact(Graph::undirected(0, {}), kSpp).size() == 0);
}

TEST_CASE("decide examples") {
  auto yes = decide(path_graph(3), kSpp, 1);
  CHECK(yes.yes);
  REQUIRE(yes.witness);
  CHECK(verify(path_graph(3), *yes.witness).valid());
  CHECK(!decide(complete_graph(3), kIpp, 1).yes);
  CHECK(decide(cycle_graph(6), kSpp, 2).yes);
  CHECK(!decide(cycle_graph(6), kSpp, 1).yes);
}

TEST_CASE("budget is enforced") {
  OracleBudget tight;
  tight.max_vertices = 5;
  CHECK_THROWS_AS(solve_exact(path_graph(6), kSpp, tight), Error);
  CHECK(default_max_vertices(CoverMode::kPartition) == 14);
  CHECK(default_max_vertices(CoverMode::kCover) == 10);
  try {
    OracleBudget tiny;
    tiny.node_limit = 3;
    tiny.use_lower_bounds = false;
    Rng rng(1);
    solve_exact(random_undirected(10, 0.5, rng), {PathKind::kInduced, CoverMode::kCover}, tiny);
    FAIL("expected a budget error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kBudgetExceeded);
  }
}

TEST_CASE("oracle agrees with the subset dynamic program") {
  Rng rng(1234);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t n = 1 + trial % 8;
    Graph g;
    switch (trial % 3) {
      case 0: g = random_undirected(n, 0.4, rng); break;
      case 1: g = random_dag(n, 0.4, rng); break;
      default: g = random_digraph(n, 0.3, rng); break;
    }
    for (auto v : all_variants()) {
      auto sys = solve_exact(g, v);
      CHECK_MESSAGE(sys.size() == brute_optimum(g, v), describe(g));
      CHECK(verify(g, sys).valid());
    }
  }
}

TEST_CASE("optima are monotone in kind and mode") {
  Rng rng(77);
  for (int trial = 0; trial < 80; ++trial) {
    std::size_t n = 2 + trial % 7;
    Graph g = trial % 2 ? random_undirected(n, 0.45, rng) : random_dag(n, 0.45, rng);
    for (auto mode : {CoverMode::kPartition, CoverMode::kCover, CoverMode::kEdgeDisjointCover}) {
      auto s = solve_exact(g, {PathKind::kShortest, mode}).size();
      auto i = solve_exact(g, {PathKind::kInduced, mode}).size();
      auto u = solve_exact(g, {PathKind::kUnrestricted, mode}).size();
      CHECK(s >= i);
      CHECK(i >= u);
    }
    for (auto kind : {PathKind::kUnrestricted, PathKind::kInduced, PathKind::kShortest}) {
      auto p = solve_exact(g, {kind, CoverMode::kPartition}).size();
      auto e = solve_exact(g, {kind, CoverMode::kEdgeDisjointCover}).size();
      auto c = solve_exact(g, {kind, CoverMode::kCover}).size();
      CHECK(p >= e);
      CHECK(e >= c);
    }
  }
}

TEST_CASE("lower-bound pruning does not change optima") {
  Rng rng(99);
  OracleBudget plain;
  plain.use_lower_bounds = false;
  for (int trial = 0; trial < 70; ++trial) {
    std::size_t n = 1 + trial % 7;
    Graph g = trial % 2 ? random_undirected(n, 0.4, rng) : random_digraph(n, 0.3, rng);
    for (auto v : all_variants()) CHECK(solve_exact(g, v).size() == solve_exact(g, v, plain).size());
  }
}

TEST_CASE("decide matches the optimum for every k") {
  Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = random_undirected(2 + trial % 6, 0.4, rng);
    for (auto v : all_variants()) {
      auto opt = solve_exact(g, v).size();
      for (std::size_t k = 0; k <= g.order(); ++k) {
        auto d = decide(g, v, k);
        CHECK(d.yes == (opt <= k));
        if (d.yes) {
          REQUIRE(d.witness);
          CHECK(d.witness->size() <= k);
          CHECK(verify(g, *d.witness).valid());
        }
      }
    }
  }
}

TEST_CASE("solve_exact is deterministic") {
  Rng rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = random_undirected(7, 0.4, rng);
    for (auto v : all_variants()) CHECK(solve_exact(g, v).paths == solve_exact(g, v).paths);
  }
}
