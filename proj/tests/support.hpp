#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pathpart/checker.hpp"
#include "pathpart/graph.hpp"

namespace pathpart::testkit {

using Rng = std::mt19937_64;

Graph random_undirected(std::size_t n, double prob, Rng& rng);
// Arcs only go forward along a random permutation.
Graph random_dag(std::size_t n, double prob, Rng& rng);
// Each ordered pair independently; antiparallel arcs allowed.
Graph random_digraph(std::size_t n, double prob, Rng& rng);
Graph random_tournament(std::size_t n, Rng& rng);
// Random graph whose vertex cover number is at most vc: every edge touches
// one of the first vc vertices, then vertex ids are shuffled.
Graph random_small_vc(std::size_t n, std::size_t vc, double prob, Rng& rng);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
// All labelled undirected graphs on n vertices, by edge bitmask.
std::vector<Graph> all_graphs(std::size_t n);

std::vector<Variant> all_variants();
std::string describe(const Graph& g);

// Every path of the kind, as vertex sequences (both orientations of an
// undirected path are listed). Uses its own BFS and adjacency tests.
std::vector<Path> brute_paths(const Graph& g, PathKind kind);

// Optimum by dynamic programming over vertex subsets; n <= 12.
std::size_t brute_optimum(const Graph& g, Variant variant);

// Type classes counted directly from neighbourhoods.
std::size_t brute_nd(const Graph& g);
std::size_t brute_dnd(const Graph& g);

std::size_t brute_vertex_cover(const Graph& g);
std::size_t longest_induced_path(const Graph& g);
bool has_clique(const Graph& g, std::size_t k);
// Partition of V into induced paths on exactly four vertices.
bool has_induced_p4_partition(const Graph& g);

}  // namespace pathpart::testkit
