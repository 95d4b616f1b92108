#include "pathpart/nd.hpp"

#include <algorithm>

namespace pathpart {
namespace {

// a \ {skip} == b \ {skip2} for sorted lists.
bool equal_except(std::span<const Vertex> a, Vertex skip_a, std::span<const Vertex> b, Vertex skip_b) {
  auto ia = a.begin(), ib = b.begin();
  for (;;) {
    while (ia != a.end() && *ia == skip_a) ++ia;
    while (ib != b.end() && *ib == skip_b) ++ib;
    if (ia == a.end() || ib == b.end()) return ia == a.end() && ib == b.end();
    if (*ia != *ib) return false;
    ++ia;
    ++ib;
  }
}

template <typename Same>
NdClassification classify(const Graph& g, bool directed, Same same) {
  NdClassification cls;
  cls.directed = directed;
  const auto n = g.order();
  cls.class_of.assign(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    bool placed = false;
    for (std::uint32_t c = 0; c < cls.classes.size(); ++c) {
      if (same(cls.classes[c].front(), v)) {
        cls.classes[c].push_back(v);
        cls.class_of[v] = c;
        placed = true;
        break;
      }
    }
    if (!placed) {
      cls.class_of[v] = static_cast<std::uint32_t>(cls.classes.size());
      cls.classes.push_back({v});
    }
  }
  const auto d = cls.classes.size();
  cls.kinds.assign(d, ClassKind::kIndependent);
  cls.quotient.assign(d, std::vector<bool>(d, false));
  for (std::uint32_t i = 0; i < d; ++i) {
    const auto& c = cls.classes[i];
    if (c.size() >= 2 && g.has_edge(c[0], c[1])) cls.kinds[i] = ClassKind::kClique;
    for (std::uint32_t j = 0; j < d; ++j) {
      if (i != j) cls.quotient[i][j] = g.has_edge(c[0], cls.classes[j][0]);
    }
  }
  return cls;
}

}  // namespace

std::uint64_t NdClassification::edge_budget(std::uint32_t i, std::uint32_t j) const {
  std::uint64_t a = classes[i].size(), b = classes[j].size();
  if (i == j) {
    if (kinds[i] != ClassKind::kClique) return 0;
    return directed ? a * (a - 1) : a * (a - 1) / 2;
  }
  return quotient[i][j] ? a * b : 0;
}

NdClassification nd_classes(const Graph& g) {
  if (g.is_directed()) return nd_classes(underlying_undirected(g));
  return classify(g, false, [&](Vertex u, Vertex v) {
    return equal_except(g.neighbors(u), v, g.neighbors(v), u);
  });
}

NdClassification dnd_classes(const Graph& g) {
  if (!g.is_directed()) return nd_classes(g);
  return classify(g, true, [&](Vertex u, Vertex v) {
    return g.has_edge(u, v) == g.has_edge(v, u) &&
           equal_except(g.predecessors(u), v, g.predecessors(v), u) &&
           equal_except(g.successors(u), v, g.successors(v), u);
  });
}

}  // namespace pathpart
