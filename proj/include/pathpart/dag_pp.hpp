#pragma once

#include "pathpart/checker.hpp"
#include "pathpart/graph.hpp"

namespace pathpart {

// Minimum unrestricted path partition of a DAG. Throws Error(kNotADag) for
// undirected or cyclic input.
PathSystem solve_dagpp(const Graph& g);

}  // namespace pathpart
