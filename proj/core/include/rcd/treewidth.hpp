#pragma once

#include "rcd/graph.hpp"
#include "rcd/tree_decomposition.hpp"

namespace rcd {

struct TwResult {
  int width = -1;
  TreeDecomposition td;
};

inline constexpr int kExactTreewidthLimit = 15;

// Exact treewidth by search over elimination orderings with memoised
// failures. Throws LimitExceeded when g.n() > max_vertices (hard cap 30).
TwResult exact_treewidth(const Graph& g, int max_vertices = kExactTreewidthLimit);
// Min-fill elimination, ties to the smallest id.
TwResult treewidth_upper_bound(const Graph& g);
// Minor-min-width: contract a minimum degree vertex into its minimum degree
// neighbour until nothing is left.
int treewidth_lower_bound(const Graph& g);

}  // namespace rcd
