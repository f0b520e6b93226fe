#pragma once

#include <string>

#include "rcd/decompose.hpp"
#include "rcd/graph.hpp"
#include "rcd/tree_decomposition.hpp"

namespace rcd {

std::string to_dot(const Graph& g);
// Vertices filled by class; unclassified vertices stay white.
std::string to_dot(const Rcd& rcd);
// One node per bag, labelled with its vertices.
std::string to_dot(const TreeDecomposition& td);

}  // namespace rcd
