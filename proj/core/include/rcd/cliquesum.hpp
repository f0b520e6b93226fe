#pragma once

#include <vector>

#include "rcd/decompose.hpp"
#include "rcd/report.hpp"
#include "rcd/tree_decomposition.hpp"

namespace rcd {

// Apex set (global ids) and an embedding of tor(t) - A. Embedding vertex i is
// the i-th smallest vertex of bag(t) \ A.
struct TorsoStructure {
  VertexSet apices;
  Embedding embedding;
};

struct RsInput {
  Graph graph;
  TreeDecomposition td;
  std::vector<TorsoStructure> torsos;
  int h = 0;
};

// Tree decomposition validity, torso/embedding agreement, minimality, and
// the adhesion requirements: |σ(t)| <= h, σ(t) ⊆ A_t, at most three
// non-apex vertices of the parent in each child adhesion, G[γ(t) \ σ(t)]
// connected and σ(t) ⊆ N(γ(t) \ σ(t)).
Report validate_rs(const RsInput& in);

// tor(t) with its apex structure, in bag-local ids.
ApexStructure torso_structure(const RsInput& in, int t);
// tor(t) minus every apex-apex edge whose ends share a non-apex neighbour in
// tor(t). Bag-local ids.
Subgraph build_gt(const RsInput& in, int t);
// For each v in σ(t), its smallest neighbour in bag(t) \ σ(t) within G_t.
VertexSet witness_set(const RsInput& in, int t);
// G_t - σ(t) with apex set A_t \ σ(t) and the witnesses as phi, in ids of
// that graph; to_global maps them back. Empty graph when bag(t) = σ(t).
struct TorsoPiece {
  ApexStructure structure;
  VertexSet phi;
  std::vector<Vertex> to_global;
};
TorsoPiece torso_piece(const RsInput& in, int t);
// classes[t][i] is Z_{i+1} of node t (global ids). Root gets colour 1; a child
// s of t' takes colour i when G_{t'} has an edge inside σ(s) ∩ classes[t'][i-1],
// and inherits the colour of t' otherwise.
std::vector<int> color_tree(const RsInput& in, const std::vector<std::vector<VertexSet>>& classes, int p);
// Partition of V(G) into p classes.
Rcd combine(const RsInput& in, int p);
// For every node t, class i and edge vv' of tor(t) inside the torso class,
// v and v' are joined through Z_i below the children whose adhesion holds
// both. Also checks the same for adhesion pairs of every node of colour i.
Report verify_connected_bottom(const RsInput& in, const Rcd& rcd);

}  // namespace rcd
