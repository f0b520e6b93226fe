#pragma once

// Brute-force reference implementations. Each one is written independently of
// the library routine it is compared against and is only meant for tiny inputs.

#include <vector>

#include "rcd/cliquesum.hpp"
#include "rcd/embedding.hpp"
#include "rcd/graph.hpp"
#include "rcd/keylemma.hpp"

namespace rcd::oracle {

// Union-find labels of G[alive]; dead vertices get -1.
std::vector<int> uf_labels(const Graph& g, const std::vector<char>& alive);
// G[s] connected by union-find; the empty set is connected.
bool uf_connected(const Graph& g, const VertexSet& s);
// Same question answered by a transitive closure matrix (n <= 64).
bool closure_connected(const Graph& g, const VertexSet& s);

// Width of the best elimination ordering over all n! orderings (n <= 9).
int treewidth_by_orders(const Graph& g);
// tw(S) = min over v of max(tw(S \ v), |Q(S \ v, v)|) over subsets (n <= 16).
int treewidth_by_subsets(const Graph& g);

// h is a minor of g iff some partial surjection rho: V(g) -> V(h) makes
// g[rho^-1(U')] connected for every connected h[U']. Enumerates all maps.
bool minor_by_maps(const Graph& h, const Graph& g);

// Classification of (f, v) from its definition: simple paths from v that
// avoid the edges of face f are enumerated one by one. Face singularity and
// exits are recomputed from the face edge lists and the layering.
PairClass classify_by_paths(const Embedding& emb, const RadialLayering& layering, const BoundaryComplex& bc, int f,
                            Vertex v);
// Endpoints of simple paths from v avoiding the edges of f (v included).
VertexSet reachable_by_paths(const BoundaryComplex& bc, int f, Vertex v);

// Number of failed checks of the two connected-bottom properties, recomputed
// with union-find over explicit vertex lists.
int connected_bottom_failures(const RsInput& in, const Rcd& rcd);

}  // namespace rcd::oracle
