#pragma once

#include <optional>
#include <vector>

#include "rcd/embedding.hpp"
#include "rcd/keylemma.hpp"
#include "rcd/report.hpp"

namespace rcd {

// G with apex set A and an embedding of G - A. Vertex i of the embedding is
// the i-th smallest non-apex vertex of G.
struct ApexStructure {
  Graph graph;
  VertexSet apices;
  Embedding embedding;
  int h = 0;

  std::vector<Vertex> embedded_vertices() const;
};

// Throws InvalidInput if the embedding does not match G - A or |A| > h.
void validate_apex_structure(const ApexStructure& st);

// Layer bookkeeping for one embedded piece, in ids of the decomposed graph.
struct LayerMeta {
  VertexSet vertices;                 // the piece
  VertexSet phi;
  int c = 0;
  int h = 0;
  int delta = 0;
  std::vector<int> residues;          // q_1 < ... < q_p
  std::vector<int> bad_layers;        // 1-based layer indices
  std::vector<VertexSet> layers;      // layers[i - 1] = L_i
  std::vector<VertexSet> connectors;  // X_t per layer
  std::vector<VertexSet> lplus;       // L_t^+ per layer (empty on bad layers)
  std::vector<VertexSet> phi_t;       // connector seeds per good layer
};

// Per-torso data kept by the clique-sum combiner.
struct TorsoMeta {
  std::vector<std::vector<VertexSet>> classes;  // [node][i] = Z_i of that torso
  std::vector<VertexSet> witnesses;             // [node]
  std::vector<VertexSet> residue;               // [node] = bag minus adhesion minus the torso classes
  std::vector<int> color;                       // [node], 1-based
};

// Z_1..Z_p, pairwise disjoint; residue is everything else.
struct Rcd {
  int p = 0;
  Graph graph;
  std::vector<VertexSet> classes;
  VertexSet residue;
  std::vector<LayerMeta> parts;
  std::optional<TorsoMeta> torsos;
};

struct LayerClassification {
  std::vector<int> bad;   // ascending
  std::vector<char> is_bad;  // [t], 1-based, index 0 unused
};

LayerClassification classify_layers(const Graph& g, const RadialLayering& layering, const VertexSet& phi);

struct Connectors {
  std::vector<VertexSet> x;      // [t - 1]
  std::vector<VertexSet> lplus;  // [t - 1]
  std::vector<VertexSet> phi_t;  // [t - 1]
};

Connectors build_connectors(const Embedding& emb, const RadialLayering& layering, const LayerClassification& lc,
                            const VertexSet& phi);

int rcd_delta(int p, int c, int h);
// The p smallest residues in 1..delta not congruent to a bad layer.
std::vector<int> good_residues(int p, int delta, const std::vector<int>& bad_layers);

std::vector<VertexSet> assemble(const RadialLayering& layering, const Connectors& conn, int p, int delta,
                                const std::vector<int>& residues);

// Connected graph with a minimal embedding; phi is any vertex set.
Rcd decompose_embedded(const Embedding& emb, int p, const VertexSet& phi, int h = 0);
// Runs decompose_embedded on every component of G - A with phi extended by
// the nearest neighbour of each apex in that component.
Rcd decompose_apex(const ApexStructure& st, int p, const VertexSet& phi);

// Disjoint classes, avoidance of N[phi], and phi connected in G - ∪Z.
Report check_embedded_rcd(const Graph& g, const Rcd& rcd, const VertexSet& phi);
// Disjoint classes avoiding A and N[phi \ A], and phi connected in the graph
// obtained from G - ∪Z by dropping apex edges into N(∪Z) \ A.
Report check_apex_rcd(const ApexStructure& st, const Rcd& rcd, const VertexSet& phi);

}  // namespace rcd
