#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rcd/embedding.hpp"
#include "rcd/report.hpp"

namespace rcd {

inline constexpr int kOuterOnly = -1;

enum class PairClass { SingularTypeI, SingularTypeII, Critical, Normal };
const char* to_string(PairClass c);

// The boundary subgraph B of the outer face of G[L_t ∪ L_{t+1} ∪ ...],
// together with its inner faces. Ids are local; to_global is sorted.
struct BoundaryComplex {
  int t = 0;
  int genus = 0;
  Graph graph;
  std::vector<Vertex> to_global;
  std::vector<int> edge_face;                 // inner face on the edge, or kOuterOnly
  std::vector<VertexSet> face_vertices;       // per inner face
  std::vector<std::vector<int>> face_edges;   // per inner face, sorted
  std::vector<char> face_singular;
  std::vector<std::vector<int>> vertex_faces; // inner faces incident to each vertex
  std::vector<char> exit;

  int num_faces() const { return static_cast<int>(face_vertices.size()); }
  Vertex local(Vertex global) const;  // -1 when absent
  VertexSet lift(const VertexSet& local_set) const;
};

// Throws HypothesisViolation if a face of emb incident to L_t is singular.
BoundaryComplex boundary_complex(const Embedding& emb, const RadialLayering& layering, int t);

// Vertices of L_t with a neighbour in L_{t-1}.
VertexSet exits(const Embedding& emb, const RadialLayering& layering, int t);

// The routines below take and return global vertex ids; faces are inner
// face indices of the complex.
int face_side(const BoundaryComplex& bc, Vertex u, Vertex v);
// Vertices reachable from v in B without using edges of the face f.
VertexSet y_set(const BoundaryComplex& bc, int f, Vertex v);
PairClass classify_pair(const BoundaryComplex& bc, int f, Vertex v);
// Simple path from v to an exit in B that never stays on the face of a
// critical pair across that pair's vertex.
std::vector<Vertex> legal_path(const BoundaryComplex& bc, Vertex v);
bool is_legal(const BoundaryComplex& bc, const std::vector<Vertex>& path);

struct NormalSet {
  int face = 0;
  Vertex vertex = 0;
  VertexSet y;
};

struct KeyOutput {
  int t = 0;
  VertexSet phi;
  VertexSet x;
  VertexSet lplus;
  std::vector<std::vector<Vertex>> paths;
  std::vector<NormalSet> normal_sets;
  int outer_only_edges = 0;
};

KeyOutput compute_key_sets(const BoundaryComplex& bc, const VertexSet& phi);
KeyOutput compute_key_sets(const Embedding& emb, const RadialLayering& layering, int t, const VertexSet& phi);

// Checks the output against the layer: connectivity of X to phi and L_{t-1},
// the face-neighbourhood property of the extension, the per-face count
// bounds, path legality and the normal-pair properties.
Report verify_key_conditions(const Embedding& emb, const RadialLayering& layering, const BoundaryComplex& bc,
                             const KeyOutput& out);

}  // namespace rcd
