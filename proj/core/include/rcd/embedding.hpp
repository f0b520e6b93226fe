#pragma once

#include <vector>

#include "rcd/graph.hpp"

namespace rcd {

// Dart 2e+b is the half of edge e leaving endpoint b (b = 0 is edges()[e].first).
using Dart = int;
constexpr int dart_edge(Dart d) { return d >> 1; }
constexpr int dart_end(Dart d) { return d & 1; }
constexpr Dart make_dart(int e, int end) { return 2 * e + end; }
constexpr Dart reverse(Dart d) { return d ^ 1; }

// One boundary walk: a dart orbit, or a lone isolated vertex.
struct FacialWalk {
  std::vector<Dart> darts;
  Vertex isolated = -1;
};

struct FaceBoundary {
  int face = -1;
  VertexSet vertices;
  std::vector<int> edges;        // sorted edge ids
  std::vector<Edge> edge_pairs;  // endpoints of edges, same order
};

// Rotation system plus a grouping of boundary walks into faces. Walks of a
// connected embedding are its faces; a face of a disconnected embedding may
// own several walks. Genus is taken per component, so V - E + W = 2C - 2g
// with W the number of walks.
class Embedding {
 public:
  Embedding() = default;
  // rotation[v] lists the darts leaving v in cyclic order. walk_group maps
  // walk index to an arbitrary face label; empty means one face per walk.
  // outer_face indexes the resulting faces and may be -1 only for n = 0.
  Embedding(Graph g, std::vector<std::vector<Dart>> rotation, int outer_face,
            std::vector<int> walk_group = {});

  const Graph& graph() const { return graph_; }
  const std::vector<std::vector<Dart>>& rotation() const { return rotation_; }
  Vertex tail(Dart d) const;
  Vertex head(Dart d) const;
  Dart rotation_successor(Dart d) const { return succ_[d]; }
  Dart next_in_face(Dart d) const { return succ_[reverse(d)]; }

  const std::vector<FacialWalk>& walks() const { return walks_; }
  const std::vector<int>& walk_face() const { return walk_face_; }
  int num_faces() const { return static_cast<int>(boundaries_.size()); }
  int outer_face() const { return outer_; }
  int face_of_dart(Dart d) const { return walk_face_[dart_walk_[d]]; }
  const FaceBoundary& boundary(int f) const { return boundaries_[f]; }
  const std::vector<int>& faces_at(Vertex v) const { return faces_at_[v]; }
  int genus() const { return genus_; }
  int num_components() const { return components_; }
  // True when some face owns more than one walk.
  bool grouped() const { return static_cast<int>(walks_.size()) != num_faces(); }

  Embedding with_outer_face(int f) const;

 private:
  Graph graph_;
  std::vector<std::vector<Dart>> rotation_;
  std::vector<Dart> succ_;
  std::vector<FacialWalk> walks_;
  std::vector<int> dart_walk_;
  std::vector<int> walk_face_;
  std::vector<FaceBoundary> boundaries_;
  std::vector<std::vector<int>> faces_at_;
  int outer_ = -1;
  int genus_ = 0;
  int components_ = 0;
};

// Dart orbits ordered by smallest dart, then isolated vertices by id.
std::vector<FacialWalk> trace_walks(const Graph& g, const std::vector<std::vector<Dart>>& rotation);

// Rotation restricted to kept vertices and edges. Faces of the parent are
// merged across every deleted edge and around every deleted vertex; the
// resulting regions decide which walks share a face and which face is outer.
struct SubEmbedding {
  Embedding embedding;
  std::vector<Vertex> to_parent;          // sorted
  std::vector<int> edge_to_parent;
  std::vector<int> parent_face_to_local;  // -1 when the region has no walk

  Vertex local(Vertex parent) const;
  VertexSet lift(const VertexSet& local_set) const;
  VertexSet lower(const VertexSet& parent_set) const;  // drops absent vertices
};

SubEmbedding sub_embedding(const Embedding& emb, const std::vector<char>& keep_vertex,
                           const std::vector<char>& keep_edge);
SubEmbedding induced_embedding(const Embedding& emb, const VertexSet& vertices);

// Boundary of the face is disconnected.
bool is_singular(const FaceBoundary& b);
// For every face o and every other face f of the boundary subgraph of o,
// V(boundary f) lies in one component of that subgraph.
bool is_minimal(const Embedding& emb);

// Vertex-face incidence graph: vertex v is node v, face f is node n + f.
Graph vfi_graph(const Embedding& emb);

struct VfNode {
  bool is_face = false;
  int id = 0;
};

// Cost of a path is its number of edges plus the weights of the faces on it
// (endpoints included). -1 when unreachable.
int weighted_vf_distance(const Embedding& emb, const std::vector<int>& face_weight, VfNode a, VfNode b);
std::vector<int> weighted_vf_distances(const Embedding& emb, const std::vector<int>& face_weight, VfNode a);
// Maximum over all vertex/face pairs; -1 if the incidence graph is disconnected.
int weighted_vf_diameter(const Embedding& emb, const std::vector<int>& face_weight);

struct RadialLayering {
  std::vector<VertexSet> layers;  // layers[i - 1] is L_i
  std::vector<int> index;         // vertex -> its layer, 1-based

  int count() const { return static_cast<int>(layers.size()); }
  const VertexSet& layer(int i) const;  // empty outside 1..count()
  VertexSet at_least(int t) const;
  VertexSet range(int lo, int hi) const;
};

// L_i holds the vertices at incidence distance 2i - 1 from the outer face.
RadialLayering radial_layering(const Embedding& emb);
// L_i holds the vertices on the outer face once L_1..L_{i-1} are deleted.
RadialLayering radial_layering_by_peeling(const Embedding& emb);

struct PeeledFace {
  int t = 0;
  SubEmbedding sub;          // G[L_t ∪ L_{t+1} ∪ ...]
  int face = -1;             // outer face of sub
  FaceBoundary boundary;     // in parent ids
};

// Throws InternalError if the boundary of the peeled face differs from L_t.
PeeledFace peeled_outer_face(const Embedding& emb, const RadialLayering& layering, int t);

}  // namespace rcd
