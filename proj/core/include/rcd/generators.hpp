#pragma once

#include <cstdint>
#include <vector>

#include "rcd/cliquesum.hpp"
#include "rcd/decompose.hpp"
#include "rcd/embedding.hpp"

namespace rcd {

// m x m grid, vertex r*m + c, planar rotation, outer face on the boundary.
Embedding grid(int m);
// Grid with every edge subdivided; midpoint of grid edge e is m*m + e.
Embedding subdivided_grid(int m);
// Grid plus a universal apices (adjacent to everything, including each
// other); apex ids follow the grid.
ApexStructure apex_grid(int m, int a);
// Stacked triangulation on n vertices, then seeded edge deletions that keep
// the graph connected; each edge is tried with probability delete_fraction.
Embedding random_planar(int n, std::uint64_t seed, double delete_fraction = 0.3);

// New vertex n joined to a at a corner of the face.
Embedding add_pendant_vertex(const Embedding& emb, int face, Vertex a);
// New edge xy drawn inside the face; x and y must share a walk of it.
Embedding add_chord(const Embedding& emb, int face, Vertex x, Vertex y);

// Star decomposition of the subdivided grid: the root bag holds the grid
// vertices, each child bag one grid edge with its midpoint.
RsInput subdivided_grid_star(int m);

// Incremental clique-sum builder. Piece 0 is the root.
class CliqueSumBuilder {
 public:
  struct Piece {
    Embedding embedded;
    int parent = -1;
    VertexSet adhesion;                             // global ids in the parent's bag
    std::vector<std::vector<Vertex>> adhesion_links; // per adhesion vertex, local embedded vertices
    std::vector<std::vector<Vertex>> apex_links;     // per own apex, local embedded vertices
  };

  // Returns the piece index. Adds chords to the parent's embedding for the
  // non-apex adhesion vertices; throws InvalidInput if no face holds them.
  int add(Piece piece);
  int size() const { return static_cast<int>(pieces_.size()); }
  const Embedding& embedding(int piece) const { return pieces_[piece].embedded; }
  VertexSet embedded_vertices(int piece) const;
  VertexSet apices(int piece) const;
  VertexSet bag(int piece) const;
  RsInput build() const;

 private:
  struct Node {
    Embedding embedded;
    Vertex first = 0;  // global id of local vertex 0
    int parent = -1;
    VertexSet adhesion;
    VertexSet own_apices;
  };
  std::vector<Node> pieces_;
  std::vector<Edge> edges_;
  int n_ = 0;
};

struct CliqueSumOptions {
  int pieces = 3;
  int min_side = 3;
  int max_side = 5;
  bool planar_pieces = false;  // random planar pieces instead of grids
  int max_own_apices = 1;
};

RsInput random_clique_sum(std::uint64_t seed, const CliqueSumOptions& opt = {});

}  // namespace rcd
