#pragma once

#include <string>
#include <vector>

#include "rcd/graph.hpp"

namespace rcd {

// Rooted tree decomposition; nodes are 0..size()-1, parent -1 marks the root.
// Empty bags are allowed.
class TreeDecomposition {
 public:
  TreeDecomposition() = default;
  // Throws InvalidInput unless parent describes a single rooted tree.
  TreeDecomposition(std::vector<int> parent, std::vector<VertexSet> bags);

  int size() const { return static_cast<int>(bags_.size()); }
  int root() const { return root_; }
  int parent(int t) const { return parent_[t]; }
  const std::vector<int>& parents() const { return parent_; }
  const std::vector<int>& children(int t) const { return children_[t]; }
  const VertexSet& bag(int t) const { return bags_[t]; }
  const std::vector<VertexSet>& bags() const { return bags_; }
  // Largest bag minus one; -1 for a decomposition of the empty graph.
  int width() const;
  // Parents before children.
  std::vector<int> preorder() const;

  friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;

 private:
  std::vector<int> parent_;
  std::vector<VertexSet> bags_;
  std::vector<std::vector<int>> children_;
  int root_ = -1;
};

struct TdReport {
  bool vertices_covered = true;
  bool edges_covered = true;
  bool occurrences_connected = true;
  std::vector<Vertex> uncovered_vertices;
  std::vector<Edge> uncovered_edges;
  std::vector<Vertex> disconnected_vertices;

  bool ok() const { return vertices_covered && edges_covered && occurrences_connected; }
};

TdReport validate(const TreeDecomposition& td, const Graph& g);

// Bag of t intersected with the bag of its parent; empty at the root.
VertexSet adhesion(const TreeDecomposition& td, int t);
// Union of the bags in the subtree rooted at t.
VertexSet gamma_set(const TreeDecomposition& td, int t);
// G[bag(t)] plus a clique on the adhesion of every child. Local ids follow
// the sorted bag.
Subgraph torso(const TreeDecomposition& td, const Graph& g, int t);

// Combines decompositions of the torsos (in torso-local ids) into one of g:
// each torso tree hangs below the smallest node of its parent's torso tree
// whose bag contains the adhesion, and every bag of the torso tree of s also
// receives the adhesion of s.
TreeDecomposition glue(const TreeDecomposition& outer, const std::vector<TreeDecomposition>& torso_tds,
                       const Graph& g);

// Bag t becomes the image of bag t under the contraction.
TreeDecomposition induced_by_contraction(const TreeDecomposition& td, const QuotientMap& q);

// Tree decomposition from an elimination ordering.
TreeDecomposition td_from_elimination(const Graph& g, const std::vector<Vertex>& order);

// PACE .td text: "s td <bags> <width+1> <n>", "b <i> <v...>" and tree edges,
// all 1-based. Reading roots the tree at bag 1.
std::string write_pace(const TreeDecomposition& td, int n);
struct PaceTd {
  TreeDecomposition td;
  int n = 0;
};
PaceTd read_pace(const std::string& text);

// PACE .gr text: "p tw <n> <m>" followed by 1-based edge lines.
std::string write_pace_graph(const Graph& g);
Graph read_pace_graph(const std::string& text);

}  // namespace rcd
