#pragma once

#include <span>
#include <utility>
#include <vector>

#include "rcd/vertex_set.hpp"

namespace rcd {

using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on vertices 0..n-1. Edges keep the order and
// orientation they were given in; edge ids index into edges().
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  // Throws InvalidInput on loops, duplicate edges or out-of-range ids.
  Graph(int n, std::vector<Edge> edges);
  // Drops loops and duplicates; edges are emitted sorted with u < v.
  static Graph simplified(int n, std::span<const Edge> edges);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[e]; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  // Parallel to neighbors(v).
  std::span<const int> incident_edges(Vertex v) const { return adj_edge_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool contains(Vertex v) const { return v >= 0 && v < n_; }
  bool has_edge(Vertex u, Vertex v) const { return edge_id(u, v) >= 0; }
  // -1 when absent.
  int edge_id(Vertex u, Vertex v) const;

  // Same vertex count and the same undirected edge set.
  friend bool operator==(const Graph& a, const Graph& b);

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::vector<int>> adj_edge_;
};

// Induced or edge-filtered subgraph with dense local ids.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;      // local vertex -> parent vertex
  std::vector<int> edge_to_parent;    // local edge -> parent edge

  Vertex local(Vertex parent) const;  // -1 when absent
};

Subgraph induced_subgraph(const Graph& g, const VertexSet& vertices);

// Each component sorted; components ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);
// Components of G[alive].
std::vector<VertexSet> components(const Graph& g, const std::vector<char>& alive);
bool is_connected(const Graph& g);
// G[s] connected; the empty set counts as connected.
bool is_connected_set(const Graph& g, const VertexSet& s);
// Component label per vertex (-1 for dead vertices), labels in order of smallest member.
std::vector<int> component_labels(const Graph& g, const std::vector<char>& alive);

VertexSet open_neighborhood(const Graph& g, const VertexSet& s);
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);

// Result of contracting every connected component of G[U] to one vertex.
struct QuotientMap {
  Graph source;
  Graph target;
  std::vector<Vertex> image;  // source vertex -> target vertex

  std::vector<VertexSet> classes() const;
  VertexSet preimage(const VertexSet& target_set) const;
  VertexSet apply(const VertexSet& source_set) const;
};

// Target ids are ordered by the smallest source vertex of each class.
QuotientMap contract_set(const Graph& g, const VertexSet& u);
// The identity-free general form: classes given as a labelling (equal label,
// same class); each class must be connected in g.
QuotientMap contract_partition(const Graph& g, const std::vector<int>& label);
bool quotient_connected(const QuotientMap& q, const VertexSet& target_set);

// Exhaustive search; throws LimitExceeded when h.n() > 7 or g.n() > 14.
bool is_minor(const Graph& h, const Graph& g);
// Branch sets (one per vertex of h) of a model of h in g, empty when none.
std::vector<VertexSet> find_minor_model(const Graph& h, const Graph& g);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);

}  // namespace rcd
