#include "rcd/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "rcd/errors.hpp"

namespace rcd {

Graph::Graph(int n) : n_(n), adj_(n), adj_edge_(n) {
  if (n < 0) throw InvalidInput("negative vertex count");
}

Graph::Graph(int n, std::vector<Edge> edges) : Graph(n) {
  edges_ = std::move(edges);
  for (int e = 0; e < m(); ++e) {
    auto [u, v] = edges_[e];
    if (!contains(u) || !contains(v))
      throw InvalidInput("edge " + std::to_string(e) + " has an out-of-range endpoint");
    if (u == v) throw InvalidInput("loop at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_edge_[u].push_back(e);
    adj_[v].push_back(u);
    adj_edge_[v].push_back(e);
  }
  for (int v = 0; v < n_; ++v) {
    std::vector<int> idx(adj_[v].size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return adj_[v][a] < adj_[v][b]; });
    std::vector<Vertex> nb;
    std::vector<int> ne;
    for (int i : idx) {
      if (!nb.empty() && nb.back() == adj_[v][i])
        throw InvalidInput("duplicate edge {" + std::to_string(v) + "," + std::to_string(nb.back()) + "}");
      nb.push_back(adj_[v][i]);
      ne.push_back(adj_edge_[v][i]);
    }
    adj_[v] = std::move(nb);
    adj_edge_[v] = std::move(ne);
  }
}

Graph Graph::simplified(int n, std::span<const Edge> edges) {
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u == v) continue;
    es.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  return Graph(n, std::move(es));
}

int Graph::edge_id(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return -1;
  const auto& nb = adj_[u];
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return -1;
  return adj_edge_[u][it - nb.begin()];
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.n_ != b.n_ || a.m() != b.m()) return false;
  return a.adj_ == b.adj_;
}

Vertex Subgraph::local(Vertex parent) const {
  auto it = std::lower_bound(to_parent.begin(), to_parent.end(), parent);
  if (it == to_parent.end() || *it != parent) return -1;
  return static_cast<Vertex>(it - to_parent.begin());
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& vertices) {
  Subgraph s;
  s.to_parent = vertices;
  std::vector<int> loc(g.n(), -1);
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) loc[vertices[i]] = i;
  std::vector<Edge> es;
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edge(e);
    if (loc[u] >= 0 && loc[v] >= 0) {
      es.emplace_back(loc[u], loc[v]);
      s.edge_to_parent.push_back(e);
    }
  }
  s.graph = Graph(static_cast<int>(vertices.size()), std::move(es));
  return s;
}

std::vector<int> component_labels(const Graph& g, const std::vector<char>& alive) {
  std::vector<int> label(g.n(), -1);
  int next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (!alive[s] || label[s] >= 0) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (alive[w] && label[w] < 0) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

std::vector<VertexSet> components(const Graph& g, const std::vector<char>& alive) {
  auto label = component_labels(g, alive);
  int k = 0;
  for (int l : label) k = std::max(k, l + 1);
  std::vector<VertexSet> out(k);
  for (Vertex v = 0; v < g.n(); ++v)
    if (label[v] >= 0) out[label[v]].push_back(v);
  return out;
}

std::vector<VertexSet> components(const Graph& g) {
  return components(g, std::vector<char>(g.n(), 1));
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_connected_set(const Graph& g, const VertexSet& s) {
  if (s.empty()) return true;
  return components(g, to_mask(g.n(), s)).size() == 1;
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& s) {
  auto in = to_mask(g.n(), s);
  VertexSet out;
  for (Vertex v : s)
    for (Vertex w : g.neighbors(v))
      if (!in[w]) out.push_back(w);
  normalize(out);
  return out;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
  return set_union(s, open_neighborhood(g, s));
}

std::vector<VertexSet> QuotientMap::classes() const {
  std::vector<VertexSet> out(target.n());
  for (Vertex v = 0; v < source.n(); ++v) out[image[v]].push_back(v);
  return out;
}

VertexSet QuotientMap::preimage(const VertexSet& target_set) const {
  auto in = to_mask(target.n(), target_set);
  VertexSet out;
  for (Vertex v = 0; v < source.n(); ++v)
    if (in[image[v]]) out.push_back(v);
  return out;
}

VertexSet QuotientMap::apply(const VertexSet& source_set) const {
  VertexSet out;
  for (Vertex v : source_set) out.push_back(image[v]);
  normalize(out);
  return out;
}

QuotientMap contract_partition(const Graph& g, const std::vector<int>& label) {
  if (static_cast<int>(label.size()) != g.n()) throw InvalidInput("partition label size mismatch");
  // Relabel by smallest member.
  std::vector<int> first;
  std::vector<int> remap;
  QuotientMap q;
  q.source = g;
  q.image.assign(g.n(), -1);
  int maxl = -1;
  for (int l : label) {
    if (l < 0) throw InvalidInput("negative partition label");
    maxl = std::max(maxl, l);
  }
  remap.assign(maxl + 1, -1);
  int next = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (remap[label[v]] < 0) remap[label[v]] = next++;
    q.image[v] = remap[label[v]];
  }
  std::vector<Edge> es;
  for (auto [u, v] : g.edges()) es.emplace_back(q.image[u], q.image[v]);
  q.target = Graph::simplified(next, es);
  for (const auto& cls : q.classes())
    if (!is_connected_set(g, cls)) throw InvalidInput("contracted class is not connected");
  return q;
}

QuotientMap contract_set(const Graph& g, const VertexSet& u) {
  for (Vertex v : u)
    if (!g.contains(v)) throw InvalidInput("contract_set: vertex out of range");
  auto alive = to_mask(g.n(), u);
  auto comp = component_labels(g, alive);
  int k = 0;
  for (int c : comp) k = std::max(k, c + 1);
  std::vector<int> label(g.n());
  for (Vertex v = 0; v < g.n(); ++v) label[v] = comp[v] >= 0 ? comp[v] : k + v;
  return contract_partition(g, label);
}

bool quotient_connected(const QuotientMap& q, const VertexSet& target_set) {
  return is_connected_set(q.target, target_set);
}

Graph complete_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return Graph(n, std::move(es));
}

Graph cycle_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return Graph::simplified(n, es);
}

Graph path_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph(n, std::move(es));
}

}  // namespace rcd
