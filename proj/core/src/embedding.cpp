#include "rcd/embedding.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

#include "rcd/errors.hpp"

namespace rcd {
namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

Vertex dart_tail(const Graph& g, Dart d) {
  const Edge& e = g.edge(dart_edge(d));
  return dart_end(d) == 0 ? e.first : e.second;
}

std::vector<Dart> successors(const Graph& g, const std::vector<std::vector<Dart>>& rotation) {
  if (static_cast<int>(rotation.size()) != g.n())
    throw InvalidInput("rotation must list one cyclic order per vertex");
  std::vector<Dart> succ(2 * g.m(), -1);
  for (Vertex v = 0; v < g.n(); ++v) {
    const auto& rot = rotation[v];
    for (std::size_t i = 0; i < rot.size(); ++i) {
      Dart d = rot[i];
      if (d < 0 || d >= 2 * g.m()) throw InvalidInput("dart out of range at vertex " + std::to_string(v));
      if (dart_tail(g, d) != v) throw InvalidInput("dart does not leave vertex " + std::to_string(v));
      if (succ[d] != -1) throw InvalidInput("dart listed twice");
      succ[d] = rot[(i + 1) % rot.size()];
    }
  }
  for (Dart d = 0; d < 2 * g.m(); ++d)
    if (succ[d] == -1) throw InvalidInput("dart missing from rotation");
  return succ;
}

}  // namespace

std::vector<FacialWalk> trace_walks(const Graph& g, const std::vector<std::vector<Dart>>& rotation) {
  auto succ = successors(g, rotation);
  std::vector<FacialWalk> walks;
  std::vector<char> seen(succ.size(), 0);
  for (Dart s = 0; s < static_cast<Dart>(succ.size()); ++s) {
    if (seen[s]) continue;
    FacialWalk w;
    Dart d = s;
    do {
      seen[d] = 1;
      w.darts.push_back(d);
      d = succ[reverse(d)];
    } while (d != s);
    walks.push_back(std::move(w));
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.degree(v) == 0) {
      FacialWalk w;
      w.isolated = v;
      walks.push_back(std::move(w));
    }
  }
  return walks;
}

Embedding::Embedding(Graph g, std::vector<std::vector<Dart>> rotation, int outer_face,
                     std::vector<int> walk_group)
    : graph_(std::move(g)), rotation_(std::move(rotation)) {
  succ_ = successors(graph_, rotation_);
  walks_ = trace_walks(graph_, rotation_);
  const int w = static_cast<int>(walks_.size());
  if (walk_group.empty()) {
    walk_group.resize(w);
    std::iota(walk_group.begin(), walk_group.end(), 0);
  }
  if (static_cast<int>(walk_group.size()) != w) throw InvalidInput("walk grouping has the wrong length");
  // Faces ordered by their first walk.
  std::vector<std::pair<int, int>> remap;
  walk_face_.assign(w, -1);
  int faces = 0;
  for (int i = 0; i < w; ++i) {
    int label = walk_group[i];
    auto it = std::find_if(remap.begin(), remap.end(), [&](auto& p) { return p.first == label; });
    if (it == remap.end()) {
      remap.emplace_back(label, faces);
      walk_face_[i] = faces++;
    } else {
      walk_face_[i] = it->second;
    }
  }
  dart_walk_.assign(2 * graph_.m(), -1);
  boundaries_.resize(faces);
  faces_at_.assign(graph_.n(), {});
  for (int i = 0; i < w; ++i) {
    FaceBoundary& b = boundaries_[walk_face_[i]];
    b.face = walk_face_[i];
    if (walks_[i].isolated >= 0) b.vertices.push_back(walks_[i].isolated);
    for (Dart d : walks_[i].darts) {
      dart_walk_[d] = i;
      b.vertices.push_back(tail(d));
      b.edges.push_back(dart_edge(d));
    }
  }
  for (auto& b : boundaries_) {
    normalize(b.vertices);
    std::sort(b.edges.begin(), b.edges.end());
    b.edges.erase(std::unique(b.edges.begin(), b.edges.end()), b.edges.end());
    for (int e : b.edges) b.edge_pairs.push_back(graph_.edge(e));
    for (Vertex v : b.vertices) faces_at_[v].push_back(b.face);
  }
  if (faces == 0) {
    if (outer_face != -1) throw InvalidInput("outer face given for an empty embedding");
  } else if (outer_face < 0 || outer_face >= faces) {
    throw InvalidInput("outer face out of range");
  }
  outer_ = outer_face;
  components_ = static_cast<int>(components(graph_).size());
  int twice = 2 * components_ - graph_.n() + graph_.m() - w;
  if (twice < 0 || twice % 2 != 0) throw InternalError("Euler characteristic is inconsistent");
  genus_ = twice / 2;
}

Vertex Embedding::tail(Dart d) const { return dart_tail(graph_, d); }
Vertex Embedding::head(Dart d) const { return dart_tail(graph_, reverse(d)); }

Embedding Embedding::with_outer_face(int f) const {
  Embedding e = *this;
  if (f < 0 || f >= num_faces()) throw InvalidInput("outer face out of range");
  e.outer_ = f;
  return e;
}

Vertex SubEmbedding::local(Vertex parent) const {
  auto it = std::lower_bound(to_parent.begin(), to_parent.end(), parent);
  if (it == to_parent.end() || *it != parent) return -1;
  return static_cast<Vertex>(it - to_parent.begin());
}

VertexSet SubEmbedding::lift(const VertexSet& local_set) const {
  VertexSet out;
  out.reserve(local_set.size());
  for (Vertex v : local_set) out.push_back(to_parent[v]);
  return out;
}

VertexSet SubEmbedding::lower(const VertexSet& parent_set) const {
  VertexSet out;
  for (Vertex v : parent_set) {
    Vertex l = local(v);
    if (l >= 0) out.push_back(l);
  }
  return out;
}

SubEmbedding sub_embedding(const Embedding& emb, const std::vector<char>& keep_vertex,
                           const std::vector<char>& keep_edge) {
  const Graph& g = emb.graph();
  if (static_cast<int>(keep_vertex.size()) != g.n() || static_cast<int>(keep_edge.size()) != g.m())
    throw InvalidInput("sub_embedding mask size mismatch");
  SubEmbedding sub;
  std::vector<int> loc(g.n(), -1);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (keep_vertex[v]) {
      loc[v] = static_cast<int>(sub.to_parent.size());
      sub.to_parent.push_back(v);
    }
  }
  std::vector<int> eloc(g.m(), -1);
  std::vector<Edge> es;
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edge(e);
    if (keep_edge[e] && loc[u] >= 0 && loc[v] >= 0) {
      eloc[e] = static_cast<int>(es.size());
      es.emplace_back(loc[u], loc[v]);
      sub.edge_to_parent.push_back(e);
    }
  }
  Graph lg(static_cast<int>(sub.to_parent.size()), std::move(es));
  std::vector<std::vector<Dart>> rot(lg.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    if (loc[v] < 0) continue;
    for (Dart d : emb.rotation()[v])
      if (eloc[dart_edge(d)] >= 0) rot[loc[v]].push_back(make_dart(eloc[dart_edge(d)], dart_end(d)));
  }

  UnionFind uf(emb.num_faces());
  for (int e = 0; e < g.m(); ++e)
    if (eloc[e] < 0) uf.unite(emb.face_of_dart(make_dart(e, 0)), emb.face_of_dart(make_dart(e, 1)));
  for (Vertex v = 0; v < g.n(); ++v) {
    if (loc[v] >= 0) continue;
    const auto& fs = emb.faces_at(v);
    for (std::size_t i = 1; i < fs.size(); ++i) uf.unite(fs[0], fs[i]);
  }

  auto walks = trace_walks(lg, rot);
  std::vector<int> group(walks.size());
  for (std::size_t i = 0; i < walks.size(); ++i) {
    int parent_face;
    if (walks[i].isolated >= 0) {
      Vertex pv = sub.to_parent[walks[i].isolated];
      parent_face = emb.faces_at(pv).front();
    } else {
      Dart d = walks[i].darts.front();
      parent_face = emb.face_of_dart(make_dart(sub.edge_to_parent[dart_edge(d)], dart_end(d)));
    }
    group[i] = uf.find(parent_face);
  }
  int outer = -1;
  // Face ids follow first appearance of each group label.
  std::vector<int> label_face(emb.num_faces(), -1);
  int faces = 0;
  for (int label : group)
    if (label_face[label] < 0) label_face[label] = faces++;
  if (emb.outer_face() >= 0) outer = label_face[uf.find(emb.outer_face())];
  if (lg.n() > 0 && outer < 0) throw HypothesisViolation("outer region has no boundary in the subgraph");
  sub.parent_face_to_local.resize(emb.num_faces());
  for (int f = 0; f < emb.num_faces(); ++f) sub.parent_face_to_local[f] = label_face[uf.find(f)];
  sub.embedding = Embedding(std::move(lg), std::move(rot), outer, std::move(group));
  return sub;
}

SubEmbedding induced_embedding(const Embedding& emb, const VertexSet& vertices) {
  return sub_embedding(emb, to_mask(emb.graph().n(), vertices), std::vector<char>(emb.graph().m(), 1));
}

bool is_singular(const FaceBoundary& b) {
  if (b.vertices.size() <= 1) return false;
  auto idx = [&](Vertex v) { return static_cast<int>(std::lower_bound(b.vertices.begin(), b.vertices.end(), v) - b.vertices.begin()); };
  UnionFind uf(static_cast<int>(b.vertices.size()));
  for (auto [u, v] : b.edge_pairs) uf.unite(idx(u), idx(v));
  for (std::size_t i = 1; i < b.vertices.size(); ++i)
    if (uf.find(static_cast<int>(i)) != uf.find(0)) return true;
  return false;
}

bool is_minimal(const Embedding& emb) {
  const Graph& g = emb.graph();
  for (int o = 0; o < emb.num_faces(); ++o) {
    const FaceBoundary& bo = emb.boundary(o);
    if (!is_singular(bo)) continue;
    std::vector<char> kv = to_mask(g.n(), bo.vertices);
    std::vector<char> ke(g.m(), 0);
    for (int e : bo.edges) ke[e] = 1;
    SubEmbedding sub = sub_embedding(emb, kv, ke);
    const Embedding& se = sub.embedding;
    int self = sub.parent_face_to_local[o];
    auto label = component_labels(se.graph(), std::vector<char>(se.graph().n(), 1));
    for (int f = 0; f < se.num_faces(); ++f) {
      if (f == self) continue;
      const VertexSet& vs = se.boundary(f).vertices;
      for (Vertex v : vs)
        if (label[v] != label[vs.front()]) return false;
    }
  }
  return true;
}

Graph vfi_graph(const Embedding& emb) {
  const int n = emb.graph().n();
  std::vector<Edge> es;
  for (int f = 0; f < emb.num_faces(); ++f)
    for (Vertex v : emb.boundary(f).vertices) es.emplace_back(v, n + f);
  return Graph(n + emb.num_faces(), std::move(es));
}

std::vector<int> weighted_vf_distances(const Embedding& emb, const std::vector<int>& face_weight, VfNode a) {
  const int n = emb.graph().n();
  const int f = emb.num_faces();
  if (static_cast<int>(face_weight.size()) != f) throw InvalidInput("one weight per face expected");
  auto node_cost = [&](int x) { return x >= n ? face_weight[x - n] : 0; };
  Graph vfi = vfi_graph(emb);
  int src = a.is_face ? n + a.id : a.id;
  if (src < 0 || src >= n + f) throw InvalidInput("vertex-face node out of range");
  const int inf = std::numeric_limits<int>::max();
  std::vector<int> dist(n + f, inf);
  using Item = std::pair<int, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[src] = node_cost(src);
  pq.emplace(dist[src], src);
  while (!pq.empty()) {
    auto [d, x] = pq.top();
    pq.pop();
    if (d != dist[x]) continue;
    for (int y : vfi.neighbors(x)) {
      int nd = d + 1 + node_cost(y);
      if (nd < dist[y]) {
        dist[y] = nd;
        pq.emplace(nd, y);
      }
    }
  }
  for (int& d : dist)
    if (d == inf) d = -1;
  return dist;
}

int weighted_vf_distance(const Embedding& emb, const std::vector<int>& face_weight, VfNode a, VfNode b) {
  auto dist = weighted_vf_distances(emb, face_weight, a);
  int dst = b.is_face ? emb.graph().n() + b.id : b.id;
  if (dst < 0 || dst >= static_cast<int>(dist.size())) throw InvalidInput("vertex-face node out of range");
  return dist[dst];
}

int weighted_vf_diameter(const Embedding& emb, const std::vector<int>& face_weight) {
  const int n = emb.graph().n();
  int best = 0;
  for (int x = 0; x < n + emb.num_faces(); ++x) {
    VfNode a{x >= n, x >= n ? x - n : x};
    for (int d : weighted_vf_distances(emb, face_weight, a)) {
      if (d < 0) return -1;
      best = std::max(best, d);
    }
  }
  return best;
}

const VertexSet& RadialLayering::layer(int i) const {
  static const VertexSet empty;
  if (i < 1 || i > count()) return empty;
  return layers[i - 1];
}

VertexSet RadialLayering::at_least(int t) const { return range(t, count()); }

VertexSet RadialLayering::range(int lo, int hi) const {
  VertexSet out;
  for (Vertex v = 0; v < static_cast<int>(index.size()); ++v)
    if (index[v] >= lo && index[v] <= hi) out.push_back(v);
  return out;
}

RadialLayering radial_layering(const Embedding& emb) {
  const int n = emb.graph().n();
  RadialLayering r;
  r.index.assign(n, 0);
  if (n == 0) return r;
  Graph vfi = vfi_graph(emb);
  std::vector<int> dist(vfi.n(), -1);
  std::queue<int> q;
  int src = n + emb.outer_face();
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int y : vfi.neighbors(x)) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        q.push(y);
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (dist[v] < 0) throw HypothesisViolation("vertex-face incidence graph is disconnected");
    int i = (dist[v] + 1) / 2;
    r.index[v] = i;
    if (static_cast<int>(r.layers.size()) < i) r.layers.resize(i);
    r.layers[i - 1].push_back(v);
  }
  return r;
}

RadialLayering radial_layering_by_peeling(const Embedding& emb) {
  const int n = emb.graph().n();
  RadialLayering r;
  r.index.assign(n, 0);
  VertexSet remaining(n);
  std::iota(remaining.begin(), remaining.end(), 0);
  while (!remaining.empty()) {
    SubEmbedding sub = induced_embedding(emb, remaining);
    VertexSet layer = sub.lift(sub.embedding.boundary(sub.embedding.outer_face()).vertices);
    if (layer.empty()) throw InternalError("peeling stalled");
    r.layers.push_back(layer);
    for (Vertex v : layer) r.index[v] = r.count();
    remaining = set_minus(remaining, layer);
  }
  return r;
}

PeeledFace peeled_outer_face(const Embedding& emb, const RadialLayering& layering, int t) {
  if (t < 1 || t > layering.count()) throw InvalidInput("layer index out of range");
  PeeledFace p;
  p.t = t;
  p.sub = induced_embedding(emb, layering.at_least(t));
  p.face = p.sub.embedding.outer_face();
  const FaceBoundary& lb = p.sub.embedding.boundary(p.face);
  p.boundary.face = p.face;
  p.boundary.vertices = p.sub.lift(lb.vertices);
  for (int e : lb.edges) {
    int pe = p.sub.edge_to_parent[e];
    p.boundary.edges.push_back(pe);
  }
  std::sort(p.boundary.edges.begin(), p.boundary.edges.end());
  for (int e : p.boundary.edges) p.boundary.edge_pairs.push_back(emb.graph().edge(e));
  if (p.boundary.vertices != layering.layer(t))
    throw InternalError("peeled outer face boundary differs from layer " + std::to_string(t));
  return p;
}

}  // namespace rcd
