#include "rcd/keylemma.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "rcd/errors.hpp"

namespace rcd {

const char* to_string(PairClass c) {
  switch (c) {
    case PairClass::SingularTypeI: return "singular-i";
    case PairClass::SingularTypeII: return "singular-ii";
    case PairClass::Critical: return "critical";
    case PairClass::Normal: return "normal";
  }
  return "?";
}

Vertex BoundaryComplex::local(Vertex global) const {
  auto it = std::lower_bound(to_global.begin(), to_global.end(), global);
  if (it == to_global.end() || *it != global) return -1;
  return static_cast<Vertex>(it - to_global.begin());
}

VertexSet BoundaryComplex::lift(const VertexSet& local_set) const {
  VertexSet out;
  for (Vertex v : local_set) out.push_back(to_global[v]);
  normalize(out);
  return out;
}

VertexSet exits(const Embedding& emb, const RadialLayering& layering, int t) {
  VertexSet out;
  for (Vertex v : layering.layer(t)) {
    for (Vertex w : emb.graph().neighbors(v)) {
      if (layering.index[w] == t - 1) {
        out.push_back(v);
        break;
      }
    }
  }
  return out;
}

BoundaryComplex boundary_complex(const Embedding& emb, const RadialLayering& layering, int t) {
  for (Vertex v : layering.layer(t)) {
    for (int f : emb.faces_at(v)) {
      if (is_singular(emb.boundary(f)))
        throw HypothesisViolation("face " + std::to_string(f) + " incident to layer " + std::to_string(t) +
                                  " is singular");
    }
  }
  PeeledFace pf = peeled_outer_face(emb, layering, t);
  const Embedding& se = pf.sub.embedding;
  const FaceBoundary& ob = se.boundary(pf.face);
  std::vector<char> kv = to_mask(se.graph().n(), ob.vertices);
  std::vector<char> ke(se.graph().m(), 0);
  for (int e : ob.edges) ke[e] = 1;
  SubEmbedding bsub = sub_embedding(se, kv, ke);
  const Embedding& be = bsub.embedding;

  BoundaryComplex bc;
  bc.t = t;
  bc.genus = emb.genus();
  bc.graph = be.graph();
  for (Vertex v : bsub.to_parent) bc.to_global.push_back(pf.sub.to_parent[v]);
  const int outer = be.outer_face();
  std::vector<int> inner_index(be.num_faces(), -1);
  for (int f = 0; f < be.num_faces(); ++f) {
    if (f == outer) continue;
    inner_index[f] = bc.num_faces();
    const FaceBoundary& fb = be.boundary(f);
    bc.face_vertices.push_back(fb.vertices);
    bc.face_edges.push_back(fb.edges);
    bc.face_singular.push_back(is_singular(fb) ? 1 : 0);
  }
  bc.edge_face.assign(bc.graph.m(), kOuterOnly);
  for (int e = 0; e < bc.graph.m(); ++e) {
    int a = be.face_of_dart(make_dart(e, 0));
    int b = be.face_of_dart(make_dart(e, 1));
    if (a != outer && b != outer) throw InternalError("boundary edge misses the outer face");
    if (a != outer) bc.edge_face[e] = inner_index[a];
    if (b != outer) bc.edge_face[e] = inner_index[b];
  }
  bc.vertex_faces.assign(bc.graph.n(), {});
  for (int f = 0; f < bc.num_faces(); ++f)
    for (Vertex v : bc.face_vertices[f]) bc.vertex_faces[v].push_back(f);
  bc.exit.assign(bc.graph.n(), 0);
  for (Vertex v : exits(emb, layering, t)) {
    Vertex l = bc.local(v);
    if (l < 0) throw InternalError("exit outside the boundary complex");
    bc.exit[l] = 1;
  }
  return bc;
}

namespace {

Vertex to_local(const BoundaryComplex& bc, Vertex v) {
  Vertex l = bc.local(v);
  if (l < 0) throw InvalidInput("vertex " + std::to_string(v) + " is not on the layer boundary");
  return l;
}

void check_face(const BoundaryComplex& bc, int f) {
  if (f < 0 || f >= bc.num_faces()) throw InvalidInput("inner face index out of range");
}

std::vector<char> face_edge_mask(const BoundaryComplex& bc, int f) {
  std::vector<char> m(bc.graph.m(), 0);
  if (f >= 0)
    for (int e : bc.face_edges[f]) m[e] = 1;
  return m;
}

// Local reachability avoiding edges in the mask.
VertexSet reach(const BoundaryComplex& bc, Vertex s, const std::vector<char>& forbidden) {
  std::vector<char> seen(bc.graph.n(), 0);
  std::vector<Vertex> stack{s};
  seen[s] = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    auto nb = bc.graph.neighbors(v);
    auto ie = bc.graph.incident_edges(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (forbidden[ie[i]] || seen[nb[i]]) continue;
      seen[nb[i]] = 1;
      stack.push_back(nb[i]);
    }
  }
  return from_mask(seen);
}

PairClass classify_local(const BoundaryComplex& bc, int f, Vertex v) {
  VertexSet y = reach(bc, v, face_edge_mask(bc, f));
  for (Vertex u : y)
    if (u != v && has(bc.face_vertices[f], u)) return PairClass::SingularTypeI;
  for (int g = 0; g < bc.num_faces(); ++g)
    if (g != f && bc.face_singular[g] && intersects(y, bc.face_vertices[g])) return PairClass::SingularTypeII;
  for (Vertex u : y)
    if (bc.exit[u]) return PairClass::Critical;
  return PairClass::Normal;
}

// Shortest path to the exit of smallest id among the nearest ones.
std::vector<Vertex> path_to_exit(const BoundaryComplex& bc, Vertex s, const std::vector<char>& forbidden) {
  std::vector<int> dist(bc.graph.n(), -1), parent(bc.graph.n(), -1);
  std::queue<Vertex> q;
  dist[s] = 0;
  q.push(s);
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    auto nb = bc.graph.neighbors(v);
    auto ie = bc.graph.incident_edges(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (forbidden[ie[i]] || dist[nb[i]] >= 0) continue;
      dist[nb[i]] = dist[v] + 1;
      parent[nb[i]] = v;
      q.push(nb[i]);
    }
  }
  Vertex target = -1;
  for (Vertex v = 0; v < bc.graph.n(); ++v)
    if (bc.exit[v] && dist[v] >= 0 && (target < 0 || dist[v] < dist[target])) target = v;
  if (target < 0) return {};
  std::vector<Vertex> path;
  for (Vertex v = target; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

int path_edge_face(const BoundaryComplex& bc, Vertex a, Vertex b) {
  int e = bc.graph.edge_id(a, b);
  if (e < 0) throw InvalidInput("path uses a non-boundary edge");
  return bc.edge_face[e];
}

std::vector<Vertex> legal_path_local(const BoundaryComplex& bc, Vertex v) {
  std::vector<Vertex> path = path_to_exit(bc, v, std::vector<char>(bc.graph.m(), 0));
  if (path.empty()) throw HypothesisViolation("no exit reachable on the layer boundary");
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    int f = path_edge_face(bc, path[i - 1], path[i]);
    if (f == kOuterOnly) continue;
    if (classify_local(bc, f, path[i]) != PairClass::Critical) continue;
    if (path_edge_face(bc, path[i], path[i + 1]) != f) continue;
    std::vector<Vertex> suffix = path_to_exit(bc, path[i], face_edge_mask(bc, f));
    if (suffix.empty()) throw InternalError("critical pair without an exit path");
    path.resize(i);
    path.insert(path.end(), suffix.begin(), suffix.end());
    VertexSet check = normalized(path);
    if (check.size() != path.size()) throw InternalError("upgraded path is not simple");
  }
  return path;
}

}  // namespace

int face_side(const BoundaryComplex& bc, Vertex u, Vertex v) {
  int e = bc.graph.edge_id(to_local(bc, u), to_local(bc, v));
  if (e < 0) throw InvalidInput("edge is not on the layer boundary");
  return bc.edge_face[e];
}

VertexSet y_set(const BoundaryComplex& bc, int f, Vertex v) {
  check_face(bc, f);
  Vertex l = to_local(bc, v);
  if (!has(bc.face_vertices[f], l)) throw InvalidInput("vertex is not on the face");
  return bc.lift(reach(bc, l, face_edge_mask(bc, f)));
}

PairClass classify_pair(const BoundaryComplex& bc, int f, Vertex v) {
  check_face(bc, f);
  Vertex l = to_local(bc, v);
  if (!has(bc.face_vertices[f], l)) throw InvalidInput("vertex is not on the face");
  return classify_local(bc, f, l);
}

std::vector<Vertex> legal_path(const BoundaryComplex& bc, Vertex v) {
  auto p = legal_path_local(bc, to_local(bc, v));
  for (Vertex& x : p) x = bc.to_global[x];
  return p;
}

bool is_legal(const BoundaryComplex& bc, const std::vector<Vertex>& path) {
  std::vector<Vertex> p;
  for (Vertex v : path) p.push_back(to_local(bc, v));
  for (std::size_t i = 1; i + 1 < p.size(); ++i) {
    int f = path_edge_face(bc, p[i - 1], p[i]);
    if (f == kOuterOnly) continue;
    if (classify_local(bc, f, p[i]) == PairClass::Critical && path_edge_face(bc, p[i], p[i + 1]) == f)
      return false;
  }
  return true;
}

KeyOutput compute_key_sets(const BoundaryComplex& bc, const VertexSet& phi) {
  KeyOutput out;
  out.t = bc.t;
  out.phi = phi;
  VertexSet xl;
  for (Vertex v : phi) {
    auto p = legal_path_local(bc, to_local(bc, v));
    xl.insert(xl.end(), p.begin(), p.end());
    for (Vertex& x : p) x = bc.to_global[x];
    out.paths.push_back(std::move(p));
  }
  normalize(xl);
  VertexSet lp;
  for (Vertex v : xl) {
    for (int f : bc.vertex_faces[v]) {
      if (classify_local(bc, f, v) != PairClass::Normal) continue;
      VertexSet y = reach(bc, v, face_edge_mask(bc, f));
      lp.insert(lp.end(), y.begin(), y.end());
      out.normal_sets.push_back(NormalSet{f, bc.to_global[v], bc.lift(y)});
    }
  }
  normalize(lp);
  out.x = bc.lift(xl);
  out.lplus = bc.lift(lp);
  for (int f : bc.edge_face)
    if (f == kOuterOnly) ++out.outer_only_edges;
  return out;
}

KeyOutput compute_key_sets(const Embedding& emb, const RadialLayering& layering, int t, const VertexSet& phi) {
  for (Vertex v : phi)
    if (!emb.graph().contains(v) || layering.index[v] != t) throw InvalidInput("phi must lie in the layer");
  return compute_key_sets(boundary_complex(emb, layering, t), phi);
}

Report verify_key_conditions(const Embedding& emb, const RadialLayering& layering, const BoundaryComplex& bc,
                             const KeyOutput& out) {
  const Graph& g = emb.graph();
  const int t = out.t;
  const int c = static_cast<int>(out.phi.size());
  Report r;
  auto vstr = [](Vertex v) { return std::to_string(v); };

  // (1) X is made of phi-rooted pieces that reach the previous layer.
  r.add("x-contains-phi", is_subset(out.phi, out.x));
  r.add("x-in-layer", std::all_of(out.x.begin(), out.x.end(), [&](Vertex v) { return layering.index[v] == t; }));
  for (const VertexSet& comp : components(g, to_mask(g.n(), out.x))) {
    bool meets = intersects(comp, out.phi);
    bool adjacent = false;
    for (Vertex v : comp)
      for (Vertex w : g.neighbors(v))
        if (layering.index[w] == t - 1) adjacent = true;
    r.add("x-components", meets && adjacent, "component containing " + vstr(comp.front()));
  }
  // L+ avoids the exits and stays in the layer.
  bool lp_ok = true;
  std::string lp_detail;
  for (Vertex v : out.lplus) {
    Vertex l = bc.local(v);
    if (l < 0 || bc.exit[l]) {
      lp_ok = false;
      lp_detail = "vertex " + vstr(v);
      break;
    }
  }
  r.add("lplus-avoids-exits", lp_ok, lp_detail);

  // (2) Components of G[L+ ∪ L_{>t}] see L_t through one inner face.
  VertexSet deeper = layering.range(t + 1, layering.count());
  VertexSet region = set_union(deeper, out.lplus);
  std::vector<char> at_least = to_mask(g.n(), layering.at_least(t));
  for (const VertexSet& comp : components(g, to_mask(g.n(), region))) {
    VertexSet nb;
    for (Vertex v : comp)
      for (Vertex w : g.neighbors(v))
        if (at_least[w] && !has(comp, w)) nb.push_back(w);
    normalize(nb);
    bool found = nb.empty();
    VertexSet nbl;
    for (Vertex w : nb) nbl.push_back(bc.local(w));
    if (!found && std::find(nbl.begin(), nbl.end(), -1) == nbl.end()) {
      normalize(nbl);
      for (int f = 0; f < bc.num_faces() && !found; ++f) found = is_subset(nbl, bc.face_vertices[f]);
    }
    r.add("extension-face-neighbourhood", found, "component containing " + vstr(comp.front()));
  }

  // (3), (4) per inner face.
  std::vector<char> xl(bc.graph.n(), 0), lpl(bc.graph.n(), 0);
  for (Vertex v : out.x) xl[bc.local(v)] = 1;
  for (Vertex v : out.lplus)
    if (bc.local(v) >= 0) lpl[bc.local(v)] = 1;
  for (int f = 0; f < bc.num_faces(); ++f) {
    int singular = 0;
    for (Vertex v : bc.face_vertices[f]) {
      PairClass pc = classify_local(bc, f, v);
      if (pc == PairClass::SingularTypeI || pc == PairClass::SingularTypeII) ++singular;
    }
    int outside = 0;
    for (Vertex v : bc.face_vertices[f])
      if (xl[v] && !lpl[v]) ++outside;
    r.add("face-count-bound", outside <= 2 * c + singular,
          "face " + std::to_string(f) + ": " + std::to_string(outside) + " > " + std::to_string(2 * c + singular));
    // Components of the face boundary minus L+.
    Graph fg(bc.graph.n());
    std::vector<Edge> es;
    for (int e : bc.face_edges[f]) es.push_back(bc.graph.edge(e));
    fg = Graph(bc.graph.n(), es);
    std::vector<char> alive(bc.graph.n(), 0);
    for (Vertex v : bc.face_vertices[f])
      if (!lpl[v]) alive[v] = 1;
    int comps = static_cast<int>(components(fg, alive).size());
    int bound = std::max(1, c * (singular + 3) + singular);
    bool pass = bc.genus > 0 || comps <= bound;
    r.add("face-component-bound", pass,
          "face " + std::to_string(f) + ": " + std::to_string(comps) + " > " + std::to_string(bound));
  }

  // Paths: simple, legal, end at an exit, at most two critical vertices per face.
  for (const auto& path : out.paths) {
    VertexSet s = normalized(path);
    bool simple = s.size() == path.size();
    r.add("paths-simple", simple);
    if (path.empty()) continue;
    r.add("paths-end-at-exit", bc.exit[bc.local(path.back())] != 0);
    r.add("paths-legal", is_legal(bc, path));
    for (int f = 0; f < bc.num_faces(); ++f) {
      int crit = 0;
      for (Vertex v : path) {
        Vertex l = bc.local(v);
        if (has(bc.face_vertices[f], l) && classify_local(bc, f, l) == PairClass::Critical) ++crit;
      }
      r.add("paths-critical-per-face", crit <= 2, "face " + std::to_string(f));
    }
  }

  // Normal pairs: no exits in Y, Y meets the face only in v, other faces are
  // all-or-nothing, and the neighbourhood in the extension stays on the face.
  for (Vertex v = 0; v < bc.graph.n(); ++v) {
    for (int f : bc.vertex_faces[v]) {
      if (classify_local(bc, f, v) != PairClass::Normal) continue;
      VertexSet y = reach(bc, v, face_edge_mask(bc, f));
      std::string where = "pair (" + std::to_string(f) + "," + vstr(bc.to_global[v]) + ")";
      bool no_exit = std::none_of(y.begin(), y.end(), [&](Vertex u) { return bc.exit[u] != 0; });
      r.add("normal-no-exit", no_exit, where);
      r.add("normal-meets-face-once", set_intersection(y, bc.face_vertices[f]) == VertexSet{v}, where);
      bool all_or_nothing = true;
      for (int h = 0; h < bc.num_faces(); ++h) {
        if (h == f) continue;
        if (intersects(y, bc.face_vertices[h]) && !is_subset(bc.face_vertices[h], y)) all_or_nothing = false;
      }
      r.add("normal-all-or-nothing", all_or_nothing, where);
      VertexSet yg = bc.lift(y);
      VertexSet nb_all, nb_rest;
      for (Vertex u : yg) {
        for (Vertex w : g.neighbors(u)) {
          if (layering.index[w] != t || has(yg, w)) continue;
          nb_all.push_back(w);
          if (u != bc.to_global[v]) nb_rest.push_back(w);
        }
      }
      // Neighbours of Y minus v inside Y itself count towards v only.
      for (Vertex u : yg) {
        if (u == bc.to_global[v]) continue;
        if (g.has_edge(u, bc.to_global[v])) nb_rest.push_back(bc.to_global[v]);
      }
      normalize(nb_all);
      normalize(nb_rest);
      VertexSet nb_local;
      bool mapped = true;
      for (Vertex w : nb_all) {
        Vertex l = bc.local(w);
        if (l < 0) mapped = false;
        nb_local.push_back(l);
      }
      normalize(nb_local);
      r.add("normal-neighbourhood", mapped && is_subset(nb_local, bc.face_vertices[f]) &&
                                        is_subset(nb_rest, VertexSet{bc.to_global[v]}),
            where);
    }
  }
  return r;
}

}  // namespace rcd
