#include "rcd/generators.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "rcd/errors.hpp"

namespace rcd {
namespace {

// Incoming dart of x on a walk of face f, or -1 when x is isolated there.
// Returns false if x is not on the face.
bool find_corner(const Embedding& emb, int f, Vertex x, int& walk, Dart& incoming) {
  for (int w = 0; w < static_cast<int>(emb.walks().size()); ++w) {
    if (emb.walk_face()[w] != f) continue;
    const FacialWalk& fw = emb.walks()[w];
    if (fw.isolated == x) {
      walk = w;
      incoming = -1;
      return true;
    }
    for (Dart d : fw.darts) {
      if (emb.head(d) == x) {
        walk = w;
        incoming = d;
        return true;
      }
    }
  }
  return false;
}

void insert_after(std::vector<Dart>& rot, Dart after, Dart d) {
  if (after < 0) {
    rot.push_back(d);
    return;
  }
  auto it = std::find(rot.begin(), rot.end(), after);
  rot.insert(it + 1, d);
}

Embedding with_new_edge(const Embedding& emb, int new_n, Vertex x, Dart x_in, Vertex y, Dart y_in) {
  if (emb.grouped()) throw InvalidInput("editing a grouped embedding is not supported");
  const Graph& g = emb.graph();
  // Reference for the outer face: one of its darts, or its isolated vertex.
  Dart ref = -1;
  Vertex ref_vertex = -1;
  if (emb.outer_face() >= 0) {
    for (int w = 0; w < static_cast<int>(emb.walks().size()); ++w) {
      if (emb.walk_face()[w] != emb.outer_face()) continue;
      if (!emb.walks()[w].darts.empty()) ref = emb.walks()[w].darts.front();
      else ref_vertex = emb.walks()[w].isolated;
      break;
    }
  }
  std::vector<Edge> es = g.edges();
  const int e = static_cast<int>(es.size());
  es.emplace_back(x, y);
  auto rot = emb.rotation();
  rot.resize(new_n);
  insert_after(rot[x], x_in < 0 ? -1 : reverse(x_in), make_dart(e, 0));
  insert_after(rot[y], y_in < 0 ? -1 : reverse(y_in), make_dart(e, 1));
  Graph ng(new_n, std::move(es));
  Embedding tmp(ng, rot, 0);
  int outer;
  if (ref >= 0) {
    outer = tmp.face_of_dart(ref);
  } else {
    outer = tmp.faces_at(ref_vertex).front();
  }
  Embedding out = tmp.with_outer_face(outer);
  if (out.genus() != emb.genus()) throw InternalError("edge insertion changed the genus");
  return out;
}

int face_with(const Embedding& emb, Vertex x, Vertex y) {
  for (int f : emb.faces_at(x))
    if (has(emb.boundary(f).vertices, y)) return f;
  return -1;
}

Vertex grid_id(int m, int r, int c) { return r * m + c; }

// Grid edge ids and the rotation order east, north, west, south.
struct GridLayout {
  std::vector<Edge> edges;
  std::vector<std::vector<int>> around;  // per vertex: edge ids in rotation order
};

GridLayout grid_layout(int m) {
  GridLayout gl;
  std::vector<std::vector<int>> dir(m * m, std::vector<int>(4, -1));
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < m; ++c) {
      if (c + 1 < m) {
        int e = static_cast<int>(gl.edges.size());
        gl.edges.emplace_back(grid_id(m, r, c), grid_id(m, r, c + 1));
        dir[grid_id(m, r, c)][0] = e;
        dir[grid_id(m, r, c + 1)][2] = e;
      }
      if (r + 1 < m) {
        int e = static_cast<int>(gl.edges.size());
        gl.edges.emplace_back(grid_id(m, r, c), grid_id(m, r + 1, c));
        dir[grid_id(m, r, c)][3] = e;
        dir[grid_id(m, r + 1, c)][1] = e;
      }
    }
  }
  gl.around.resize(m * m);
  for (int v = 0; v < m * m; ++v)
    for (int k = 0; k < 4; ++k)
      if (dir[v][k] >= 0) gl.around[v].push_back(dir[v][k]);
  return gl;
}

Dart dart_from(const Graph& g, int e, Vertex v) { return make_dart(e, g.edge(e).first == v ? 0 : 1); }

}  // namespace

Embedding add_pendant_vertex(const Embedding& emb, int face, Vertex a) {
  int walk;
  Dart in;
  if (face < 0 || face >= emb.num_faces() || !find_corner(emb, face, a, walk, in))
    throw InvalidInput("vertex is not on the face");
  const int n = emb.graph().n();
  return with_new_edge(emb, n + 1, a, in, n, -1);
}

Embedding add_chord(const Embedding& emb, int face, Vertex x, Vertex y) {
  if (x == y || emb.graph().has_edge(x, y)) throw InvalidInput("chord would be a loop or a duplicate edge");
  if (face < 0 || face >= emb.num_faces()) throw InvalidInput("face out of range");
  // Both corners on the same walk.
  for (int w = 0; w < static_cast<int>(emb.walks().size()); ++w) {
    if (emb.walk_face()[w] != face) continue;
    Dart xin = -2, yin = -2;
    const FacialWalk& fw = emb.walks()[w];
    for (Dart d : fw.darts) {
      if (xin == -2 && emb.head(d) == x) xin = d;
      if (yin == -2 && emb.head(d) == y) yin = d;
    }
    if (xin >= 0 && yin >= 0) return with_new_edge(emb, emb.graph().n(), x, xin, y, yin);
  }
  throw InvalidInput("chord endpoints do not share a walk of the face");
}

Embedding grid(int m) {
  if (m < 1) throw InvalidInput("grid side must be positive");
  GridLayout gl = grid_layout(m);
  Graph g(m * m, gl.edges);
  std::vector<std::vector<Dart>> rot(m * m);
  for (int v = 0; v < m * m; ++v)
    for (int e : gl.around[v]) rot[v].push_back(dart_from(g, e, v));
  Embedding tmp(g, rot, 0);
  if (m == 1) return tmp;
  // The top row read right to left runs along the outer face.
  int e01 = g.edge_id(1, 0);
  return tmp.with_outer_face(tmp.face_of_dart(dart_from(g, e01, 1)));
}

Embedding subdivided_grid(int m) {
  if (m < 1) throw InvalidInput("grid side must be positive");
  GridLayout gl = grid_layout(m);
  const int base = m * m;
  const int n = base + static_cast<int>(gl.edges.size());
  std::vector<Edge> es;
  // Grid edge e = (u, v) becomes edges 2e = (u, mid) and 2e + 1 = (mid, v).
  for (int e = 0; e < static_cast<int>(gl.edges.size()); ++e) {
    es.emplace_back(gl.edges[e].first, base + e);
    es.emplace_back(base + e, gl.edges[e].second);
  }
  Graph g(n, es);
  std::vector<std::vector<Dart>> rot(n);
  for (int v = 0; v < base; ++v) {
    for (int e : gl.around[v]) {
      int half = gl.edges[e].first == v ? 2 * e : 2 * e + 1;
      rot[v].push_back(dart_from(g, half, v));
    }
  }
  for (int e = 0; e < static_cast<int>(gl.edges.size()); ++e) {
    rot[base + e].push_back(dart_from(g, 2 * e, base + e));
    rot[base + e].push_back(dart_from(g, 2 * e + 1, base + e));
  }
  Embedding tmp(g, rot, 0);
  if (m == 1) return tmp;
  // Grid edge 0 joins 0 and 1; its midpoint to 0 runs along the outer face.
  int half = g.edge_id(base, 0);
  return tmp.with_outer_face(tmp.face_of_dart(dart_from(g, half, base)));
}

ApexStructure apex_grid(int m, int a) {
  if (a < 0) throw InvalidInput("apex count must be non-negative");
  ApexStructure st;
  st.embedding = grid(m);
  const int base = m * m;
  std::vector<Edge> es = st.embedding.graph().edges();
  for (int i = 0; i < a; ++i) {
    for (int v = 0; v < base; ++v) es.emplace_back(v, base + i);
    for (int j = 0; j < i; ++j) es.emplace_back(base + j, base + i);
    st.apices.push_back(base + i);
  }
  st.graph = Graph(base + a, es);
  st.h = a;
  return st;
}

Embedding random_planar(int n, std::uint64_t seed, double delete_fraction) {
  if (n < 0) throw InvalidInput("vertex count must be non-negative");
  std::mt19937_64 rng(seed);
  if (n == 0) return Embedding();
  if (n == 1) return Embedding(Graph(1), {{}}, 0);
  Embedding emb;
  if (n == 2) {
    Graph g(2, {{0, 1}});
    return Embedding(g, {{make_dart(0, 0)}, {make_dart(0, 1)}}, 0);
  }
  {
    Graph g(3, {{0, 1}, {1, 2}, {2, 0}});
    std::vector<std::vector<Dart>> rot = {{make_dart(0, 0), make_dart(2, 1)},
                                          {make_dart(1, 0), make_dart(0, 1)},
                                          {make_dart(2, 0), make_dart(1, 1)}};
    emb = Embedding(g, rot, 0);
  }
  for (int v = 3; v < n; ++v) {
    std::vector<int> inner;
    for (int f = 0; f < emb.num_faces(); ++f)
      if (f != emb.outer_face()) inner.push_back(f);
    int f = inner[rng() % inner.size()];
    VertexSet tri = emb.boundary(f).vertices;
    emb = add_pendant_vertex(emb, f, tri[0]);
    for (int k = 1; k < 3; ++k) emb = add_chord(emb, face_with(emb, v, tri[k]), v, tri[k]);
  }
  const Graph& g = emb.graph();
  std::vector<int> order(g.m());
  for (int e = 0; e < g.m(); ++e) order[e] = e;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<char> keep(g.m(), 1);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int e : order) {
    if (coin(rng) >= delete_fraction) continue;
    keep[e] = 0;
    std::vector<Edge> es;
    for (int k = 0; k < g.m(); ++k)
      if (keep[k]) es.push_back(g.edge(k));
    if (!is_connected(Graph(g.n(), es))) keep[e] = 1;
  }
  return sub_embedding(emb, std::vector<char>(g.n(), 1), keep).embedding;
}

RsInput subdivided_grid_star(int m) {
  RsInput in;
  Embedding sg = subdivided_grid(m);
  in.graph = sg.graph();
  const int base = m * m;
  Embedding gr = grid(m);
  const Graph& gg = gr.graph();
  std::vector<int> parent{-1};
  std::vector<VertexSet> bags(1);
  for (int v = 0; v < base; ++v) bags[0].push_back(v);
  in.torsos.push_back(TorsoStructure{{}, gr});
  for (int e = 0; e < gg.m(); ++e) {
    auto [u, v] = gg.edge(e);
    parent.push_back(0);
    bags.push_back(normalized({u, v, base + e}));
    in.torsos.push_back(TorsoStructure{normalized({u, v}), Embedding(Graph(1), {{}}, 0)});
  }
  in.td = TreeDecomposition(parent, bags);
  in.h = 2;
  return in;
}

VertexSet CliqueSumBuilder::embedded_vertices(int piece) const {
  const Node& nd = pieces_[piece];
  VertexSet out;
  for (int i = 0; i < nd.embedded.graph().n(); ++i) out.push_back(nd.first + i);
  return out;
}

VertexSet CliqueSumBuilder::apices(int piece) const {
  return set_union(pieces_[piece].adhesion, pieces_[piece].own_apices);
}

VertexSet CliqueSumBuilder::bag(int piece) const { return set_union(embedded_vertices(piece), apices(piece)); }

int CliqueSumBuilder::add(Piece piece) {
  Node nd;
  nd.parent = piece.parent;
  nd.first = n_;
  const int k = piece.embedded.graph().n();
  n_ += k;
  for (auto [u, v] : piece.embedded.graph().edges()) edges_.emplace_back(nd.first + u, nd.first + v);
  for (const auto& links : piece.apex_links) {
    Vertex a = n_++;
    nd.own_apices.push_back(a);
    VertexSet ls = normalized(links);
    if (ls.empty()) throw InvalidInput("apex without neighbours");
    for (Vertex l : ls) {
      if (l < 0 || l >= k) throw InvalidInput("apex link out of range");
      edges_.emplace_back(a, nd.first + l);
    }
  }
  if (pieces_.empty()) {
    if (piece.parent != -1 || !piece.adhesion.empty()) throw InvalidInput("first piece must be the root");
  } else {
    if (piece.parent < 0 || piece.parent >= size()) throw InvalidInput("parent piece out of range");
    normalize(piece.adhesion);
    if (!is_subset(piece.adhesion, bag(piece.parent))) throw InvalidInput("adhesion outside the parent bag");
    if (piece.adhesion_links.size() != piece.adhesion.size()) throw InvalidInput("one link list per adhesion vertex");
    for (std::size_t i = 0; i < piece.adhesion.size(); ++i) {
      VertexSet ls = normalized(piece.adhesion_links[i]);
      if (ls.empty()) throw InvalidInput("adhesion vertex without neighbours in the piece");
      for (Vertex l : ls) {
        if (l < 0 || l >= k) throw InvalidInput("adhesion link out of range");
        edges_.emplace_back(piece.adhesion[i], nd.first + l);
      }
    }
    Node& par = pieces_[piece.parent];
    VertexSet on_embedding;
    for (Vertex v : set_intersection(piece.adhesion, embedded_vertices(piece.parent)))
      on_embedding.push_back(v - par.first);
    if (on_embedding.size() > 3) throw InvalidInput("more than three non-apex adhesion vertices");
    for (std::size_t i = 0; i < on_embedding.size(); ++i) {
      for (std::size_t j = i + 1; j < on_embedding.size(); ++j) {
        Vertex x = on_embedding[i], y = on_embedding[j];
        if (par.embedded.graph().has_edge(x, y)) continue;
        int f = face_with(par.embedded, x, y);
        if (f < 0) throw InvalidInput("adhesion vertices share no face of the parent");
        par.embedded = add_chord(par.embedded, f, x, y);
      }
    }
    nd.adhesion = piece.adhesion;
  }
  nd.embedded = std::move(piece.embedded);
  pieces_.push_back(std::move(nd));
  return size() - 1;
}

RsInput CliqueSumBuilder::build() const {
  RsInput in;
  in.graph = Graph(n_, edges_);
  std::vector<int> parent;
  std::vector<VertexSet> bags;
  for (int t = 0; t < size(); ++t) {
    parent.push_back(pieces_[t].parent);
    bags.push_back(bag(t));
    in.torsos.push_back(TorsoStructure{apices(t), pieces_[t].embedded});
    in.h = std::max(in.h, static_cast<int>(apices(t).size()));
  }
  in.td = TreeDecomposition(parent, bags);
  return in;
}

RsInput random_clique_sum(std::uint64_t seed, const CliqueSumOptions& opt) {
  if (opt.pieces < 1 || opt.min_side < 1 || opt.max_side < opt.min_side) throw InvalidInput("bad clique-sum options");
  std::mt19937_64 rng(seed);
  auto side = [&] { return opt.min_side + static_cast<int>(rng() % (opt.max_side - opt.min_side + 1)); };
  auto make_piece = [&] {
    int s = side();
    return opt.planar_pieces ? random_planar(s * s, rng()) : grid(s);
  };
  auto random_subset = [&](int k, int lo, int hi) {
    std::vector<Vertex> all(k);
    for (int i = 0; i < k; ++i) all[i] = i;
    std::shuffle(all.begin(), all.end(), rng);
    int cnt = std::min(k, lo + static_cast<int>(rng() % (hi - lo + 1)));
    return VertexSet(all.begin(), all.begin() + cnt);
  };
  CliqueSumBuilder b;
  for (int j = 0; j < opt.pieces; ++j) {
    CliqueSumBuilder::Piece piece;
    piece.embedded = make_piece();
    const int k = piece.embedded.graph().n();
    int own = static_cast<int>(rng() % (opt.max_own_apices + 1));
    for (int a = 0; a < own; ++a) piece.apex_links.push_back(normalized(random_subset(k, 1, std::max(1, k / 2))));
    if (j > 0) {
      piece.parent = static_cast<int>(rng() % j);
      const Embedding& pe = b.embedding(piece.parent);
      Vertex first = b.embedded_vertices(piece.parent).front();
      int want = 1 + static_cast<int>(rng() % 3);
      std::vector<int> faces;
      for (int f = 0; f < pe.num_faces(); ++f)
        if (static_cast<int>(pe.boundary(f).vertices.size()) >= want) faces.push_back(f);
      if (faces.empty()) want = 1, faces.push_back(0);
      const VertexSet& fv = pe.boundary(faces[rng() % faces.size()]).vertices;
      std::vector<Vertex> pool = fv;
      std::shuffle(pool.begin(), pool.end(), rng);
      for (int i = 0; i < want; ++i) piece.adhesion.push_back(first + pool[i]);
      VertexSet pa = b.apices(piece.parent);
      if (!pa.empty() && rng() % 2 == 0) piece.adhesion.push_back(pa[rng() % pa.size()]);
      normalize(piece.adhesion);
      for (std::size_t i = 0; i < piece.adhesion.size(); ++i) piece.adhesion_links.push_back(random_subset(k, 1, 3));
    }
    b.add(std::move(piece));
  }
  return b.build();
}

}  // namespace rcd
