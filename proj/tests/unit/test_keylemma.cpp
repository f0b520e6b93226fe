#include "doctest.h"
#include "oracles.hpp"
#include "rcd/errors.hpp"
#include "rcd/generators.hpp"
#include "rcd/keylemma.hpp"

using namespace rcd;

namespace {

struct FaceSpec {
  std::vector<Edge> edges;
  VertexSet extra_vertices;
  bool singular = false;
};

// Boundary complex with identity ids. Edges not listed in any face are
// outer-only.
BoundaryComplex make_complex(int n, const std::vector<Edge>& outer_only, const std::vector<FaceSpec>& faces,
                             const VertexSet& exits) {
  BoundaryComplex bc;
  bc.t = 2;
  std::vector<Edge> edges;
  std::vector<int> owner;
  for (int f = 0; f < static_cast<int>(faces.size()); ++f)
    for (const Edge& e : faces[f].edges) {
      edges.push_back(e);
      owner.push_back(f);
    }
  for (const Edge& e : outer_only) {
    edges.push_back(e);
    owner.push_back(kOuterOnly);
  }
  bc.graph = Graph(n, edges);
  for (int v = 0; v < n; ++v) bc.to_global.push_back(v);
  bc.edge_face = owner;
  bc.vertex_faces.assign(n, {});
  for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
    VertexSet vs = faces[f].extra_vertices;
    std::vector<int> es;
    for (int e = 0; e < bc.graph.m(); ++e)
      if (owner[e] == f) {
        vs.push_back(bc.graph.edge(e).first);
        vs.push_back(bc.graph.edge(e).second);
        es.push_back(e);
      }
    normalize(vs);
    for (Vertex v : vs) bc.vertex_faces[v].push_back(f);
    bc.face_vertices.push_back(vs);
    bc.face_edges.push_back(es);
    bc.face_singular.push_back(faces[f].singular);
  }
  bc.exit = to_mask(n, exits);
  return bc;
}

// Two triangles joined through outer-only paths, a singular face on {6, 7},
// a third triangle hanging off vertex 0 and a pendant path 9-11-12.
BoundaryComplex theta_complex() {
  return make_complex(13, {{0, 5}, {5, 3}, {1, 6}, {10, 0}, {9, 11}, {11, 12}},
                      {{{{0, 1}, {1, 2}, {2, 0}}, {}, false},
                       {{{2, 3}, {3, 4}, {4, 2}}, {}, false},
                       {{}, {6, 7}, true},
                       {{{8, 9}, {9, 10}, {10, 8}}, {}, false}},
                      {4});
}

BoundaryComplex cycle_complex(int n, const VertexSet& exits) {
  FaceSpec f;
  for (int i = 0; i < n; ++i) f.edges.push_back({i, (i + 1) % n});
  return make_complex(n, {}, {f}, exits);
}

Embedding triangle_with_inner_path() {
  Graph tri = cycle_graph(3);
  std::vector<std::vector<Dart>> rot(3);
  for (int e = 0; e < 3; ++e) {
    rot[tri.edge(e).first].push_back(make_dart(e, 0));
    rot[tri.edge(e).second].push_back(make_dart(e, 1));
  }
  Embedding emb(tri, rot, 0);
  auto inner_face_at = [](const Embedding& e, Vertex v) {
    for (int f : e.faces_at(v))
      if (f != e.outer_face()) return f;
    return -1;
  };
  emb = add_pendant_vertex(emb, inner_face_at(emb, 0), 0);
  emb = add_pendant_vertex(emb, inner_face_at(emb, 3), 3);
  return add_pendant_vertex(emb, inner_face_at(emb, 4), 4);
}

}  // namespace

TEST_SUITE("keylemma") {
  TEST_CASE("exits") {
    Embedding g5 = grid(5);
    RadialLayering l5 = radial_layering(g5);
    CHECK(exits(g5, l5, 2) == l5.layer(2));

    Embedding tp = triangle_with_inner_path();
    RadialLayering lt = radial_layering(tp);
    REQUIRE(lt.count() == 2);
    CHECK(lt.layer(2) == VertexSet{3, 4, 5});
    CHECK(exits(tp, lt, 2) == VertexSet{3});

    for (int m = 3; m <= 5; ++m) {
      Embedding sg = subdivided_grid(m);
      RadialLayering l = radial_layering(sg);
      VertexSet ex = exits(sg, l, 2);
      VertexSet scan;
      for (Vertex v : l.layer(2))
        for (Vertex u : sg.graph().neighbors(v))
          if (l.index[u] == 1) scan.push_back(v);
      CHECK(ex == normalized(scan));
      CHECK_FALSE(ex.empty());
      for (Vertex v : ex) CHECK(v >= m * m);
    }
  }

  TEST_CASE("face sides") {
    BoundaryComplex c = cycle_complex(6, {0});
    for (int i = 0; i < 6; ++i) CHECK(face_side(c, i, (i + 1) % 6) == 0);
    BoundaryComplex th = theta_complex();
    CHECK(face_side(th, 2, 0) == 0);
    CHECK(face_side(th, 3, 2) == 1);
    CHECK(face_side(th, 0, 5) == kOuterOnly);
    CHECK_THROWS_AS(face_side(th, 0, 3), InvalidInput);

    Embedding tp = triangle_with_inner_path();
    BoundaryComplex bc = boundary_complex(tp, radial_layering(tp), 2);
    CHECK(bc.num_faces() == 0);
    CHECK(face_side(bc, 3, 4) == kOuterOnly);
    CHECK(face_side(bc, 4, 5) == kOuterOnly);
  }

  TEST_CASE("pair classes on a cycle") {
    BoundaryComplex c = cycle_complex(6, {0});
    CHECK(classify_pair(c, 0, 0) == PairClass::Critical);
    for (Vertex v = 1; v < 6; ++v) {
      CHECK(classify_pair(c, 0, v) == PairClass::Normal);
      CHECK(y_set(c, 0, v) == VertexSet{v});
    }
  }

  TEST_CASE("pair classes on the theta complex") {
    BoundaryComplex th = theta_complex();
    CHECK(classify_pair(th, 0, 0) == PairClass::SingularTypeI);
    CHECK(classify_pair(th, 0, 2) == PairClass::SingularTypeI);
    CHECK(classify_pair(th, 0, 1) == PairClass::SingularTypeII);
    CHECK(classify_pair(th, 1, 3) == PairClass::SingularTypeI);
    CHECK(classify_pair(th, 1, 2) == PairClass::SingularTypeI);
    CHECK(classify_pair(th, 1, 4) == PairClass::Critical);
    CHECK(classify_pair(th, 3, 8) == PairClass::Normal);
    CHECK(classify_pair(th, 3, 9) == PairClass::Normal);
    CHECK(classify_pair(th, 3, 10) == PairClass::SingularTypeII);
    CHECK(y_set(th, 3, 8) == VertexSet{8});
    CHECK(y_set(th, 3, 9) == VertexSet{9, 11, 12});
    CHECK(y_set(th, 0, 1) == VertexSet{1, 6});
    CHECK_THROWS_AS(classify_pair(th, 0, 4), InvalidInput);
  }

  TEST_CASE("y sets match path enumeration") {
    BoundaryComplex th = theta_complex();
    for (int f = 0; f < th.num_faces(); ++f)
      for (Vertex v : th.face_vertices[f]) CHECK(y_set(th, f, v) == oracle::reachable_by_paths(th, f, v));
  }

  TEST_CASE("normal pairs have no exits and touch their face once") {
    BoundaryComplex th = theta_complex();
    for (int f = 0; f < th.num_faces(); ++f)
      for (Vertex v : th.face_vertices[f]) {
        if (classify_pair(th, f, v) != PairClass::Normal) continue;
        VertexSet y = y_set(th, f, v);
        for (Vertex u : y) CHECK_FALSE(th.exit[u]);
        CHECK(set_intersection(y, th.face_vertices[f]) == VertexSet{v});
        for (int g = 0; g < th.num_faces(); ++g) {
          if (g == f) continue;
          std::size_t common = set_intersection(y, th.face_vertices[g]).size();
          CHECK((common == 0 || common == th.face_vertices[g].size()));
        }
      }
  }

  TEST_CASE("legal paths") {
    BoundaryComplex c = cycle_complex(6, {0});
    std::vector<Vertex> p = legal_path(c, 3);
    CHECK(p.front() == 3);
    CHECK(p.back() == 0);
    CHECK(p.size() == 4);
    CHECK(is_legal(c, p));
    CHECK(legal_path(c, 0) == std::vector<Vertex>{0});

    BoundaryComplex th = theta_complex();
    for (Vertex v : {0, 1, 2, 3, 5, 8, 9, 10, 12}) {
      std::vector<Vertex> q = legal_path(th, v);
      CHECK(q.front() == v);
      CHECK(th.exit[q.back()]);
      CHECK(normalized(q).size() == q.size());
      CHECK(is_legal(th, q));
    }
    CHECK_THROWS_AS(legal_path(th, 7), HypothesisViolation);
  }

  TEST_CASE("a path that stays on a face past a critical vertex is illegal") {
    // Vertex 1 is an exit on face 0, so (0, 1) is critical.
    BoundaryComplex c = cycle_complex(4, {1, 3});
    CHECK(classify_pair(c, 0, 1) == PairClass::Critical);
    CHECK_FALSE(is_legal(c, {0, 1, 2}));
    CHECK(is_legal(c, {0, 1}));
  }

  TEST_CASE("key sets on the hand-built complex") {
    BoundaryComplex th = theta_complex();
    KeyOutput empty = compute_key_sets(th, {});
    CHECK(empty.x.empty());
    CHECK(empty.lplus.empty());

    KeyOutput out = compute_key_sets(th, {9});
    REQUIRE(out.paths.size() == 1);
    CHECK(out.x == normalized(out.paths[0]));
    CHECK(has(out.x, 9));
    VertexSet expected;
    for (Vertex v : out.x)
      for (int f : th.vertex_faces[v])
        if (classify_pair(th, f, v) == PairClass::Normal) expected = set_union(expected, y_set(th, f, v));
    CHECK(out.lplus == expected);
    CHECK(has(out.lplus, 11));
    for (Vertex v : out.lplus) CHECK_FALSE(th.exit[v]);
  }

  TEST_CASE("key sets on grids") {
    Embedding g5 = grid(5);
    RadialLayering l5 = radial_layering(g5);
    BoundaryComplex bc = boundary_complex(g5, l5, 2);
    CHECK(bc.num_faces() == 1);
    for (const Edge& e : bc.graph.edges())
      CHECK(face_side(bc, bc.to_global[e.first], bc.to_global[e.second]) == 0);
    for (Vertex v : l5.layer(2)) CHECK(classify_pair(bc, 0, v) == PairClass::Critical);

    KeyOutput none = compute_key_sets(g5, l5, 2, {});
    CHECK(verify_key_conditions(g5, l5, bc, none).ok());
    KeyOutput corner = compute_key_sets(g5, l5, 2, {6});
    CHECK(corner.x == VertexSet{6});
    CHECK(corner.lplus.empty());
    CHECK(verify_key_conditions(g5, l5, bc, corner).ok());
  }

  TEST_CASE("key sets from a non-exit on a subdivided grid") {
    for (int m = 4; m <= 5; ++m) {
      Embedding sg = subdivided_grid(m);
      RadialLayering l = radial_layering(sg);
      VertexSet ex = exits(sg, l, 2);
      VertexSet non_exit = set_minus(l.layer(2), ex);
      REQUIRE_FALSE(non_exit.empty());
      BoundaryComplex bc = boundary_complex(sg, l, 2);
      for (Vertex v : non_exit) {
        KeyOutput out = compute_key_sets(bc, {v});
        CHECK(out.x.size() >= 2);
        CHECK(is_legal(bc, out.paths[0]));
        CHECK(has(ex, out.paths[0].back()));
        Report r = verify_key_conditions(sg, l, bc, out);
        CHECK_MESSAGE(r.ok(), r.summary());
      }
    }
  }

  TEST_CASE("an exit placed in the extension is caught") {
    Embedding sg = subdivided_grid(4);
    RadialLayering l = radial_layering(sg);
    BoundaryComplex bc = boundary_complex(sg, l, 2);
    VertexSet ex = exits(sg, l, 2);
    KeyOutput out = compute_key_sets(bc, {set_minus(l.layer(2), ex).front()});
    REQUIRE(verify_key_conditions(sg, l, bc, out).ok());
    out.lplus = set_union(out.lplus, {ex.back()});
    CHECK_FALSE(verify_key_conditions(sg, l, bc, out).ok());
  }

  TEST_CASE("classification matches path enumeration on small layers") {
    int compared = 0;
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      Embedding emb = random_planar(14 + static_cast<int>(seed % 11), seed);
      RadialLayering l = radial_layering(emb);
      for (int t = 2; t <= l.count(); ++t) {
        if (l.layer(t).size() > 12) continue;
        BoundaryComplex bc = boundary_complex(emb, l, t);
        for (int f = 0; f < bc.num_faces(); ++f)
          for (Vertex lv : bc.face_vertices[f]) {
            Vertex v = bc.to_global[lv];
            CHECK(classify_pair(bc, f, v) == oracle::classify_by_paths(emb, l, bc, f, v));
            CHECK(y_set(bc, f, v) == oracle::reachable_by_paths(bc, f, v));
            ++compared;
          }
      }
    }
    CHECK(compared > 50);
  }
}
