#include "doctest.h"
#include "instances.hpp"
#include "oracles.hpp"
#include "rcd/cliquesum.hpp"
#include "rcd/errors.hpp"
#include "rcd/generators.hpp"
#include "rcd/robustness.hpp"

using namespace rcd;

namespace {

Embedding path_embedding(int n) {
  Graph g = path_graph(n);
  std::vector<std::vector<Dart>> rot(n);
  for (int e = 0; e < g.m(); ++e) {
    rot[g.edge(e).first].push_back(make_dart(e, 0));
    rot[g.edge(e).second].push_back(make_dart(e, 1));
  }
  return Embedding(g, rot, 0);
}

Embedding single_vertex() { return Embedding(Graph(1), {{}}, 0); }

RsInput one_piece(const Embedding& emb) {
  CliqueSumBuilder b;
  b.add({emb, -1, {}, {}, {}});
  return b.build();
}

// grid(4) on 0..15 with a grid(3) child on 16..24 attached to the face
// triangle {0, 1, 5}.
RsInput grids_on_triangle() {
  CliqueSumBuilder b;
  b.add({grid(4), -1, {}, {}, {}});
  b.add({grid(3), 0, {0, 1, 5}, {{0}, {1, 3}, {4}}, {}});
  return b.build();
}

// Single node: grid(3) plus apices 9 and 10 joined to each other.
RsInput grid_with_apex_pair(Vertex link9, Vertex link10) {
  std::vector<Edge> edges = grid(3).graph().edges();
  edges.push_back({9, link9});
  edges.push_back({10, link10});
  edges.push_back({9, 10});
  RsInput in;
  in.graph = Graph(11, edges);
  in.td = TreeDecomposition({-1}, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10}});
  in.torsos = {TorsoStructure{{9, 10}, grid(3)}};
  in.h = 2;
  return in;
}

int failed(const Report& r, const std::string& name) {
  const Check* c = r.find(name);
  return c != nullptr && !c->pass;
}

}  // namespace

TEST_SUITE("cliquesum") {
  TEST_CASE("valid inputs") {
    CHECK(validate_rs(one_piece(grid(4))).ok());
    Report r = validate_rs(grids_on_triangle());
    CHECK_MESSAGE(r.ok(), r.summary());
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      CliqueSumOptions opt;
      opt.pieces = 1 + static_cast<int>(seed % 4);
      opt.planar_pieces = seed % 2 == 0;
      CHECK(validate_rs(random_clique_sum(seed, opt)).ok());
    }
    for (int m = 2; m <= 5; ++m) CHECK(validate_rs(subdivided_grid_star(m)).ok());
  }

  TEST_CASE("adhesion larger than h") {
    RsInput in = grids_on_triangle();
    in.h = 2;
    Report r = validate_rs(in);
    CHECK_FALSE(r.ok());
    CHECK(failed(r, "adhesion-size"));
    CHECK_THROWS_AS(combine(in, 2), HypothesisViolation);
  }

  TEST_CASE("wrong torso embedding") {
    RsInput in = grids_on_triangle();
    in.torsos[0].embedding = grid(4);
    CHECK_FALSE(validate_rs(in).ok());
  }

  TEST_CASE("redundant apex edges") {
    RsInput plain = one_piece(grid(3));
    CHECK(build_gt(plain, 0).graph == grid(3).graph());

    RsInput shared = grid_with_apex_pair(4, 4);
    REQUIRE(validate_rs(shared).ok());
    Subgraph gt = build_gt(shared, 0);
    CHECK_FALSE(gt.graph.has_edge(gt.local(9), gt.local(10)));
    CHECK(gt.graph.m() == shared.graph.m() - 1);

    RsInput apart = grid_with_apex_pair(0, 8);
    REQUIRE(validate_rs(apart).ok());
    Subgraph ga = build_gt(apart, 0);
    CHECK(ga.graph.has_edge(ga.local(9), ga.local(10)));
  }

  TEST_CASE("witness neighbours") {
    CHECK(witness_set(one_piece(grid(3)), 0).empty());

    CliqueSumBuilder b;
    b.add({grid(3), -1, {}, {}, {}});
    b.add({path_embedding(5), 0, {4}, {{4, 1}}, {}});
    RsInput in = b.build();
    REQUIRE(validate_rs(in).ok());
    CHECK(witness_set(in, 1) == VertexSet{10});

    CliqueSumBuilder c;
    c.add({grid(3), -1, {}, {}, {}});
    c.add({single_vertex(), 0, {0, 1, 4}, {{0}, {0}, {0}}, {}});
    RsInput tri = c.build();
    REQUIRE(validate_rs(tri).ok());
    CHECK(witness_set(tri, 1) == VertexSet{9});
    Subgraph gt = build_gt(tri, 1);
    CHECK_FALSE(gt.graph.has_edge(gt.local(0), gt.local(1)));
    CHECK_FALSE(gt.graph.has_edge(gt.local(1), gt.local(4)));
    CHECK(gt.graph.m() == 3);
  }

  TEST_CASE("tree colouring") {
    RsInput in = grids_on_triangle();
    std::vector<std::vector<VertexSet>> classes(2, std::vector<VertexSet>(2));
    CHECK(color_tree(in, classes, 2) == std::vector<int>{1, 1});
    classes[0][1] = {0, 1};
    CHECK(color_tree(in, classes, 2) == std::vector<int>{1, 2});
    classes[0] = {{0}, {5}};
    CHECK(color_tree(in, classes, 2) == std::vector<int>{1, 1});
    classes[0] = {{0, 5}, {}};
    CHECK(color_tree(in, classes, 2) == std::vector<int>{1, 1});
  }

  TEST_CASE("a single torso reduces to the embedded decomposition") {
    for (int m = 3; m <= 8; ++m) {
      Rcd c = combine(one_piece(grid(m)), 3);
      Rcd e = decompose_embedded(grid(m), 3, {});
      CHECK(c.classes[0] == set_union(e.classes[0], e.residue));
      CHECK(c.classes[1] == e.classes[1]);
      CHECK(c.classes[2] == e.classes[2]);
      CHECK(c.residue.empty());
    }
  }

  TEST_CASE("subdivided grid star") {
    for (int m = 3; m <= 7; ++m) {
      RsInput in = subdivided_grid_star(m);
      const int p = 2;
      Rcd r = combine(in, p);
      REQUIRE(r.torsos.has_value());
      const auto& root = r.torsos->classes[0];
      Embedding gr = grid(m);
      std::vector<VertexSet> expected = root;
      expected[0] = set_union(expected[0], r.torsos->residue[0]);
      for (int e = 0; e < gr.graph().m(); ++e) {
        auto [u, v] = gr.graph().edge(e);
        int cls = 0;
        for (int i = 0; i < p; ++i)
          if (has(root[i], u) && has(root[i], v)) cls = i;
        expected[cls].push_back(m * m + e);
      }
      for (auto& z : expected) normalize(z);
      CHECK(r.classes == expected);

      bool shrinks = false;
      for (const VertexSet& z : r.classes) shrinks |= contract_set(in.graph, z).target.n() < in.graph.n();
      CHECK(shrinks);
      CHECK(verify_connected_bottom(in, r).ok());
      CHECK(oracle::connected_bottom_failures(in, r) == 0);
    }
  }

  TEST_CASE("moving a colored midpoint breaks the bottom connectivity") {
    const int m = 6;
    RsInput in = subdivided_grid_star(m);
    Rcd r = combine(in, 2);
    const auto& root = r.torsos->classes[0];
    Embedding gr = grid(m);
    int moved = 0;
    for (int e = 0; e < gr.graph().m() && moved == 0; ++e) {
      auto [u, v] = gr.graph().edge(e);
      for (int i = 0; i < 2; ++i) {
        if (!has(root[i], u) || !has(root[i], v)) continue;
        Rcd bad = r;
        Vertex mid = m * m + e;
        bad.classes[i] = set_minus(bad.classes[i], {mid});
        bad.classes[1 - i] = set_union(bad.classes[1 - i], {mid});
        Report rep = verify_connected_bottom(in, bad);
        CHECK_FALSE(rep.ok());
        CHECK(failed(rep, "fake-edges-realised"));
        CHECK(oracle::connected_bottom_failures(in, bad) > 0);
        ++moved;
      }
    }
    CHECK(moved == 1);
  }

  TEST_CASE("two grids on a triangle") {
    RsInput in = grids_on_triangle();
    Rcd r = combine(in, 2);
    VertexSet all;
    std::size_t total = 0;
    for (const VertexSet& z : r.classes) {
      all = set_union(all, z);
      total += z.size();
    }
    CHECK(total == static_cast<std::size_t>(in.graph.n()));
    CHECK(all.size() == total);
    CHECK(verify_connected_bottom(in, r).ok());
    RobustnessOptions opt;
    opt.seed = 3;
    RobustnessReport rep = verify_rcd(in.graph, r, opt);
    CHECK(rep.samples.size() == 20);
    for (const auto& s : rep.samples) CHECK(s.tw_upper >= 0);
  }

  TEST_CASE("random clique-sums combine into partitions that pass both bottom checks") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
      CliqueSumOptions opt;
      opt.pieces = 2 + static_cast<int>(seed % 3);
      opt.planar_pieces = seed % 2 == 1;
      RsInput in = random_clique_sum(seed * 17, opt);
      for (int p = 2; p <= 3; ++p) {
        Rcd r = combine(in, p);
        Report rep = verify_connected_bottom(in, r);
        CHECK_MESSAGE(rep.ok(), rep.summary());
        CHECK(oracle::connected_bottom_failures(in, r) == 0);
        for (int t = 0; t < in.td.size(); ++t) {
          TorsoPiece piece = torso_piece(in, t);
          CHECK(piece.phi.size() <= adhesion(in.td, t).size());
        }
      }
    }
  }
}
