#include "doctest.h"
#include "instances.hpp"
#include "oracles.hpp"
#include "rcd/errors.hpp"
#include "rcd/generators.hpp"
#include "rcd/graph.hpp"
#include "rcd/treewidth.hpp"

using namespace rcd;
using rcd::testing::Rng;

TEST_SUITE("graph") {
  TEST_CASE("graph rejects loops, duplicates and bad ids") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), InvalidInput);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InvalidInput);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), InvalidInput);
    Graph g = Graph::simplified(3, std::vector<Edge>{{1, 0}, {0, 1}, {2, 2}, {2, 1}});
    CHECK(g.m() == 2);
    CHECK(g.edge(0) == Edge{0, 1});
    CHECK(g.edge(1) == Edge{1, 2});
  }

  TEST_CASE("contracting two path vertices") {
    QuotientMap q = contract_set(path_graph(3), {0, 1});
    CHECK(q.target.n() == 2);
    CHECK(q.target.m() == 1);
    CHECK(q.image[0] == q.image[1]);
    CHECK(q.image[2] != q.image[0]);
  }

  TEST_CASE("contracting the empty set is the identity") {
    Graph g = grid(3).graph();
    QuotientMap q = contract_set(g, {});
    CHECK(q.target == g);
    for (Vertex v = 0; v < g.n(); ++v) CHECK(q.image[v] == v);
  }

  TEST_CASE("contracting an independent set changes nothing") {
    for (int m = 2; m <= 5; ++m) {
      ApexStructure st = apex_grid(m, 2);
      VertexSet a;
      for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c)
          if ((r + c) % 2 == 0) a.push_back(r * m + c);
      QuotientMap q = contract_set(st.graph, a);
      CHECK(q.target == st.graph);
    }
  }

  TEST_CASE("components") {
    CHECK(components(Graph(0)).empty());
    Graph two(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    CHECK(components(two) == std::vector<VertexSet>{{0, 1, 2}, {3, 4, 5}});
    auto comps = components(grid(3).graph());
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].size() == 9);
  }

  TEST_CASE("quotient connectivity on small examples") {
    QuotientMap single = contract_set(path_graph(3), {});
    CHECK(quotient_connected(single, {1}));
    QuotientMap path = contract_set(path_graph(3), {0, 1});
    CHECK(quotient_connected(path, {0, 1}));
    CHECK(oracle::uf_connected(path.source, path.preimage({0, 1})));

    // One bipartition class of C6 is independent, so the quotient is C6 itself.
    QuotientMap c6 = contract_set(cycle_graph(6), {0, 2, 4});
    VertexSet u = {c6.image[0], c6.image[2]};
    VertexSet pre = c6.preimage(u);
    CHECK(pre.size() == 2);
    CHECK(quotient_connected(c6, u) == oracle::closure_connected(c6.source, pre));
    CHECK_FALSE(quotient_connected(c6, u));
  }

  TEST_CASE("quotient connectivity agrees with the preimage") {
    Rng rng(11);
    for (int iter = 0; iter < 300; ++iter) {
      int n = testing::uniform(rng, 1, 10);
      Graph g = testing::random_graph(n, 0.35, rng);
      QuotientMap q = contract_set(g, testing::random_subset(n, 0.4, rng));
      for (const VertexSet& cls : q.classes()) CHECK(oracle::uf_connected(g, cls));
      VertexSet u = testing::random_subset(q.target.n(), 0.5, rng);
      CHECK(quotient_connected(q, u) == oracle::uf_connected(g, q.preimage(u)));
      CHECK(quotient_connected(q, u) == oracle::uf_connected(q.target, u));
    }
  }

  TEST_CASE("contracting non-adjacent sets in two steps") {
    Rng rng(12);
    for (int iter = 0; iter < 400; ++iter) {
      int n = testing::uniform(rng, 2, 10);
      Graph g = testing::random_graph(n, 0.3, rng);
      VertexSet u1 = testing::random_subset(n, 0.3, rng);
      VertexSet u2 = set_minus(testing::random_subset(n, 0.3, rng), closed_neighborhood(g, u1));
      QuotientMap q1 = contract_set(g, u1);
      QuotientMap q2 = contract_set(q1.target, q1.apply(u2));
      QuotientMap both = contract_set(g, set_union(u1, u2));
      CHECK(q2.target == both.target);
      for (Vertex v = 0; v < n; ++v) CHECK(q2.image[q1.image[v]] == both.image[v]);
    }
  }

  TEST_CASE("contraction does not increase treewidth") {
    Rng rng(13);
    for (int iter = 0; iter < 150; ++iter) {
      int n = testing::uniform(rng, 1, 10);
      Graph g = testing::random_graph(n, 0.4, rng);
      QuotientMap q = contract_set(g, testing::random_subset(n, 0.4, rng));
      CHECK(exact_treewidth(q.target).width <= exact_treewidth(g).width);
    }
  }

  TEST_CASE("contract_partition rejects disconnected classes") {
    CHECK_THROWS_AS(contract_partition(path_graph(3), {0, 1, 0}), InvalidInput);
    QuotientMap q = contract_partition(path_graph(4), {5, 5, 2, 2});
    CHECK(q.target.n() == 2);
    CHECK(q.target.m() == 1);
  }

  TEST_CASE("minor examples") {
    CHECK(is_minor(complete_graph(3), cycle_graph(5)));
    CHECK(is_minor(complete_graph(4), grid(3).graph()));
    CHECK_FALSE(is_minor(complete_graph(5), grid(3).graph()));
    CHECK_FALSE(is_minor(complete_graph(5), subdivided_grid(2).graph()));
    CHECK(is_minor(complete_graph(5), complete_graph(5)));
    for (std::uint64_t seed = 1; seed <= 10; ++seed)
      CHECK_FALSE(is_minor(complete_graph(5), random_planar(8 + static_cast<int>(seed % 7), seed).graph()));
    CHECK_THROWS_AS(is_minor(complete_graph(8), complete_graph(8)), LimitExceeded);
  }

  TEST_CASE("minor model branch sets are connected and touch along every edge") {
    Graph h = complete_graph(4);
    Graph g = grid(3).graph();
    auto model = find_minor_model(h, g);
    REQUIRE(model.size() == 4);
    for (const VertexSet& b : model) CHECK(oracle::uf_connected(g, b));
    for (const Edge& e : h.edges()) CHECK(intersects(open_neighborhood(g, model[e.first]), model[e.second]));
  }

  TEST_CASE("minor search agrees with the map oracle") {
    Rng rng(14);
    for (int iter = 0; iter < 200; ++iter) {
      Graph h = testing::random_graph(testing::uniform(rng, 1, 4), 0.6, rng);
      Graph g = testing::random_graph(testing::uniform(rng, 1, 6), 0.45, rng);
      CHECK(is_minor(h, g) == oracle::minor_by_maps(h, g));
    }
  }
}
