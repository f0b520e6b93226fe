#include "doctest.h"
#include "rcd/dot.hpp"
#include "rcd/errors.hpp"
#include "rcd/generators.hpp"
#include "rcd/json_io.hpp"

using namespace rcd;

namespace {

template <class T>
Json round_trip(const T& value) {
  Json j = value;
  T back = Json::parse(j.dump()).get<T>();
  return Json(back);
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("graph and embedding round trips") {
    Graph g = grid(3).graph();
    Json j = g;
    CHECK(j["n"] == 9);
    CHECK(j["edges"].size() == 12);
    CHECK(j.get<Graph>() == g);
    for (const Embedding& e : {grid(4), subdivided_grid(3), random_planar(30, 5)}) {
      Json je = e;
      Embedding back = je.get<Embedding>();
      CHECK(back.graph() == e.graph());
      CHECK(back.rotation() == e.rotation());
      CHECK(back.outer_face() == e.outer_face());
      CHECK(round_trip(e) == je);
    }
  }

  TEST_CASE("grouped embeddings keep their faces") {
    Graph g(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    std::vector<std::vector<Dart>> rot(6);
    for (int e = 0; e < 6; ++e) {
      rot[g.edge(e).first].push_back(make_dart(e, 0));
      rot[g.edge(e).second].push_back(make_dart(e, 1));
    }
    Embedding e(g, rot, 1, {0, 1, 2, 1});
    Embedding back = Json(e).get<Embedding>();
    CHECK(back.num_faces() == 3);
    CHECK(back.boundary(back.outer_face()).vertices == e.boundary(e.outer_face()).vertices);
  }

  TEST_CASE("structures round trip") {
    TreeDecomposition td({-1, 0, 0}, {{0, 1}, {1, 2}, {1, 3}});
    CHECK(round_trip(td) == Json(td));
    CHECK(Json(td).get<TreeDecomposition>() == td);
    CHECK(round_trip(apex_grid(3, 2)) == Json(apex_grid(3, 2)));
    RsInput rs = random_clique_sum(4, {});
    CHECK(round_trip(rs) == Json(rs));
    Rcd r = combine(rs, 2);
    CHECK(round_trip(r) == Json(r));
    Rcd d = decompose_embedded(grid(7), 2, {24});
    CHECK(round_trip(d) == Json(d));
    Report rep;
    rep.add("a", true);
    rep.add("b", false, "witness");
    CHECK(round_trip(rep) == Json(rep));
    CHECK(Json(rep)["ok"] == false);
  }

  TEST_CASE("solver types round trip") {
    Encoded e = encode_multiway(grid(3).graph(), {0, 8});
    CHECK(Json(e.inst).get<PermCspInstance>() == e.inst);
    CHECK(Json(e.sc).get<SizeConstraint>() == e.sc);
    DeletionSolution s{DeletionMode::Edge, {1, 4}, 3};
    CHECK(Json(s).get<DeletionSolution>() == s);
    CHECK(Json(DeletionMode::Vertex) == "vertex");
  }

  TEST_CASE("malformed input") {
    CHECK_THROWS_AS(Json::parse(R"({"n": 2, "edges": [[0, 0]]})").get<Graph>(), InvalidInput);
    CHECK_THROWS_AS(Json::parse(R"({"n": 2, "edges": [[0, 5]]})").get<Graph>(), InvalidInput);
    CHECK_THROWS_AS(Json::parse(R"({"n": 2})").get<Graph>(), nlohmann::json::exception);
    CHECK_THROWS_AS(Json::parse(R"({"num_vars": 2, "domain": 2, "constraints": [{"x": 0, "y": 1, "relation": [[0, 0], [0, 1]]}]})")
                        .get<PermCspInstance>(),
                    InvalidInput);
  }

  TEST_CASE("dot export") {
    std::string g = to_dot(grid(2).graph());
    CHECK(g.rfind("graph", 0) == 0);
    CHECK(g.find("0 -- 1") != std::string::npos);
    Rcd r = decompose_embedded(grid(6), 2, {});
    std::string rd = to_dot(r);
    CHECK(rd.find("fillcolor") != std::string::npos);
    std::string td = to_dot(TreeDecomposition({-1, 0}, {{0, 1}, {1, 2}}));
    CHECK(td.find("--") != std::string::npos);
  }

  TEST_CASE("reports") {
    Report a;
    a.add("x", true);
    a.add("x", false, "first");
    a.add("x", false, "second");
    CHECK_FALSE(a.ok());
    REQUIRE(a.find("x") != nullptr);
    CHECK(a.find("x")->detail == "first");
    Report b;
    b.add("y", true);
    b.merge(a, "sub.");
    CHECK(b.find("sub.x") != nullptr);
    CHECK_FALSE(b.ok());
    CHECK(b.summary().find("sub.x") != std::string::npos);
  }
}
