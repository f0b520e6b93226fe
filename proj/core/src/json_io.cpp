#include "rcd/json_io.hpp"

#include "rcd/errors.hpp"

namespace rcd {

void to_json(Json& j, const Graph& g) { j = Json{{"n", g.n()}, {"edges", g.edges()}}; }

void from_json(const Json& j, Graph& g) {
  g = Graph(j.at("n").get<int>(), j.at("edges").get<std::vector<Edge>>());
}

void to_json(Json& j, const Embedding& e) {
  Json rot = Json::array();
  for (const auto& r : e.rotation()) {
    Json row = Json::array();
    for (Dart d : r) row.push_back({dart_edge(d), dart_end(d)});
    rot.push_back(std::move(row));
  }
  j = Json{{"graph", e.graph()}, {"rotation", std::move(rot)}, {"outer_face", e.outer_face()}};
  if (e.grouped()) j["walk_group"] = e.walk_face();
}

void from_json(const Json& j, Embedding& e) {
  Graph g = j.at("graph").get<Graph>();
  std::vector<std::vector<Dart>> rotation;
  for (const auto& row : j.at("rotation")) {
    std::vector<Dart> r;
    for (const auto& d : row) r.push_back(make_dart(d.at(0).get<int>(), d.at(1).get<int>()));
    rotation.push_back(std::move(r));
  }
  std::vector<int> groups;
  if (j.contains("walk_group")) groups = j.at("walk_group").get<std::vector<int>>();
  e = Embedding(std::move(g), std::move(rotation), j.at("outer_face").get<int>(), std::move(groups));
}

void to_json(Json& j, const TreeDecomposition& td) {
  j = Json{{"parent", td.parents()}, {"bags", td.bags()}};
}

void from_json(const Json& j, TreeDecomposition& td) {
  auto bags = j.at("bags").get<std::vector<VertexSet>>();
  for (auto& b : bags) normalize(b);
  td = TreeDecomposition(j.at("parent").get<std::vector<int>>(), std::move(bags));
}

void to_json(Json& j, const TwResult& r) { j = Json{{"width", r.width}, {"td", r.td}}; }

void from_json(const Json& j, TwResult& r) {
  r.width = j.at("width").get<int>();
  r.td = j.at("td").get<TreeDecomposition>();
}

void to_json(Json& j, const ApexStructure& s) {
  j = Json{{"graph", s.graph}, {"apices", s.apices}, {"embedding", s.embedding}, {"h", s.h}};
}

void from_json(const Json& j, ApexStructure& s) {
  s.graph = j.at("graph").get<Graph>();
  s.apices = normalized(j.at("apices").get<VertexSet>());
  s.embedding = j.at("embedding").get<Embedding>();
  s.h = j.value("h", static_cast<int>(s.apices.size()));
  validate_apex_structure(s);
}

void to_json(Json& j, const TorsoStructure& s) { j = Json{{"apices", s.apices}, {"embedding", s.embedding}}; }

void from_json(const Json& j, TorsoStructure& s) {
  s.apices = normalized(j.at("apices").get<VertexSet>());
  s.embedding = j.at("embedding").get<Embedding>();
}

void to_json(Json& j, const RsInput& in) {
  j = Json{{"graph", in.graph}, {"td", in.td}, {"torsos", in.torsos}, {"h", in.h}};
}

void from_json(const Json& j, RsInput& in) {
  in.graph = j.at("graph").get<Graph>();
  in.td = j.at("td").get<TreeDecomposition>();
  in.torsos = j.at("torsos").get<std::vector<TorsoStructure>>();
  in.h = j.at("h").get<int>();
}

void to_json(Json& j, const LayerMeta& m) {
  j = Json{{"vertices", m.vertices},     {"phi", m.phi},         {"c", m.c},
           {"h", m.h},                   {"delta", m.delta},     {"residues", m.residues},
           {"bad_layers", m.bad_layers}, {"layers", m.layers},   {"connectors", m.connectors},
           {"lplus", m.lplus},           {"phi_t", m.phi_t}};
}

void from_json(const Json& j, LayerMeta& m) {
  j.at("vertices").get_to(m.vertices);
  j.at("phi").get_to(m.phi);
  j.at("c").get_to(m.c);
  j.at("h").get_to(m.h);
  j.at("delta").get_to(m.delta);
  j.at("residues").get_to(m.residues);
  j.at("bad_layers").get_to(m.bad_layers);
  j.at("layers").get_to(m.layers);
  j.at("connectors").get_to(m.connectors);
  j.at("lplus").get_to(m.lplus);
  j.at("phi_t").get_to(m.phi_t);
}

void to_json(Json& j, const TorsoMeta& m) {
  j = Json{{"classes", m.classes}, {"witnesses", m.witnesses}, {"residue", m.residue}, {"color", m.color}};
}

void from_json(const Json& j, TorsoMeta& m) {
  j.at("classes").get_to(m.classes);
  j.at("witnesses").get_to(m.witnesses);
  j.at("residue").get_to(m.residue);
  j.at("color").get_to(m.color);
}

void to_json(Json& j, const Rcd& r) {
  j = Json{{"p", r.p}, {"graph", r.graph}, {"classes", r.classes}, {"residue", r.residue}, {"parts", r.parts}};
  if (r.torsos) j["torsos"] = *r.torsos;
}

void from_json(const Json& j, Rcd& r) {
  r.p = j.at("p").get<int>();
  r.graph = j.at("graph").get<Graph>();
  r.classes = j.at("classes").get<std::vector<VertexSet>>();
  if (static_cast<int>(r.classes.size()) != r.p) throw InvalidInput("class count differs from p");
  for (auto& z : r.classes) normalize(z);
  r.residue = normalized(j.value("residue", VertexSet{}));
  r.parts = j.value("parts", std::vector<LayerMeta>{});
  r.torsos.reset();
  if (j.contains("torsos")) r.torsos = j.at("torsos").get<TorsoMeta>();
}

void to_json(Json& j, const Check& c) {
  j = Json{{"name", c.name}, {"pass", c.pass}};
  if (!c.detail.empty()) j["detail"] = c.detail;
}

void from_json(const Json& j, Check& c) {
  c.name = j.at("name").get<std::string>();
  c.pass = j.at("pass").get<bool>();
  c.detail = j.value("detail", std::string{});
}

void to_json(Json& j, const Report& r) { j = Json{{"ok", r.ok()}, {"checks", r.checks}}; }

void from_json(const Json& j, Report& r) { r.checks = j.at("checks").get<std::vector<Check>>(); }

void to_json(Json& j, const KeyOutput& k) {
  Json normals = Json::array();
  for (const auto& ns : k.normal_sets) normals.push_back({{"face", ns.face}, {"vertex", ns.vertex}, {"y", ns.y}});
  j = Json{{"t", k.t},         {"phi", k.phi},     {"x", k.x},
           {"lplus", k.lplus}, {"paths", k.paths}, {"normal_sets", std::move(normals)},
           {"outer_only_edges", k.outer_only_edges}};
}

void to_json(Json& j, const RobustnessSample& s) {
  j = Json{{"class", s.cls + 1},       {"zprime", s.zprime},     {"contracted_n", s.contracted_n},
           {"tw_upper", s.tw_upper}, {"tw_exact", s.tw_exact}, {"ratio", s.ratio}};
}

void to_json(Json& j, const RobustnessReport& r) {
  j = Json{{"pass", r.pass}, {"max_ratio", r.max_ratio}, {"threshold", r.threshold}, {"samples", r.samples}};
}

void to_json(Json& j, const Constraint& c) { j = Json{{"x", c.x}, {"y", c.y}, {"relation", c.relation}}; }

void from_json(const Json& j, Constraint& c) {
  c.x = j.at("x").get<int>();
  c.y = j.at("y").get<int>();
  c.relation = j.at("relation").get<std::vector<std::pair<int, int>>>();
}

void to_json(Json& j, const PermCspInstance& inst) {
  j = Json{{"num_vars", inst.num_vars()}, {"domain", inst.domain()}, {"constraints", inst.constraints()}};
}

void from_json(const Json& j, PermCspInstance& inst) {
  inst = PermCspInstance(j.at("num_vars").get<int>(), j.at("domain").get<int>(),
                         j.at("constraints").get<std::vector<Constraint>>());
}

void to_json(Json& j, const SizeConstraint& sc) { j = Json{{"w", sc.w}, {"delta", sc.delta}}; }

void from_json(const Json& j, SizeConstraint& sc) {
  sc.w = j.value("w", std::vector<int>{});
  sc.delta = j.value("delta", 0);
  for (int x : sc.w)
    if (x < 0) throw InvalidInput("negative weight");
  if (sc.delta < 0) throw InvalidInput("negative threshold");
}

void to_json(Json& j, DeletionMode m) { j = to_string(m); }

void from_json(const Json& j, DeletionMode& m) {
  const auto s = j.get<std::string>();
  if (s == "vertex") {
    m = DeletionMode::Vertex;
  } else if (s == "edge") {
    m = DeletionMode::Edge;
  } else {
    throw InvalidInput("unknown deletion mode " + s);
  }
}

void to_json(Json& j, const DeletionSolution& s) {
  j = Json{{"mode", s.mode}, {"deleted", s.deleted}, {"k", s.k}};
}

void from_json(const Json& j, DeletionSolution& s) {
  s.mode = j.at("mode").get<DeletionMode>();
  s.deleted = normalized(j.at("deleted").get<std::vector<int>>());
  s.k = j.at("k").get<int>();
}

}  // namespace rcd
