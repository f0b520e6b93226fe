#include "common.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "rcd/graph.hpp"

namespace rcd::cli {

Globals& globals() {
  static Globals g;
  return g;
}

namespace {

Json parse(const std::string& text, const std::string& where) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError(where + " is not valid JSON: " + e.what());
  }
}

}  // namespace

Json read_stdin() {
  std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
  return parse(text, "stdin");
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_file(const std::string& path) { return parse(read_text_file(path), path); }

void emit(const Json& j) { std::cout << (globals().compact ? j.dump() : j.dump(2)) << '\n'; }

void emit_text(const std::string& text) {
  std::cout << text;
  if (!text.empty() && text.back() != '\n') std::cout << '\n';
}

Kind kind_of(const Json& j) {
  if (!j.is_object()) throw UsageError("expected a JSON object");
  if (j.contains("classes")) return Kind::Rcd;
  if (j.contains("torsos")) return Kind::CliqueSum;
  if (j.contains("apices")) return Kind::Apex;
  if (j.contains("rotation")) return Kind::Embedding;
  if (j.contains("edges")) return Kind::Graph;
  throw UsageError("unrecognised artifact");
}

const char* to_string(Kind k) {
  switch (k) {
    case Kind::Graph: return "graph";
    case Kind::Embedding: return "embedding";
    case Kind::Apex: return "apex structure";
    case Kind::CliqueSum: return "clique-sum input";
    case Kind::Rcd: return "decomposition";
  }
  return "?";
}

Graph graph_of(const Json& j) {
  if (kind_of(j) == Kind::Graph) return j.get<Graph>();
  return j.at("graph").get<Graph>();
}

namespace {

// A component keeps its darts and their rotation, so its walks are walks of
// the parent. to_parent is sorted.
struct ComponentEmbedding {
  Embedding embedding;
  std::vector<Vertex> to_parent;
};

// The outer face is the one lying in the parent's outer face, else the one
// with the longest walk, ties to the lowest numbered parent face.
ComponentEmbedding component_embedding(const Embedding& emb, const VertexSet& comp) {
  const Graph& g = emb.graph();
  std::vector<int> loc(g.n(), -1);
  for (std::size_t i = 0; i < comp.size(); ++i) loc[comp[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  std::vector<int> eloc(g.m(), -1), eparent;
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edge(e);
    if (loc[u] < 0) continue;
    eloc[e] = static_cast<int>(edges.size());
    eparent.push_back(e);
    edges.push_back({loc[u], loc[v]});
  }
  std::vector<std::vector<Dart>> rot(comp.size());
  for (std::size_t i = 0; i < comp.size(); ++i)
    for (Dart d : emb.rotation()[comp[i]]) rot[i].push_back(make_dart(eloc[dart_edge(d)], dart_end(d)));
  Embedding local(Graph(static_cast<int>(comp.size()), edges), rot, 0);

  int best = 0;
  std::pair<long, int> best_key{1, 0};
  for (std::size_t w = 0; w < local.walks().size(); ++w) {
    const auto& darts = local.walks()[w].darts;
    if (darts.empty()) continue;
    int pf = emb.face_of_dart(make_dart(eparent[dart_edge(darts.front())], dart_end(darts.front())));
    std::pair<long, int> key{pf == emb.outer_face() ? -2L * g.m() - 1 : -static_cast<long>(darts.size()), pf};
    if (key < best_key) {
      best_key = key;
      best = local.walk_face()[w];
    }
  }
  return {local.with_outer_face(best), comp};
}

}  // namespace

Rcd decompose_components(const Embedding& emb, int p, const VertexSet& phi, int h, Report* report) {
  std::vector<VertexSet> comps = components(emb.graph());
  if (comps.size() <= 1) {
    Rcd r = decompose_embedded(emb, p, phi, h);
    if (report) *report = check_embedded_rcd(emb.graph(), r, phi);
    return r;
  }
  if (report) *report = {};
  Rcd out;
  out.p = p;
  out.graph = emb.graph();
  out.classes.assign(p, {});
  for (const VertexSet& comp : comps) {
    ComponentEmbedding sub = component_embedding(emb, comp);
    auto lift = [&sub](const VertexSet& local) {
      VertexSet out;
      for (Vertex v : local) out.push_back(sub.to_parent[v]);
      return out;
    };
    VertexSet local_phi;
    for (Vertex v : phi)
      if (auto it = std::lower_bound(comp.begin(), comp.end(), v); it != comp.end() && *it == v)
        local_phi.push_back(static_cast<Vertex>(it - comp.begin()));
    Rcd r = decompose_embedded(sub.embedding, p, local_phi, h);
    if (report)
      report->merge(check_embedded_rcd(sub.embedding.graph(), r, local_phi),
                    "component-" + std::to_string(&comp - comps.data() + 1) + ".");
    for (int i = 0; i < p; ++i) out.classes[i] = set_union(out.classes[i], lift(r.classes[i]));
    out.residue = set_union(out.residue, lift(r.residue));
    for (LayerMeta m : r.parts) {
      m.vertices = lift(m.vertices);
      m.phi = lift(m.phi);
      for (auto* family : {&m.layers, &m.connectors, &m.lplus, &m.phi_t})
        for (VertexSet& s : *family) s = lift(s);
      out.parts.push_back(std::move(m));
    }
  }
  return out;
}

Rcd decompose_artifact(const Json& j, int p) {
  switch (kind_of(j)) {
    case Kind::Embedding: return decompose_components(j.get<Embedding>(), p, {}, 0, nullptr);
    case Kind::Apex: return decompose_apex(j.get<ApexStructure>(), p, {});
    case Kind::CliqueSum: return combine(j.get<RsInput>(), p);
    case Kind::Rcd: return j.get<Rcd>();
    case Kind::Graph: break;
  }
  throw UsageError("a bare graph carries no embedding to decompose");
}

int exit_for(const Report& r) { return r.ok() ? kPass : kFail; }

}  // namespace rcd::cli
