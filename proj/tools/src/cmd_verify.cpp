#include "common.hpp"
#include "rcd/keylemma.hpp"
#include "rcd/robustness.hpp"
#include "rcd/tree_decomposition.hpp"

namespace rcd::cli {

namespace {

struct Params {
  bool planar = false;
  std::string td_file;
  int t = 1;
  std::vector<Vertex> phi;
  int p = 2;
  RobustnessOptions rob;
  std::string strategy = "random";
  std::string rcd_file;
};

bool is_json_text(const std::string& text) {
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) return c == '{';
  return false;
}

int verify_embedding(const Params& prm) {
  Embedding e = read_stdin().get<Embedding>();
  Report rep;
  rep.add("minimal", is_minimal(e));
  if (prm.planar) rep.add("planar", e.genus() == 0, "genus " + std::to_string(e.genus()));
  std::vector<int> singular;
  for (int f = 0; f < e.num_faces(); ++f)
    if (is_singular(e.boundary(f))) singular.push_back(f);
  emit(Json{{"genus", e.genus()},
            {"faces", e.num_faces()},
            {"walks", e.walks().size()},
            {"components", e.num_components()},
            {"singular_faces", singular},
            {"report", rep}});
  return exit_for(rep);
}

int verify_td(const Params& prm) {
  Json in = read_stdin();
  Graph g;
  TreeDecomposition td;
  if (prm.td_file.empty()) {
    g = in.at("graph").get<Graph>();
    td = in.at("td").get<TreeDecomposition>();
  } else {
    g = graph_of(in);
    std::string text = read_text_file(prm.td_file);
    if (is_json_text(text)) {
      Json j = Json::parse(text);
      td = (j.contains("td") ? j.at("td") : j).get<TreeDecomposition>();
    } else {
      PaceTd pace = read_pace(text);
      if (pace.n != g.n()) throw UsageError("decomposition and graph disagree on the vertex count");
      td = pace.td;
    }
  }
  TdReport r = validate(td, g);
  Report rep;
  rep.add("vertices-covered", r.vertices_covered);
  rep.add("edges-covered", r.edges_covered);
  rep.add("occurrences-connected", r.occurrences_connected);
  emit(Json{{"width", td.width()},
            {"uncovered_vertices", r.uncovered_vertices},
            {"uncovered_edges", r.uncovered_edges},
            {"disconnected_vertices", r.disconnected_vertices},
            {"report", rep}});
  return exit_for(rep);
}

int verify_key_lemma(const Params& prm) {
  Embedding e = read_stdin().get<Embedding>();
  RadialLayering layering = radial_layering(e);
  if (prm.t < 1 || prm.t > layering.count())
    throw UsageError("--t must lie in 1.." + std::to_string(layering.count()));
  BoundaryComplex bc = boundary_complex(e, layering, prm.t);
  KeyOutput out = compute_key_sets(bc, normalized(prm.phi));
  Report rep = verify_key_conditions(e, layering, bc, out);
  Json j = out;
  j["report"] = rep;
  emit(j);
  return exit_for(rep);
}

int verify_robustness(Params prm) {
  Json in = read_stdin();
  Rcd r = decompose_artifact(in, prm.p);
  if (prm.strategy == "random")
    prm.rob.strategy = ZPrimeStrategy::Random;
  else if (prm.strategy == "cut")
    prm.rob.strategy = ZPrimeStrategy::Cut;
  RobustnessReport rep = verify_rcd(r.graph, r, prm.rob);
  emit(rep);
  return rep.pass ? kPass : kFail;
}

int verify_bottom(const Params& prm) {
  RsInput in = read_stdin().get<RsInput>();
  Rcd r = prm.rcd_file.empty() ? combine(in, prm.p) : read_file(prm.rcd_file).get<Rcd>();
  if (!(r.graph == in.graph)) throw UsageError("decomposition belongs to a different graph");
  Report rep = verify_connected_bottom(in, r);
  emit(rep);
  return exit_for(rep);
}

}  // namespace

void add_verify(CLI::App& app, Action& action) {
  CLI::App* ver = app.add_subcommand("verify", "Check an artifact read from stdin");
  ver->require_subcommand(1);
  auto prm = std::make_shared<Params>();

  CLI::App* emb = ver->add_subcommand("embedding", "Genus, faces and minimality of an embedding");
  emb->add_flag("--planar", prm->planar, "Also require genus 0");
  emb->callback([&action, prm] { action = [prm] { return verify_embedding(*prm); }; });

  CLI::App* td = ver->add_subcommand("td", "Tree decomposition validity");
  td->add_option("--td", prm->td_file, "Decomposition file (.td or JSON); stdin then holds the graph");
  td->callback([&action, prm] { action = [prm] { return verify_td(*prm); }; });

  CLI::App* key = ver->add_subcommand("key-lemma", "Connector sets of one layer and their conditions");
  key->add_option("--t", prm->t, "Layer index, 1-based")->required();
  key->add_option("--phi", prm->phi, "Seed vertices in layer t")->delimiter(',');
  key->callback([&action, prm] { action = [prm] { return verify_key_lemma(*prm); }; });

  CLI::App* rob = ver->add_subcommand("rcd", "Sampled contraction treewidth of a decomposition");
  rob->add_option("--samples", prm->rob.samples, "Total samples")->check(CLI::PositiveNumber);
  rob->add_option("--seed", prm->rob.seed, "Random seed")->required();
  rob->add_option("--s-max", prm->rob.s_max, "Largest |Z'|")->check(CLI::NonNegativeNumber);
  rob->add_option("--threshold", prm->rob.threshold, "Allowed ratio tw / (p + |Z'| + 1)");
  rob->add_option("--strategy", prm->strategy, "Choice of Z'")->check(CLI::IsMember({"random", "cut"}));
  rob->add_option("--exact-limit", prm->rob.exact_limit, "Largest contracted graph given exact treewidth")
      ->check(CLI::Range(0, 30));
  rob->add_option("--p", prm->p, "Classes, when stdin is not already a decomposition")->check(CLI::PositiveNumber);
  rob->callback([&action, prm] { action = [prm] { return verify_robustness(*prm); }; });

  CLI::App* cb = ver->add_subcommand("connected-bottom", "Bottom connectivity of a combined decomposition");
  cb->add_option("--rcd", prm->rcd_file, "Decomposition file; combined afresh when absent");
  cb->add_option("--p", prm->p, "Classes when combining afresh")->check(CLI::PositiveNumber);
  cb->callback([&action, prm] { action = [prm] { return verify_bottom(*prm); }; });
}

}  // namespace rcd::cli
