#include "common.hpp"
#include "rcd/dot.hpp"

namespace rcd::cli {

namespace {

struct Params {
  int p = 2;
  std::vector<Vertex> phi;
  int h = 0;
  int outer_face = -1;
  bool per_component = false;
};

int emit_rcd(const Rcd& r, const Report& rep) {
  if (globals().dot) {
    emit_text(to_dot(r));
  } else {
    Json j = r;
    j["report"] = rep;
    emit(j);
  }
  return exit_for(rep);
}

}  // namespace

void add_decompose(CLI::App& app, Action& action) {
  CLI::App* dec = app.add_subcommand("decompose", "Build a robust contraction decomposition from stdin");
  dec->require_subcommand(1);
  auto prm = std::make_shared<Params>();

  CLI::App* emb = dec->add_subcommand("embedded", "Embedding on stdin");
  emb->add_option("--p", prm->p, "Number of classes")->check(CLI::PositiveNumber);
  emb->add_option("--phi", prm->phi, "Vertices to keep out of every class")->delimiter(',');
  emb->add_option("--apex-budget", prm->h, "Apex count h reserved in the layer gap")->check(CLI::NonNegativeNumber);
  emb->add_option("--outer-face", prm->outer_face, "Override the reference face");
  emb->add_flag("--per-component", prm->per_component, "Decompose each component separately");
  emb->callback([&action, prm] {
    action = [prm] {
      Embedding e = read_stdin().get<Embedding>();
      if (prm->outer_face >= 0) e = e.with_outer_face(prm->outer_face);
      VertexSet phi = normalized(prm->phi);
      if (!prm->per_component) {
        Rcd r = decompose_embedded(e, prm->p, phi, prm->h);
        return emit_rcd(r, check_embedded_rcd(e.graph(), r, phi));
      }
      Report rep;
      Rcd r = decompose_components(e, prm->p, phi, prm->h, &rep);
      return emit_rcd(r, rep);
    };
  });

  CLI::App* apex = dec->add_subcommand("apex", "Apex structure on stdin");
  apex->add_option("--p", prm->p, "Number of classes")->check(CLI::PositiveNumber);
  apex->add_option("--phi", prm->phi, "Vertices to keep out of every class")->delimiter(',');
  apex->callback([&action, prm] {
    action = [prm] {
      ApexStructure st = read_stdin().get<ApexStructure>();
      VertexSet phi = normalized(prm->phi);
      Rcd r = decompose_apex(st, prm->p, phi);
      return emit_rcd(r, check_apex_rcd(st, r, phi));
    };
  });

  CLI::App* cs = dec->add_subcommand("cliquesum", "Clique-sum input on stdin");
  cs->add_option("--p", prm->p, "Number of classes")->check(CLI::PositiveNumber);
  cs->callback([&action, prm] {
    action = [prm] {
      RsInput in = read_stdin().get<RsInput>();
      Rcd r = combine(in, prm->p);
      return emit_rcd(r, verify_connected_bottom(in, r));
    };
  });
}

}  // namespace rcd::cli
