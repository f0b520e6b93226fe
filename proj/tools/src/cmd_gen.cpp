#include "common.hpp"
#include "rcd/dot.hpp"
#include "rcd/generators.hpp"

namespace rcd::cli {

namespace {

int emit_artifact(const Json& j, const Graph& g) {
  if (globals().dot)
    emit_text(to_dot(g));
  else
    emit(j);
  return kPass;
}

}  // namespace

void add_gen(CLI::App& app, Action& action) {
  CLI::App* gen = app.add_subcommand("gen", "Generate an instance");
  gen->require_subcommand(1);

  struct Params {
    int m = 5;
    int a = 1;
    int n = 30;
    std::uint64_t seed = 0;
    double delete_fraction = 0.3;
    CliqueSumOptions cs;
  };
  auto prm = std::make_shared<Params>();

  CLI::App* g = gen->add_subcommand("grid", "m x m grid");
  g->add_option("--m", prm->m, "Side length")->check(CLI::Range(1, 2000));
  g->callback([&action, prm] {
    action = [prm] {
      Embedding e = grid(prm->m);
      return emit_artifact(e, e.graph());
    };
  });

  CLI::App* sg = gen->add_subcommand("subdivided-grid", "m x m grid with every edge subdivided");
  sg->add_option("--m", prm->m, "Side length")->check(CLI::Range(1, 2000));
  sg->callback([&action, prm] {
    action = [prm] {
      Embedding e = subdivided_grid(prm->m);
      return emit_artifact(e, e.graph());
    };
  });

  CLI::App* ag = gen->add_subcommand("apex-grid", "m x m grid plus a apices adjacent to everything");
  ag->add_option("--m", prm->m, "Side length")->check(CLI::Range(1, 2000));
  ag->add_option("--a", prm->a, "Number of apices")->check(CLI::Range(0, 64));
  ag->callback([&action, prm] {
    action = [prm] {
      ApexStructure s = apex_grid(prm->m, prm->a);
      return emit_artifact(s, s.graph);
    };
  });

  CLI::App* rp = gen->add_subcommand("random-planar", "Random connected plane graph");
  rp->add_option("--n", prm->n, "Vertex count")->check(CLI::Range(1, 1000000));
  rp->add_option("--seed", prm->seed, "Random seed")->required();
  rp->add_option("--delete-fraction", prm->delete_fraction, "Fraction of triangulation edges to drop")
      ->check(CLI::Range(0.0, 1.0));
  rp->callback([&action, prm] {
    action = [prm] {
      Embedding e = random_planar(prm->n, prm->seed, prm->delete_fraction);
      return emit_artifact(e, e.graph());
    };
  });

  CLI::App* star = gen->add_subcommand("grid-star", "Grid with every edge doubled by a path through a child bag");
  star->add_option("--m", prm->m, "Side length")->check(CLI::Range(2, 500));
  star->callback([&action, prm] {
    action = [prm] {
      RsInput in = subdivided_grid_star(prm->m);
      return emit_artifact(in, in.graph);
    };
  });

  CLI::App* cs = gen->add_subcommand("clique-sum", "Random clique-sum of planar pieces with apices");
  cs->add_option("--seed", prm->seed, "Random seed")->required();
  cs->add_option("--pieces", prm->cs.pieces, "Number of pieces")->check(CLI::Range(1, 1000));
  cs->add_option("--min-side", prm->cs.min_side, "Smallest grid side")->check(CLI::Range(2, 100));
  cs->add_option("--max-side", prm->cs.max_side, "Largest grid side")->check(CLI::Range(2, 100));
  cs->add_option("--max-own-apices", prm->cs.max_own_apices, "Apices added per piece")->check(CLI::Range(0, 3));
  cs->add_flag("--planar-pieces", prm->cs.planar_pieces, "Random plane pieces instead of grids");
  cs->callback([&action, prm] {
    action = [prm] {
      if (prm->cs.min_side > prm->cs.max_side) throw UsageError("--min-side exceeds --max-side");
      RsInput in = random_clique_sum(prm->seed, prm->cs);
      return emit_artifact(in, in.graph);
    };
  });
}

}  // namespace rcd::cli
