#include "common.hpp"
#include "rcd/permcsp.hpp"

namespace rcd::cli {

namespace {

struct Params {
  std::string problem;
  int k = 0;
  std::string mode = "vertex";
  bool brute = false;
  bool exhaustive = false;
  int p = 2;
  std::vector<Vertex> terminals;
  int delta = -1;
};

Encoded encode(const Params& prm, const Graph& g) {
  if (prm.problem == "oct") return encode_oct(g);
  if (prm.problem == "mwc") {
    if (prm.terminals.empty()) throw UsageError("mwc needs --terminals");
    return encode_multiway(g, normalized(prm.terminals));
  }
  if (prm.delta < 0) throw UsageError("coc needs --delta");
  return encode_coc(g, prm.delta);
}

int solve(const Params& prm) {
  Json in = read_stdin();
  Graph g = graph_of(in);
  Encoded enc = encode(prm, g);
  DeletionMode mode = prm.mode == "edge" ? DeletionMode::Edge : DeletionMode::Vertex;

  Json out{{"problem", prm.problem}, {"mode", mode}, {"k", prm.k}};
  std::optional<DeletionSolution> sol;
  if (prm.brute) {
    out["method"] = "brute";
    sol = brute_force(enc.inst, enc.sc, prm.k, mode);
  } else {
    if (kind_of(in) == Kind::Graph) throw UsageError("the pipeline needs an embedding, apex structure or clique-sum");
    Rcd r = decompose_artifact(in, prm.p);
    if (!(r.graph == enc.inst.graph())) throw UsageError("decomposition belongs to a different graph");
    SolveOptions opt;
    opt.exhaustive = prm.exhaustive;
    SolveResult res = subexp_solve(enc.inst, enc.sc, prm.k, mode, r, opt);
    out["method"] = "pipeline";
    out["p"] = prm.p;
    out["guesses"] = res.guesses;
    out["max_width"] = res.max_width;
    sol = res.solution;
  }
  out["feasible"] = sol.has_value();
  if (!sol) {
    emit(out);
    return kPass;
  }
  out["solution"] = *sol;
  bool ok = is_solution(enc.inst, enc.sc, *sol) && static_cast<int>(sol->deleted.size()) <= prm.k;
  out["verified"] = ok;
  emit(out);
  return ok ? kPass : kFail;
}

}  // namespace

void add_solve(CLI::App& app, Action& action) {
  CLI::App* solve_cmd = app.add_subcommand("solve", "Deletion problems as permutation CSPs");
  solve_cmd->require_subcommand(1);
  auto prm = std::make_shared<Params>();

  for (const char* name : {"oct", "mwc", "coc"}) {
    CLI::App* sub = solve_cmd->add_subcommand(name, name == std::string("oct")   ? "Odd cycle transversal"
                                                    : name == std::string("mwc") ? "Multiway cut"
                                                                                 : "Component order connectivity");
    sub->add_option("--k", prm->k, "Deletion budget")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("--mode", prm->mode, "Delete vertices or edges")->check(CLI::IsMember({"vertex", "edge"}));
    auto* pipeline = sub->add_flag("--pipeline", "Guess, contract and run the decomposition DP (default)");
    auto* brute = sub->add_flag("--brute", prm->brute, "Exhaustive search");
    pipeline->excludes(brute);
    sub->add_flag("--exhaustive", prm->exhaustive, "Search every guess for a minimum solution");
    sub->add_option("--p", prm->p, "Classes of the decomposition")->check(CLI::PositiveNumber);
    if (name == std::string("mwc"))
      sub->add_option("--terminals", prm->terminals, "Terminal vertices")->delimiter(',')->required();
    if (name == std::string("coc"))
      sub->add_option("--delta", prm->delta, "Largest allowed component size")->required()->check(CLI::NonNegativeNumber);
    sub->callback([&action, prm, sub] {
      prm->problem = sub->get_name();
      action = [prm] { return solve(*prm); };
    });
  }
}

}  // namespace rcd::cli
