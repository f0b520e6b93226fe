#include <iostream>
#include <iterator>

#include "common.hpp"
#include "rcd/dot.hpp"
#include "rcd/treewidth.hpp"

namespace rcd::cli {

namespace {

struct Params {
  bool pace_in = false;
  bool pace_out = false;
  int limit = kExactTreewidthLimit;
};

Graph read_graph(const Params& prm) {
  if (!prm.pace_in) return graph_of(read_stdin());
  std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
  return read_pace_graph(text);
}

int emit_result(const Params& prm, const Graph& g, const TwResult& r) {
  if (prm.pace_out)
    emit_text(write_pace(r.td, g.n()));
  else if (globals().dot)
    emit_text(to_dot(r.td));
  else
    emit(r);
  return kPass;
}

}  // namespace

void add_tw(CLI::App& app, Action& action) {
  CLI::App* tw = app.add_subcommand("tw", "Treewidth of the graph on stdin");
  tw->require_subcommand(1);
  auto prm = std::make_shared<Params>();
  auto io_flags = [prm](CLI::App* sub) {
    sub->add_flag("--pace-in", prm->pace_in, "Read a PACE .gr graph instead of JSON");
    sub->add_flag("--pace", prm->pace_out, "Write the decomposition as PACE .td");
  };

  CLI::App* exact = tw->add_subcommand("exact", "Exact treewidth with an optimal decomposition");
  io_flags(exact);
  exact->add_option("--limit", prm->limit, "Largest vertex count attempted")->check(CLI::Range(0, 30));
  exact->callback([&action, prm] {
    action = [prm] {
      Graph g = read_graph(*prm);
      return emit_result(*prm, g, exact_treewidth(g, prm->limit));
    };
  });

  CLI::App* ub = tw->add_subcommand("ub", "Heuristic upper bound with its decomposition");
  io_flags(ub);
  ub->callback([&action, prm] {
    action = [prm] {
      Graph g = read_graph(*prm);
      return emit_result(*prm, g, treewidth_upper_bound(g));
    };
  });

  CLI::App* lb = tw->add_subcommand("lb", "Minor-min-width lower bound");
  lb->add_flag("--pace-in", prm->pace_in, "Read a PACE .gr graph instead of JSON");
  lb->callback([&action, prm] {
    action = [prm] {
      emit(Json{{"lower_bound", treewidth_lower_bound(read_graph(*prm))}});
      return kPass;
    };
  });
}

}  // namespace rcd::cli
