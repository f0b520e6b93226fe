#include <iostream>

#include "common.hpp"
#include "rcd/errors.hpp"

int main(int argc, char** argv) {
  using namespace rcd::cli;
  CLI::App app{"Robust contraction decompositions of embedded graphs and clique-sums"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--dot", globals().dot, "Emit Graphviz DOT instead of JSON where supported");
  app.add_flag("--compact", globals().compact, "Single-line JSON output");

  Action action;
  add_gen(app, action);
  add_decompose(app, action);
  add_verify(app, action);
  add_tw(app, action);
  add_solve(app, action);
  add_bench(app, action);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return action ? action() : kUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const rcd::InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kUsage;
  } catch (const rcd::Json::exception& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kUsage;
  } catch (const rcd::HypothesisViolation& e) {
    std::cerr << "hypothesis violated: " << e.what() << '\n';
    return kFail;
  } catch (const rcd::LimitExceeded& e) {
    std::cerr << "limit exceeded: " << e.what() << '\n';
    return kFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
}
