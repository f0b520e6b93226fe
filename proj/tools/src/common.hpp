#pragma once

#include <functional>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "rcd/cliquesum.hpp"
#include "rcd/decompose.hpp"
#include "rcd/json_io.hpp"
#include "rcd/report.hpp"

namespace rcd::cli {

// The chosen subcommand; returns the process exit code.
using Action = std::function<int()>;

inline constexpr int kPass = 0;
inline constexpr int kFail = 1;
inline constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  bool dot = false;
  bool compact = false;
};
Globals& globals();

// Whole of stdin as JSON.
Json read_stdin();
Json read_file(const std::string& path);
std::string read_text_file(const std::string& path);
void emit(const Json& j);
void emit_text(const std::string& text);

enum class Kind { Graph, Embedding, Apex, CliqueSum, Rcd };
// Recognised by the keys each artifact carries.
Kind kind_of(const Json& j);
const char* to_string(Kind k);
Graph graph_of(const Json& j);

// Splits a disconnected embedding into components, decomposes each one and
// unions the classes; connected input goes straight to decompose_embedded.
// report, when given, receives the checks of every component against its
// share of phi.
Rcd decompose_components(const Embedding& emb, int p, const VertexSet& phi, int h, Report* report);

// Rcd for any decomposable artifact with an empty phi.
Rcd decompose_artifact(const Json& j, int p);

int exit_for(const Report& r);

void add_gen(CLI::App& app, Action& action);
void add_decompose(CLI::App& app, Action& action);
void add_verify(CLI::App& app, Action& action);
void add_tw(CLI::App& app, Action& action);
void add_solve(CLI::App& app, Action& action);
void add_bench(CLI::App& app, Action& action);

}  // namespace rcd::cli
