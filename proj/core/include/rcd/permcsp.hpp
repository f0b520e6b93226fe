#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rcd/decompose.hpp"
#include "rcd/graph.hpp"
#include "rcd/tree_decomposition.hpp"

namespace rcd {

// Binary constraint (x, y, R) with x != y. relation holds the allowed pairs.
struct Constraint {
  Vertex x = 0;
  Vertex y = 0;
  std::vector<std::pair<int, int>> relation;

  bool allows(int a, int b) const;
};

// Variables 0..n-1 over domain 0..d-1. Every relation is a partial bijection
// and at most one constraint joins a pair of variables, so constraint i is
// edge i of graph().
class PermCspInstance {
 public:
  PermCspInstance() = default;
  // Throws InvalidInput on loops, repeated pairs, out-of-range values or a
  // relation that is not a partial bijection.
  PermCspInstance(int n, int d, std::vector<Constraint> constraints);

  int num_vars() const { return n_; }
  int domain() const { return d_; }
  int size() const { return n_ + d_; }
  const std::vector<Constraint>& constraints() const { return cs_; }
  const Constraint& constraint(int c) const { return cs_[c]; }
  const Graph& graph() const { return graph_; }
  // Value of the other end forced by value a at end `from` of constraint c; -1 if none.
  int image(int c, Vertex from, int a) const;

  bool operator==(const PermCspInstance& o) const { return n_ == o.n_ && d_ == o.d_ && cs_ == o.cs_; }

 private:
  int n_ = 0;
  int d_ = 1;
  std::vector<Constraint> cs_;
  std::vector<std::vector<int>> fwd_;  // [c][a] = b
  std::vector<std::vector<int>> bwd_;  // [c][b] = a
  Graph graph_;
};

inline bool operator==(const Constraint& a, const Constraint& b) {
  return a.x == b.x && a.y == b.y && a.relation == b.relation;
}

// Respected by an assignment on Y iff the sum of w(y, α(y)) is at most delta.
// An empty weight table means w = 0.
struct SizeConstraint {
  std::vector<int> w;  // [x * d + a]
  int delta = 0;

  int weight(Vertex x, int a, int d) const { return w.empty() ? 0 : w[x * d + a]; }
  bool trivial() const;
  bool operator==(const SizeConstraint&) const = default;
};

// w is empty or has one entry per (variable, value); delta >= 0.
bool fits(const PermCspInstance& inst, const SizeConstraint& sc);

enum class DeletionMode { Vertex, Edge };

const char* to_string(DeletionMode m);

// deleted holds variables (vertex mode) or constraint ids (edge mode), sorted.
struct DeletionSolution {
  DeletionMode mode = DeletionMode::Vertex;
  std::vector<int> deleted;
  int k = 0;

  bool operator==(const DeletionSolution&) const = default;
};

struct Encoded {
  PermCspInstance inst;
  SizeConstraint sc;
};

// D = {0, 1}, disequality on every edge, w = 0.
Encoded encode_oct(const Graph& g);
// D = one label per terminal, equality on every edge, w(t_j, l) = [l != j],
// delta = 0: a component may hold at most one terminal.
Encoded encode_multiway(const Graph& g, const VertexSet& terminals);
// D = {0}, w = 1, threshold delta.
Encoded encode_coc(const Graph& g, int delta);

// Every assignment on the connected set y that satisfies the constraints
// inside y and respects sc, found by seeding the smallest vertex of y with
// each value. Result[i][j] is the value of y[j]; at most d assignments.
std::vector<std::vector<int>> propagate(const PermCspInstance& inst, const VertexSet& y, const SizeConstraint& sc);
bool component_satisfiable(const PermCspInstance& inst, const VertexSet& y, const SizeConstraint& sc);

// Every component of the remaining instance is satisfiable subject to sc.
bool is_solution(const PermCspInstance& inst, const SizeConstraint& sc, const DeletionSolution& sol);

// Oracle: minimum deletion of size <= k, lexicographically first among
// minimum ones. Throws LimitExceeded above |X| = 14 (vertex) or |C| = 18
// (edge) unless at most 2^20 subsets need checking.
std::optional<DeletionSolution> brute_force(const PermCspInstance& inst, const SizeConstraint& sc, int k,
                                            DeletionMode mode);

// Minimum deletion of size <= k that keeps `undeletable` intact. In vertex
// mode no vertex of undeletable is removed; in edge mode no constraint inside
// undeletable is removed. q contracts the components of G[undeletable] and td
// is a tree decomposition of q.target.
std::optional<DeletionSolution> dp_delete(const PermCspInstance& inst, const SizeConstraint& sc,
                                          const VertexSet& undeletable, const QuotientMap& q,
                                          const TreeDecomposition& td, int k, DeletionMode mode);
// Same, with q = contract_set(G, undeletable) and a min-fill decomposition.
std::optional<DeletionSolution> dp_delete(const PermCspInstance& inst, const SizeConstraint& sc,
                                          const VertexSet& undeletable, int k, DeletionMode mode);

struct SolveOptions {
  // Search every guess and return a minimum solution instead of the first one found.
  bool exhaustive = false;
};

struct SolveResult {
  std::optional<DeletionSolution> solution;
  int guesses = 0;
  int max_width = -1;  // widest decomposition handed to the DP
};

// Guess budget per class: ceil(k / p) in vertex mode, ceil(2k / p) in edge mode.
int guess_budget(int k, int p, DeletionMode mode);

// rcd must decompose inst.graph(). For each class Z_i and each guess
// G ⊆ Z_i within the budget (increasing size, then lexicographic), runs
// dp_delete with Z_i \ G undeletable.
SolveResult subexp_solve(const PermCspInstance& inst, const SizeConstraint& sc, int k, DeletionMode mode,
                         const Rcd& rcd, const SolveOptions& opt = {});

}  // namespace rcd
