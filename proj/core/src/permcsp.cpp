#include "rcd/permcsp.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

#include "rcd/errors.hpp"
#include "rcd/treewidth.hpp"

namespace rcd {

bool Constraint::allows(int a, int b) const {
  return std::find(relation.begin(), relation.end(), std::make_pair(a, b)) != relation.end();
}

PermCspInstance::PermCspInstance(int n, int d, std::vector<Constraint> constraints)
    : n_(n), d_(d), cs_(std::move(constraints)) {
  if (n < 0) throw InvalidInput("negative variable count");
  if (d < 1) throw InvalidInput("domain must be nonempty");
  std::vector<Edge> edges;
  fwd_.assign(cs_.size(), std::vector<int>(d, -1));
  bwd_.assign(cs_.size(), std::vector<int>(d, -1));
  for (std::size_t c = 0; c < cs_.size(); ++c) {
    const Constraint& con = cs_[c];
    if (con.x < 0 || con.x >= n || con.y < 0 || con.y >= n) throw InvalidInput("constraint variable out of range");
    if (con.x == con.y) throw InvalidInput("constraint on a single variable");
    for (auto [a, b] : con.relation) {
      if (a < 0 || a >= d || b < 0 || b >= d) throw InvalidInput("relation value out of range");
      if (fwd_[c][a] >= 0 && fwd_[c][a] != b) throw InvalidInput("relation is not a partial bijection");
      if (bwd_[c][b] >= 0 && bwd_[c][b] != a) throw InvalidInput("relation is not a partial bijection");
      fwd_[c][a] = b;
      bwd_[c][b] = a;
    }
    edges.emplace_back(con.x, con.y);
  }
  try {
    graph_ = Graph(n, std::move(edges));
  } catch (const InvalidInput&) {
    throw InvalidInput("two constraints on the same pair of variables");
  }
}

int PermCspInstance::image(int c, Vertex from, int a) const {
  return from == cs_[c].x ? fwd_[c][a] : bwd_[c][a];
}

bool SizeConstraint::trivial() const {
  return std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
}

bool fits(const PermCspInstance& inst, const SizeConstraint& sc) {
  if (sc.delta < 0) return false;
  if (std::any_of(sc.w.begin(), sc.w.end(), [](int x) { return x < 0; })) return false;
  return sc.w.empty() || sc.w.size() == static_cast<std::size_t>(inst.num_vars()) * inst.domain();
}

namespace {

void require_fits(const PermCspInstance& inst, const SizeConstraint& sc) {
  if (!fits(inst, sc)) throw InvalidInput("size constraint does not match the instance");
}

}  // namespace

const char* to_string(DeletionMode m) { return m == DeletionMode::Vertex ? "vertex" : "edge"; }

Encoded encode_oct(const Graph& g) {
  std::vector<Constraint> cs;
  for (auto [u, v] : g.edges()) cs.push_back({u, v, {{0, 1}, {1, 0}}});
  return {PermCspInstance(g.n(), 2, std::move(cs)), SizeConstraint{}};
}

Encoded encode_multiway(const Graph& g, const VertexSet& terminals) {
  const int d = std::max<int>(1, static_cast<int>(terminals.size()));
  std::vector<std::pair<int, int>> eq;
  for (int a = 0; a < d; ++a) eq.emplace_back(a, a);
  std::vector<Constraint> cs;
  for (auto [u, v] : g.edges()) cs.push_back({u, v, eq});
  SizeConstraint sc;
  sc.w.assign(static_cast<std::size_t>(g.n()) * d, 0);
  for (std::size_t j = 0; j < terminals.size(); ++j) {
    Vertex t = terminals[j];
    if (t < 0 || t >= g.n()) throw InvalidInput("terminal out of range");
    for (int a = 0; a < d; ++a) sc.w[t * d + a] = a == static_cast<int>(j) ? 0 : 1;
  }
  sc.delta = 0;
  return {PermCspInstance(g.n(), d, std::move(cs)), sc};
}

Encoded encode_coc(const Graph& g, int delta) {
  if (delta < 0) throw InvalidInput("negative threshold");
  std::vector<Constraint> cs;
  for (auto [u, v] : g.edges()) cs.push_back({u, v, {{0, 0}}});
  SizeConstraint sc;
  sc.w.assign(g.n(), 1);
  sc.delta = delta;
  return {PermCspInstance(g.n(), 1, std::move(cs)), sc};
}

namespace {

// Assignments of y under the constraints whose flag in alive_c is set.
std::vector<std::vector<int>> propagate_masked(const PermCspInstance& inst, const VertexSet& y,
                                               const SizeConstraint& sc, const std::vector<char>* alive_c) {
  std::vector<std::vector<int>> out;
  if (y.empty()) return {{}};
  const Graph& g = inst.graph();
  std::vector<int> pos(inst.num_vars(), -1);
  for (std::size_t i = 0; i < y.size(); ++i) pos[y[i]] = static_cast<int>(i);
  for (int a = 0; a < inst.domain(); ++a) {
    std::vector<int> val(y.size(), -1);
    val[0] = a;
    std::deque<Vertex> queue{y[0]};
    bool ok = true;
    while (ok && !queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      const auto& nb = g.neighbors(u);
      const auto& inc = g.incident_edges(u);
      for (std::size_t j = 0; j < nb.size() && ok; ++j) {
        int c = inc[j];
        if (pos[nb[j]] < 0 || (alive_c && !(*alive_c)[c])) continue;
        int b = inst.image(c, u, val[pos[u]]);
        int& vv = val[pos[nb[j]]];
        if (b < 0) {
          ok = false;
        } else if (vv < 0) {
          vv = b;
          queue.push_back(nb[j]);
        } else if (vv != b) {
          ok = false;
        }
      }
    }
    if (!ok) continue;
    if (std::find(val.begin(), val.end(), -1) != val.end())
      throw InvalidInput("propagation needs a connected variable set");
    long long total = 0;
    for (std::size_t i = 0; i < y.size(); ++i) total += sc.weight(y[i], val[i], inst.domain());
    if (total <= sc.delta) out.push_back(std::move(val));
  }
  return out;
}

bool all_components_ok(const PermCspInstance& inst, const SizeConstraint& sc, const std::vector<char>& alive_v,
                       const std::vector<char>& alive_c) {
  const Graph& g = inst.graph();
  std::vector<Edge> kept;
  for (int c = 0; c < g.m(); ++c)
    if (alive_c[c]) kept.push_back(g.edge(c));
  Graph h(g.n(), std::move(kept));
  for (const VertexSet& y : components(h, alive_v))
    if (propagate_masked(inst, y, sc, &alive_c).empty()) return false;
  return true;
}

// Calls f on each subset of {0..n-1} of size s in lexicographic order until f returns true.
template <class F>
bool for_each_subset(int n, int s, F&& f) {
  if (s > n) return false;
  std::vector<int> idx(s);
  for (int i = 0; i < s; ++i) idx[i] = i;
  while (true) {
    if (f(idx)) return true;
    int i = s - 1;
    while (i >= 0 && idx[i] == n - s + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
  }
}

double subset_count(int n, int k) {
  double total = 0, term = 1;
  for (int i = 0; i <= std::min(n, k); ++i) {
    total += term;
    term = term * (n - i) / (i + 1);
  }
  return total;
}

}  // namespace

std::vector<std::vector<int>> propagate(const PermCspInstance& inst, const VertexSet& y, const SizeConstraint& sc) {
  return propagate_masked(inst, y, sc, nullptr);
}

bool component_satisfiable(const PermCspInstance& inst, const VertexSet& y, const SizeConstraint& sc) {
  return !propagate(inst, y, sc).empty();
}

bool is_solution(const PermCspInstance& inst, const SizeConstraint& sc, const DeletionSolution& sol) {
  require_fits(inst, sc);
  if (static_cast<int>(sol.deleted.size()) > sol.k) return false;
  const Graph& g = inst.graph();
  std::vector<char> alive_v(g.n(), 1), alive_c(g.m(), 1);
  const int limit = sol.mode == DeletionMode::Vertex ? g.n() : g.m();
  for (int x : sol.deleted) {
    if (x < 0 || x >= limit) return false;
    (sol.mode == DeletionMode::Vertex ? alive_v : alive_c)[x] = 0;
  }
  if (sol.mode == DeletionMode::Vertex)
    for (int c = 0; c < g.m(); ++c) alive_c[c] = alive_v[g.edge(c).first] && alive_v[g.edge(c).second];
  return all_components_ok(inst, sc, alive_v, alive_c);
}

std::optional<DeletionSolution> brute_force(const PermCspInstance& inst, const SizeConstraint& sc, int k,
                                            DeletionMode mode) {
  require_fits(inst, sc);
  const Graph& g = inst.graph();
  const bool vertex = mode == DeletionMode::Vertex;
  const int universe = vertex ? g.n() : g.m();
  const int cap = vertex ? 14 : 18;
  if (universe > cap && subset_count(universe, k) > double(1 << 20))
    throw LimitExceeded("brute force over " + std::to_string(universe) + " elements with k = " + std::to_string(k));
  std::optional<DeletionSolution> found;
  for (int s = 0; s <= std::min(k, universe) && !found; ++s) {
    for_each_subset(universe, s, [&](const std::vector<int>& idx) {
      DeletionSolution sol{mode, idx, k};
      if (is_solution(inst, sc, sol)) {
        found = std::move(sol);
        return true;
      }
      return false;
    });
  }
  return found;
}

std::optional<DeletionSolution> dp_delete(const PermCspInstance& inst, const SizeConstraint& sc,
                                          const VertexSet& undeletable, int k, DeletionMode mode) {
  QuotientMap q = contract_set(inst.graph(), undeletable);
  TwResult tw = treewidth_upper_bound(q.target);
  return dp_delete(inst, sc, undeletable, q, tw.td, k, mode);
}

int guess_budget(int k, int p, DeletionMode mode) {
  if (p < 1) throw InvalidInput("p must be positive");
  const int total = mode == DeletionMode::Vertex ? k : 2 * k;
  return (total + p - 1) / p;
}

SolveResult subexp_solve(const PermCspInstance& inst, const SizeConstraint& sc, int k, DeletionMode mode,
                         const Rcd& rcd, const SolveOptions& opt) {
  if (k < 0) throw InvalidInput("negative budget");
  require_fits(inst, sc);
  if (!(rcd.graph == inst.graph())) throw InvalidInput("decomposition is not of the instance graph");
  const int budget = guess_budget(k, rcd.p, mode);
  SolveResult res;
  auto better = [](const DeletionSolution& a, const std::optional<DeletionSolution>& b) {
    return !b || a.deleted.size() < b->deleted.size() ||
           (a.deleted.size() == b->deleted.size() && a.deleted < b->deleted);
  };
  for (int i = 0; i < rcd.p; ++i) {
    const VertexSet& z = rcd.classes[i];
    const int zs = static_cast<int>(z.size());
    // A larger guess only relaxes the DP, so the exhaustive search needs the maximal guesses alone.
    const int smin = opt.exhaustive ? std::min(budget, zs) : 0;
    for (int s = smin; s <= std::min(budget, zs); ++s) {
      bool stop = for_each_subset(zs, s, [&](const std::vector<int>& idx) {
        VertexSet guess;
        for (int j : idx) guess.push_back(z[j]);
        VertexSet und = set_minus(z, guess);
        QuotientMap q = contract_set(inst.graph(), und);
        TwResult tw = treewidth_upper_bound(q.target);
        res.max_width = std::max(res.max_width, tw.width);
        ++res.guesses;
        auto sol = dp_delete(inst, sc, und, q, tw.td, k, mode);
        if (sol && better(*sol, res.solution)) res.solution = std::move(sol);
        return res.solution && !opt.exhaustive;
      });
      if (stop) return res;
    }
  }
  return res;
}

}  // namespace rcd
