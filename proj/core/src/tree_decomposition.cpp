#include "rcd/tree_decomposition.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

#include "rcd/errors.hpp"

namespace rcd {

TreeDecomposition::TreeDecomposition(std::vector<int> parent, std::vector<VertexSet> bags)
    : parent_(std::move(parent)), bags_(std::move(bags)) {
  const int n = size();
  if (static_cast<int>(parent_.size()) != n) throw InvalidInput("parent and bag counts differ");
  children_.assign(n, {});
  for (int t = 0; t < n; ++t) {
    normalize(bags_[t]);
    int p = parent_[t];
    if (p == -1) {
      if (root_ != -1) throw InvalidInput("tree decomposition has several roots");
      root_ = t;
    } else if (p < 0 || p >= n || p == t) {
      throw InvalidInput("invalid parent index");
    } else {
      children_[p].push_back(t);
    }
  }
  if (n > 0 && root_ == -1) throw InvalidInput("tree decomposition has no root");
  if (n > 0 && static_cast<int>(preorder().size()) != n) throw InvalidInput("tree decomposition contains a cycle");
}

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags_) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

std::vector<int> TreeDecomposition::preorder() const {
  std::vector<int> out;
  if (root_ < 0) return out;
  std::vector<int> stack{root_};
  while (!stack.empty() && static_cast<int>(out.size()) <= size()) {
    int t = stack.back();
    stack.pop_back();
    out.push_back(t);
    for (auto it = children_[t].rbegin(); it != children_[t].rend(); ++it) stack.push_back(*it);
  }
  return out;
}

TdReport validate(const TreeDecomposition& td, const Graph& g) {
  TdReport r;
  std::vector<std::vector<int>> nodes_of(g.n());
  for (int t = 0; t < td.size(); ++t) {
    for (Vertex v : td.bag(t)) {
      if (!g.contains(v)) throw InvalidInput("bag contains a vertex outside the graph");
      nodes_of[v].push_back(t);
    }
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    if (nodes_of[v].empty()) {
      r.vertices_covered = false;
      r.uncovered_vertices.push_back(v);
      continue;
    }
    int tops = 0;
    for (int t : nodes_of[v]) {
      int p = td.parent(t);
      if (p < 0 || !has(td.bag(p), v)) ++tops;
    }
    if (tops != 1) {
      r.occurrences_connected = false;
      r.disconnected_vertices.push_back(v);
    }
  }
  for (auto [u, v] : g.edges()) {
    const auto& a = nodes_of[u];
    const auto& b = nodes_of[v];
    std::vector<int> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    if (common.empty()) {
      r.edges_covered = false;
      r.uncovered_edges.emplace_back(u, v);
    }
  }
  return r;
}

VertexSet adhesion(const TreeDecomposition& td, int t) {
  int p = td.parent(t);
  if (p < 0) return {};
  return set_intersection(td.bag(t), td.bag(p));
}

VertexSet gamma_set(const TreeDecomposition& td, int t) {
  VertexSet out;
  std::vector<int> stack{t};
  while (!stack.empty()) {
    int s = stack.back();
    stack.pop_back();
    out.insert(out.end(), td.bag(s).begin(), td.bag(s).end());
    for (int c : td.children(s)) stack.push_back(c);
  }
  normalize(out);
  return out;
}

Subgraph torso(const TreeDecomposition& td, const Graph& g, int t) {
  const VertexSet& bag = td.bag(t);
  Subgraph s;
  s.to_parent = bag;
  auto loc = [&](Vertex v) { return static_cast<Vertex>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin()); };
  std::vector<Edge> es;
  for (Vertex v : bag)
    for (Vertex w : g.neighbors(v))
      if (v < w && has(bag, w)) es.emplace_back(loc(v), loc(w));
  for (int c : td.children(t)) {
    VertexSet sigma = adhesion(td, c);
    for (std::size_t i = 0; i < sigma.size(); ++i)
      for (std::size_t j = i + 1; j < sigma.size(); ++j) es.emplace_back(loc(sigma[i]), loc(sigma[j]));
  }
  s.graph = Graph::simplified(static_cast<int>(bag.size()), es);
  // edge_to_parent: -1 marks a clique edge absent from g.
  for (auto [a, b] : s.graph.edges()) s.edge_to_parent.push_back(g.edge_id(bag[a], bag[b]));
  return s;
}

TreeDecomposition glue(const TreeDecomposition& outer, const std::vector<TreeDecomposition>& torso_tds,
                       const Graph& g) {
  if (static_cast<int>(torso_tds.size()) != outer.size())
    throw InvalidInput("one torso decomposition per node expected");
  std::vector<int> offset(outer.size(), 0);
  int total = 0;
  for (int t = 0; t < outer.size(); ++t) {
    if (torso_tds[t].size() == 0) throw InvalidInput("torso decomposition is empty");
    offset[t] = total;
    total += torso_tds[t].size();
  }
  std::vector<int> parent(total, -1);
  std::vector<VertexSet> bags(total);
  for (int t = 0; t < outer.size(); ++t) {
    const VertexSet& bag = outer.bag(t);
    VertexSet sigma = adhesion(outer, t);
    const TreeDecomposition& tt = torso_tds[t];
    for (int u = 0; u < tt.size(); ++u) {
      VertexSet b;
      for (Vertex v : tt.bag(u)) {
        if (v < 0 || v >= static_cast<int>(bag.size())) throw InvalidInput("torso bag vertex out of range");
        b.push_back(bag[v]);
      }
      bags[offset[t] + u] = set_union(normalized(b), sigma);
      if (tt.parent(u) >= 0) parent[offset[t] + u] = offset[t] + tt.parent(u);
    }
    int p = outer.parent(t);
    if (p < 0) continue;
    const TreeDecomposition& tp = torso_tds[p];
    const VertexSet& pbag = outer.bag(p);
    int attach = -1;
    for (int u = 0; u < tp.size() && attach < 0; ++u) {
      VertexSet b;
      for (Vertex v : tp.bag(u)) b.push_back(pbag[v]);
      if (is_subset(sigma, normalized(b))) attach = u;
    }
    if (attach < 0) throw InvalidInput("no torso bag contains the adhesion of node " + std::to_string(t));
    parent[offset[t] + tt.root()] = offset[p] + attach;
  }
  (void)g;
  return TreeDecomposition(std::move(parent), std::move(bags));
}

TreeDecomposition induced_by_contraction(const TreeDecomposition& td, const QuotientMap& q) {
  std::vector<VertexSet> bags;
  for (const auto& b : td.bags()) bags.push_back(q.apply(b));
  return TreeDecomposition(td.parents(), std::move(bags));
}

TreeDecomposition td_from_elimination(const Graph& g, const std::vector<Vertex>& order) {
  const int n = g.n();
  if (static_cast<int>(order.size()) != n) throw InvalidInput("elimination order must list every vertex");
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    if (!g.contains(order[i]) || pos[order[i]] >= 0) throw InvalidInput("elimination order is not a permutation");
    pos[order[i]] = i;
  }
  if (n == 0) return TreeDecomposition({-1}, {VertexSet{}});
  std::vector<std::set<Vertex>> nb(n);
  for (auto [u, v] : g.edges()) {
    nb[u].insert(v);
    nb[v].insert(u);
  }
  std::vector<int> parent(n, -1);
  std::vector<VertexSet> bags(n);
  std::vector<int> roots;
  for (int i = 0; i < n; ++i) {
    Vertex v = order[i];
    VertexSet higher(nb[v].begin(), nb[v].end());
    bags[i] = higher;
    bags[i].push_back(v);
    normalize(bags[i]);
    for (Vertex a : higher) {
      nb[a].erase(v);
      for (Vertex b : higher)
        if (a != b) nb[a].insert(b);
    }
    if (higher.empty()) {
      roots.push_back(i);
    } else {
      int best = n;
      for (Vertex a : higher) best = std::min(best, pos[a]);
      parent[i] = best;
    }
  }
  for (std::size_t r = 0; r + 1 < roots.size(); ++r) parent[roots[r]] = roots.back();
  return TreeDecomposition(std::move(parent), std::move(bags));
}

std::string write_pace(const TreeDecomposition& td, int n) {
  std::ostringstream out;
  out << "s td " << td.size() << ' ' << td.width() + 1 << ' ' << n << '\n';
  for (int t = 0; t < td.size(); ++t) {
    out << "b " << t + 1;
    for (Vertex v : td.bag(t)) out << ' ' << v + 1;
    out << '\n';
  }
  for (int t = 0; t < td.size(); ++t)
    if (td.parent(t) >= 0) out << td.parent(t) + 1 << ' ' << t + 1 << '\n';
  return out.str();
}

PaceTd read_pace(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int nb = -1, n = -1;
  std::vector<VertexSet> bags;
  std::vector<std::vector<int>> adj;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok == "c") continue;
    if (tok == "s") {
      std::string kind;
      int w;
      if (!(ls >> kind >> nb >> w >> n) || kind != "td" || nb < 0 || n < 0) throw InvalidInput("bad PACE header");
      bags.assign(nb, {});
      adj.assign(nb, {});
    } else if (tok == "b") {
      if (nb < 0) throw InvalidInput("bag line before header");
      int i;
      if (!(ls >> i) || i < 1 || i > nb) throw InvalidInput("bad bag index");
      int v;
      while (ls >> v) {
        if (v < 1 || v > n) throw InvalidInput("bag vertex out of range");
        bags[i - 1].push_back(v - 1);
      }
    } else {
      if (nb < 0) throw InvalidInput("edge line before header");
      int a = std::stoi(tok), b;
      if (!(ls >> b) || a < 1 || b < 1 || a > nb || b > nb) throw InvalidInput("bad tree edge");
      adj[a - 1].push_back(b - 1);
      adj[b - 1].push_back(a - 1);
    }
  }
  if (nb < 0) throw InvalidInput("missing PACE header");
  std::vector<int> parent(nb, -2);
  if (nb > 0) {
    std::queue<int> q;
    parent[0] = -1;
    q.push(0);
    while (!q.empty()) {
      int t = q.front();
      q.pop();
      for (int s : adj[t]) {
        if (parent[s] == -2) {
          parent[s] = t;
          q.push(s);
        }
      }
    }
    for (int p : parent)
      if (p == -2) throw InvalidInput("PACE tree is disconnected");
  }
  return PaceTd{TreeDecomposition(std::move(parent), std::move(bags)), n};
}

std::string write_pace_graph(const Graph& g) {
  std::ostringstream out;
  out << "p tw " << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

Graph read_pace_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  std::vector<Edge> es;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok == "c") continue;
    if (tok == "p") {
      std::string kind;
      int m;
      if (!(ls >> kind >> n >> m) || n < 0) throw InvalidInput("bad PACE graph header");
    } else {
      int a = std::stoi(tok), b;
      if (n < 0 || !(ls >> b)) throw InvalidInput("bad PACE edge line");
      es.emplace_back(a - 1, b - 1);
    }
  }
  if (n < 0) throw InvalidInput("missing PACE graph header");
  return Graph(n, std::move(es));
}

}  // namespace rcd
