#include <algorithm>
#include <map>
#include <numeric>

#include "rcd/errors.hpp"
#include "rcd/permcsp.hpp"

namespace rcd {
namespace {

// A node of the contracted graph: a deletable variable or an undeletable class.
struct Node {
  VertexSet members;
  bool deletable = false;
  std::vector<std::vector<int>> cands;  // [i][j] = value of members[j]
  std::vector<int> cand_weight;
};

// Constraints between two contracted nodes, oriented as target.edge(e).
struct Link {
  std::vector<int> constraints;
  std::vector<std::vector<int>> sat;  // [i][j] = constraints satisfied by candidates i and j
};

struct Row {
  int cost = 0;
  std::vector<int> deleted;  // sorted
};

// status[j] is -1 (deleted) or a candidate index; group[j] is -1 for deleted
// positions and when weights are not tracked; weight[g] is the weight
// already forgotten into group g.
struct State {
  std::vector<int> status;
  std::vector<int> group;
  std::vector<int> weight;
};

std::vector<int> encode(const State& s) {
  std::vector<int> key = s.status;
  key.insert(key.end(), s.group.begin(), s.group.end());
  key.insert(key.end(), s.weight.begin(), s.weight.end());
  return key;
}

State decode(const std::vector<int>& key, std::size_t b) {
  State s;
  s.status.assign(key.begin(), key.begin() + b);
  s.group.assign(key.begin() + b, key.begin() + 2 * b);
  s.weight.assign(key.begin() + 2 * b, key.end());
  return s;
}

// Relabels groups by first occurrence and drops groups without members.
void canonicalize(State& s) {
  std::vector<int> relabel(s.weight.size(), -1);
  std::vector<int> weight;
  for (int& g : s.group) {
    if (g < 0) continue;
    if (relabel[g] < 0) {
      relabel[g] = static_cast<int>(weight.size());
      weight.push_back(s.weight[g]);
    }
    g = relabel[g];
  }
  s.weight = std::move(weight);
}

void merge_groups(State& s, int a, int b) {
  int ga = s.group[a], gb = s.group[b];
  if (ga == gb) return;
  s.weight[ga] += s.weight[gb];
  s.weight[gb] = 0;
  for (int& g : s.group)
    if (g == gb) g = ga;
}

std::vector<int> merged(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

struct Table {
  VertexSet bag;
  std::map<std::vector<int>, Row> rows;
};

class Dp {
 public:
  Dp(const PermCspInstance& inst, const SizeConstraint& sc, const QuotientMap& q, std::vector<Node> nodes,
     std::vector<Link> links, int k, DeletionMode mode)
      : inst_(inst), sc_(sc), q_(q), nodes_(std::move(nodes)), links_(std::move(links)), k_(k), mode_(mode),
        track_(!sc.trivial()) {}

  std::optional<Row> run(const TreeDecomposition& td) {
    std::vector<Table> tables(td.size());
    std::vector<int> order = td.preorder();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      int t = *it;
      Table acc;
      bool first = true;
      for (int c : td.children(t)) {
        Table ct = std::move(tables[c]);
        for (Vertex v : set_minus(ct.bag, td.bag(t))) ct = forget(ct, v);
        for (Vertex v : set_minus(td.bag(t), ct.bag)) ct = introduce(ct, v);
        acc = first ? std::move(ct) : join(acc, ct);
        first = false;
      }
      if (first) {
        acc.rows[{}] = Row{};
        for (Vertex v : td.bag(t)) acc = introduce(acc, v);
      }
      tables[t] = std::move(acc);
    }
    Table root = std::move(tables[td.root()]);
    for (Vertex v : VertexSet(root.bag)) root = forget(root, v);
    auto it = root.rows.find({});
    if (it == root.rows.end()) return std::nullopt;
    return it->second;
  }

 private:
  void offer(Table& t, const State& s, Row row) const {
    if (row.cost > k_) return;
    auto [it, fresh] = t.rows.try_emplace(encode(s), row);
    if (fresh) return;
    Row& cur = it->second;
    if (row.cost < cur.cost || (row.cost == cur.cost && row.deleted < cur.deleted)) cur = std::move(row);
  }

  Table introduce(const Table& in, Vertex v) const {
    Table out;
    out.bag = normalized(set_union(in.bag, {v}));
    const std::size_t pos = std::lower_bound(out.bag.begin(), out.bag.end(), v) - out.bag.begin();
    const Node& node = nodes_[v];
    for (const auto& [key, row] : in.rows) {
      State s = decode(key, in.bag.size());
      auto place = [&](int status) {
        State n = s;
        n.status.insert(n.status.begin() + pos, status);
        int g = -1;
        if (status >= 0 && track_) {
          g = static_cast<int>(n.weight.size());
          n.weight.push_back(0);
        }
        n.group.insert(n.group.begin() + pos, g);
        canonicalize(n);
        offer(out, n, row);
      };
      if (node.deletable) place(-1);
      for (std::size_t i = 0; i < node.cands.size(); ++i) place(static_cast<int>(i));
    }
    return out;
  }

  Table forget(const Table& in, Vertex v) const {
    Table out;
    out.bag = set_minus(in.bag, {v});
    const std::size_t pv = std::lower_bound(in.bag.begin(), in.bag.end(), v) - in.bag.begin();
    const Graph& tg = q_.target;
    for (const auto& [key, row] : in.rows) {
      std::vector<std::pair<State, Row>> variants{{decode(key, in.bag.size()), row}};
      for (std::size_t pu = 0; pu < in.bag.size() && !variants.empty(); ++pu) {
        int e = pu == pv ? -1 : tg.edge_id(v, in.bag[pu]);
        if (e < 0) continue;
        variants = process_edge(std::move(variants), e, pv, pu, in.bag);
      }
      for (auto& [s, r] : variants) {
        const int st = s.status[pv];
        if (st < 0) {
          ++r.cost;
          r.deleted = merged(r.deleted, nodes_[v].members);
          if (r.cost > k_) continue;
        } else if (track_) {
          int& w = s.weight[s.group[pv]];
          w += nodes_[v].cand_weight[st];
          if (w > sc_.delta) continue;
        }
        s.status.erase(s.status.begin() + pv);
        s.group.erase(s.group.begin() + pv);
        canonicalize(s);
        offer(out, s, std::move(r));
      }
    }
    return out;
  }

  std::vector<std::pair<State, Row>> process_edge(std::vector<std::pair<State, Row>> in, int e, std::size_t pv,
                                                  std::size_t pu, const VertexSet& bag) const {
    const Link& link = links_[e];
    const bool v_first = q_.target.edge(e).first == bag[pv];
    const int total = static_cast<int>(link.constraints.size());
    std::vector<std::pair<State, Row>> out;
    for (auto& [s, r] : in) {
      const int sv = s.status[pv], su = s.status[pu];
      if (sv < 0 || su < 0) {
        out.emplace_back(std::move(s), std::move(r));
        continue;
      }
      const int sat = v_first ? link.sat[sv][su] : link.sat[su][sv];
      if (mode_ == DeletionMode::Vertex) {
        if (sat < total) continue;
        if (track_) merge_groups(s, static_cast<int>(pv), static_cast<int>(pu));
        out.emplace_back(std::move(s), std::move(r));
        continue;
      }
      if (track_ && sat > 0) {
        Row cut = r;
        cut.cost += total;
        cut.deleted = merged(cut.deleted, link.constraints);
        if (cut.cost <= k_) out.emplace_back(s, std::move(cut));
      }
      Row keep = r;
      std::vector<int> broken;
      for (int c : link.constraints)
        if (!satisfied(c, sv, su, bag[pv])) broken.push_back(c);
      keep.cost += total - sat;
      keep.deleted = merged(keep.deleted, broken);
      if (keep.cost > k_) continue;
      if (track_ && sat > 0) merge_groups(s, static_cast<int>(pv), static_cast<int>(pu));
      out.emplace_back(std::move(s), std::move(keep));
    }
    return out;
  }

  // Constraint c between node a (candidate ca) and its other end (candidate cb).
  bool satisfied(int c, int ca, int cb, Vertex a) const {
    const Constraint& con = inst_.constraint(c);
    Vertex xa = q_.image[con.x] == a ? con.x : con.y;
    Vertex xb = xa == con.x ? con.y : con.x;
    return inst_.image(c, xa, value(a, ca, xa)) == value(q_.image[xb], cb, xb);
  }

  int value(Vertex node, int cand, Vertex x) const {
    const VertexSet& m = nodes_[node].members;
    return nodes_[node].cands[cand][std::lower_bound(m.begin(), m.end(), x) - m.begin()];
  }

  Table join(const Table& a, const Table& b) const {
    Table out;
    out.bag = a.bag;
    const std::size_t n = a.bag.size();
    std::map<std::vector<int>, std::vector<std::pair<State, const Row*>>> by_status;
    for (const auto& [key, row] : b.rows) {
      State s = decode(key, n);
      by_status[s.status].emplace_back(s, &row);
    }
    for (const auto& [key, row] : a.rows) {
      State sa = decode(key, n);
      auto it = by_status.find(sa.status);
      if (it == by_status.end()) continue;
      for (const auto& [sb, rb] : it->second) {
        Row r{row.cost + rb->cost, merged(row.deleted, rb->deleted)};
        if (r.cost > k_) continue;
        State s = sa;
        if (track_) {
          // Groups of a, then fold in the groups of b by shared members.
          std::vector<int> gb_to_pos(sb.weight.size(), -1);
          for (std::size_t j = 0; j < n; ++j) {
            if (sb.group[j] < 0) continue;
            int& p = gb_to_pos[sb.group[j]];
            if (p < 0) {
              p = static_cast<int>(j);
              s.weight[s.group[j]] += sb.weight[sb.group[j]];
            } else {
              merge_groups(s, p, static_cast<int>(j));
            }
          }
          bool over = false;
          for (int w : s.weight) over = over || w > sc_.delta;
          if (over) continue;
          canonicalize(s);
        }
        offer(out, s, std::move(r));
      }
    }
    return out;
  }

  const PermCspInstance& inst_;
  const SizeConstraint& sc_;
  const QuotientMap& q_;
  std::vector<Node> nodes_;
  std::vector<Link> links_;
  int k_;
  DeletionMode mode_;
  bool track_;
};

}  // namespace

std::optional<DeletionSolution> dp_delete(const PermCspInstance& inst, const SizeConstraint& sc,
                                          const VertexSet& undeletable, const QuotientMap& q,
                                          const TreeDecomposition& td, int k, DeletionMode mode) {
  if (k < 0) throw InvalidInput("negative budget");
  if (!fits(inst, sc)) throw InvalidInput("size constraint does not match the instance");
  if (!(q.source == inst.graph())) throw InvalidInput("quotient is not of the instance graph");
  if (!validate(td, q.target).ok()) throw InvalidInput("tree decomposition does not fit the contracted graph");
  const int d = inst.domain();
  std::vector<Node> nodes;
  for (const VertexSet& cls : q.classes()) {
    Node node;
    node.members = cls;
    const bool fixed = intersects(cls, undeletable);
    if (fixed && !is_subset(cls, undeletable)) throw InvalidInput("class mixes deletable and undeletable vertices");
    if (!fixed && cls.size() != 1) throw InvalidInput("deletable vertices must stay uncontracted");
    node.deletable = !fixed && mode == DeletionMode::Vertex;
    node.cands = propagate(inst, cls, sc);
    if (node.cands.empty() && !node.deletable) return std::nullopt;
    for (const auto& cand : node.cands) {
      int w = 0;
      for (std::size_t j = 0; j < cls.size(); ++j) w += sc.weight(cls[j], cand[j], d);
      node.cand_weight.push_back(w);
    }
    nodes.push_back(std::move(node));
  }
  std::vector<Link> links(q.target.m());
  for (int c = 0; c < inst.graph().m(); ++c) {
    const Constraint& con = inst.constraint(c);
    Vertex a = q.image[con.x], b = q.image[con.y];
    if (a == b) {
      // Internal to an undeletable class; its candidates already satisfy it.
      continue;
    }
    links[q.target.edge_id(a, b)].constraints.push_back(c);
  }
  for (int e = 0; e < q.target.m(); ++e) {
    auto [a, b] = q.target.edge(e);
    Link& link = links[e];
    link.sat.assign(nodes[a].cands.size(), std::vector<int>(nodes[b].cands.size(), 0));
    for (int c : link.constraints) {
      const Constraint& con = inst.constraint(c);
      Vertex xa = q.image[con.x] == a ? con.x : con.y;
      Vertex xb = xa == con.x ? con.y : con.x;
      auto ia = std::lower_bound(nodes[a].members.begin(), nodes[a].members.end(), xa) - nodes[a].members.begin();
      auto ib = std::lower_bound(nodes[b].members.begin(), nodes[b].members.end(), xb) - nodes[b].members.begin();
      for (std::size_t i = 0; i < nodes[a].cands.size(); ++i)
        for (std::size_t j = 0; j < nodes[b].cands.size(); ++j)
          if (inst.image(c, xa, nodes[a].cands[i][ia]) == nodes[b].cands[j][ib]) ++link.sat[i][j];
    }
  }
  Dp dp(inst, sc, q, std::move(nodes), std::move(links), k, mode);
  auto row = dp.run(td);
  if (!row) return std::nullopt;
  return DeletionSolution{mode, row->deleted, k};
}

}  // namespace rcd
