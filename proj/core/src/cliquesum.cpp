#include "rcd/cliquesum.hpp"

#include <algorithm>
#include <string>

#include "rcd/errors.hpp"

namespace rcd {
namespace {

std::string node_str(int t) { return "node " + std::to_string(t); }

VertexSet local_ids(const VertexSet& bag, const VertexSet& global) {
  VertexSet out;
  for (Vertex v : global) {
    auto it = std::lower_bound(bag.begin(), bag.end(), v);
    if (it == bag.end() || *it != v) throw InvalidInput("vertex outside the bag");
    out.push_back(static_cast<Vertex>(it - bag.begin()));
  }
  return out;
}

bool joined(const Graph& g, const VertexSet& allowed, Vertex a, Vertex b) {
  VertexSet w = set_union(allowed, normalized({a, b}));
  auto label = component_labels(g, to_mask(g.n(), w));
  return label[a] == label[b];
}

}  // namespace

ApexStructure torso_structure(const RsInput& in, int t) {
  Subgraph tor = torso(in.td, in.graph, t);
  ApexStructure st;
  st.graph = tor.graph;
  st.apices = local_ids(in.td.bag(t), in.torsos[t].apices);
  st.embedding = in.torsos[t].embedding;
  st.h = in.h;
  return st;
}

Report validate_rs(const RsInput& in) {
  Report r;
  TdReport tdr = validate(in.td, in.graph);
  r.add("td-valid", tdr.ok());
  if (static_cast<int>(in.torsos.size()) != in.td.size()) {
    r.add("torso-count", false, "one torso structure per node expected");
    return r;
  }
  const Graph& g = in.graph;
  for (int t = 0; t < in.td.size(); ++t) {
    const VertexSet& bag = in.td.bag(t);
    const VertexSet& a = in.torsos[t].apices;
    VertexSet sigma = adhesion(in.td, t);
    if (!is_subset(a, bag)) {
      r.add("apices-in-bag", false, node_str(t));
      continue;
    }
    ApexStructure st = torso_structure(in, t);
    bool match = true;
    try {
      validate_apex_structure(st);
    } catch (const InvalidInput&) {
      match = false;
    }
    r.add("torso-embedding-matches", match, node_str(t));
    if (match) r.add("torso-embedding-minimal", is_minimal(st.embedding), node_str(t));
    r.add("adhesion-size", static_cast<int>(sigma.size()) <= in.h, node_str(t));
    r.add("adhesion-in-apices", is_subset(sigma, a), node_str(t));
    for (int s : in.td.children(t))
      r.add("child-adhesion-non-apex", set_minus(adhesion(in.td, s), a).size() <= 3,
            node_str(t) + " child " + std::to_string(s));
    VertexSet below = set_minus(gamma_set(in.td, t), sigma);
    r.add("subtree-connected", !below.empty() && is_connected_set(g, below), node_str(t));
    r.add("adhesion-dominated", is_subset(sigma, open_neighborhood(g, below)), node_str(t));
    Subgraph tor = torso(in.td, g, t);
    VertexSet rest = local_ids(bag, set_minus(bag, sigma));
    VertexSet sl = local_ids(bag, sigma);
    r.add("torso-minus-adhesion-connected", is_connected_set(tor.graph, rest), node_str(t));
    r.add("torso-adhesion-dominated", is_subset(sl, open_neighborhood(tor.graph, rest)), node_str(t));
  }
  return r;
}

Subgraph build_gt(const RsInput& in, int t) {
  Subgraph tor = torso(in.td, in.graph, t);
  VertexSet a = local_ids(in.td.bag(t), in.torsos[t].apices);
  const Graph& tg = tor.graph;
  std::vector<char> apex = to_mask(tg.n(), a);
  std::vector<Edge> es;
  Subgraph out;
  out.to_parent = tor.to_parent;
  for (int e = 0; e < tg.m(); ++e) {
    auto [u, v] = tg.edge(e);
    if (apex[u] && apex[v]) {
      bool redundant = false;
      for (Vertex w : tg.neighbors(u))
        if (!apex[w] && tg.has_edge(w, v)) redundant = true;
      if (redundant) continue;
    }
    es.emplace_back(u, v);
    out.edge_to_parent.push_back(tor.edge_to_parent[e]);
  }
  out.graph = Graph(tg.n(), std::move(es));
  return out;
}

VertexSet witness_set(const RsInput& in, int t) {
  const VertexSet& bag = in.td.bag(t);
  VertexSet sigma = adhesion(in.td, t);
  Subgraph gt = build_gt(in, t);
  VertexSet out;
  for (Vertex v : sigma) {
    Vertex lv = local_ids(bag, {v}).front();
    Vertex best = -1;
    for (Vertex w : gt.graph.neighbors(lv)) {
      if (!has(sigma, bag[w])) {
        best = bag[w];
        break;
      }
    }
    if (best < 0) throw HypothesisViolation("adhesion vertex without a neighbour below at " + node_str(t));
    out.push_back(best);
  }
  normalize(out);
  return out;
}

TorsoPiece torso_piece(const RsInput& in, int t) {
  const VertexSet& bag = in.td.bag(t);
  VertexSet sigma = adhesion(in.td, t);
  VertexSet rest = set_minus(bag, sigma);
  TorsoPiece piece;
  if (rest.empty()) return piece;
  Subgraph gt = build_gt(in, t);
  Subgraph h = induced_subgraph(gt.graph, local_ids(bag, rest));
  ApexStructure& st = piece.structure;
  st.graph = h.graph;
  for (Vertex a : set_minus(in.torsos[t].apices, sigma)) st.apices.push_back(h.local(local_ids(bag, {a}).front()));
  normalize(st.apices);
  // σ(t) ⊆ A_t, so the non-apex vertices of h are exactly those of the torso embedding.
  st.embedding = in.torsos[t].embedding;
  st.h = in.h;
  for (Vertex w : witness_set(in, t)) piece.phi.push_back(h.local(local_ids(bag, {w}).front()));
  normalize(piece.phi);
  for (Vertex x : h.to_parent) piece.to_global.push_back(bag[x]);
  return piece;
}

std::vector<int> color_tree(const RsInput& in, const std::vector<std::vector<VertexSet>>& classes, int p) {
  std::vector<int> col(in.td.size(), 0);
  for (int t : in.td.preorder()) {
    int parent = in.td.parent(t);
    if (parent < 0) {
      col[t] = 1;
      continue;
    }
    Subgraph gt = build_gt(in, parent);
    const VertexSet& pbag = in.td.bag(parent);
    VertexSet sigma = adhesion(in.td, t);
    int chosen = 0;
    for (int i = 1; i <= p; ++i) {
      VertexSet both = set_intersection(sigma, classes[parent][i - 1]);
      VertexSet lb = local_ids(pbag, both);
      bool edge = false;
      for (std::size_t x = 0; x < lb.size() && !edge; ++x)
        for (std::size_t y = x + 1; y < lb.size() && !edge; ++y) edge = gt.graph.has_edge(lb[x], lb[y]);
      if (edge) {
        if (chosen) throw InternalError("adhesion of " + node_str(t) + " meets two classes in edges");
        chosen = i;
      }
    }
    col[t] = chosen ? chosen : col[parent];
  }
  return col;
}

Rcd combine(const RsInput& in, int p) {
  if (p < 1) throw InvalidInput("p must be positive");
  Report v = validate_rs(in);
  if (!v.ok()) throw HypothesisViolation("input is not a valid clique-sum structure:\n" + v.summary());
  const int nodes = in.td.size();
  TorsoMeta meta;
  meta.classes.assign(nodes, std::vector<VertexSet>(p));
  meta.witnesses.assign(nodes, {});
  meta.residue.assign(nodes, {});
  for (int t = 0; t < nodes; ++t) {
    const VertexSet& bag = in.td.bag(t);
    VertexSet sigma = adhesion(in.td, t);
    VertexSet rest = set_minus(bag, sigma);
    if (rest.empty()) continue;
    meta.witnesses[t] = witness_set(in, t);
    TorsoPiece piece = torso_piece(in, t);
    Rcd part = decompose_apex(piece.structure, p, piece.phi);
    for (int i = 0; i < p; ++i) {
      VertexSet z;
      for (Vertex x : part.classes[i]) z.push_back(piece.to_global[x]);
      meta.classes[t][i] = normalized(z);
    }
    VertexSet covered;
    for (const auto& z : meta.classes[t]) covered = set_union(covered, z);
    meta.residue[t] = set_minus(rest, covered);
  }
  meta.color = color_tree(in, meta.classes, p);
  Rcd rcd;
  rcd.p = p;
  rcd.graph = in.graph;
  rcd.classes.assign(p, {});
  for (int t = 0; t < nodes; ++t) {
    for (int i = 0; i < p; ++i) rcd.classes[i] = set_union(rcd.classes[i], meta.classes[t][i]);
    int c = meta.color[t] - 1;
    rcd.classes[c] = set_union(rcd.classes[c], meta.residue[t]);
  }
  std::size_t total = 0;
  for (const auto& z : rcd.classes) total += z.size();
  VertexSet all;
  for (const auto& z : rcd.classes) all = set_union(all, z);
  if (total != all.size() || static_cast<int>(all.size()) != in.graph.n())
    throw InternalError("combined classes do not partition the vertex set");
  rcd.torsos = std::move(meta);
  return rcd;
}

Report verify_connected_bottom(const RsInput& in, const Rcd& rcd) {
  if (!rcd.torsos) throw InvalidInput("decomposition carries no per-torso classes");
  const TorsoMeta& meta = *rcd.torsos;
  const Graph& g = in.graph;
  Report r;
  const int nodes = in.td.size();
  std::vector<VertexSet> below(nodes);
  for (int t = 0; t < nodes; ++t) below[t] = set_minus(gamma_set(in.td, t), adhesion(in.td, t));
  for (int t = 0; t < nodes; ++t) {
    Subgraph tor = torso(in.td, g, t);
    const VertexSet& bag = in.td.bag(t);
    for (int i = 0; i < rcd.p; ++i) {
      const VertexSet& zt = meta.classes[t][i];
      for (auto [a, b] : tor.graph.edges()) {
        Vertex v = bag[a], w = bag[b];
        if (!has(zt, v) || !has(zt, w) || g.has_edge(v, w)) continue;
        VertexSet allowed;
        for (int s : in.td.children(t)) {
          VertexSet sg = adhesion(in.td, s);
          if (has(sg, v) && has(sg, w)) allowed = set_union(allowed, set_intersection(below[s], rcd.classes[i]));
        }
        r.add("fake-edges-realised", joined(g, allowed, v, w),
              node_str(t) + " class " + std::to_string(i + 1) + " edge " + std::to_string(v) + "-" +
                  std::to_string(w));
      }
    }
  }
  for (int t = 0; t < nodes; ++t) {
    int i = meta.color[t] - 1;
    VertexSet sz = set_intersection(adhesion(in.td, t), rcd.classes[i]);
    VertexSet allowed = set_intersection(below[t], rcd.classes[i]);
    for (std::size_t x = 0; x < sz.size(); ++x)
      for (std::size_t y = x + 1; y < sz.size(); ++y)
        r.add("adhesion-pairs-joined", joined(g, allowed, sz[x], sz[y]),
              node_str(t) + " pair " + std::to_string(sz[x]) + "-" + std::to_string(sz[y]));
  }
  return r;
}

}  // namespace rcd
