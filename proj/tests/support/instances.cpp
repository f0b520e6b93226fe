#include "instances.hpp"

#include <algorithm>

#include "rcd/generators.hpp"

namespace rcd::testing {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

namespace {

bool coin(Rng& rng, double prob) { return std::uniform_real_distribution<double>(0, 1)(rng) < prob; }

VertexSet lower(const VertexSet& s, const std::vector<Vertex>& to) {
  VertexSet out;
  for (Vertex v : s) {
    auto it = std::lower_bound(to.begin(), to.end(), v);
    if (it != to.end() && *it == v) out.push_back(static_cast<Vertex>(it - to.begin()));
  }
  return out;
}

std::vector<VertexSet> lower_all(const std::vector<VertexSet>& s, const std::vector<Vertex>& to) {
  std::vector<VertexSet> out;
  for (const auto& x : s) out.push_back(lower(x, to));
  return out;
}

}  // namespace

Graph random_graph(int n, double edge_prob, Rng& rng) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng, edge_prob)) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

Graph random_connected_graph(int n, double extra_prob, Rng& rng) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(uniform(rng, 0, v - 1), v);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng, extra_prob)) edges.emplace_back(u, v);
  return Graph::simplified(n, edges);
}

VertexSet random_subset(int n, double prob, Rng& rng) {
  VertexSet s;
  for (Vertex v = 0; v < n; ++v)
    if (coin(rng, prob)) s.push_back(v);
  return s;
}

VertexSet random_connected_subset(const Graph& g, int size, Rng& rng) {
  if (g.n() == 0 || size <= 0) return {};
  VertexSet s{uniform(rng, 0, g.n() - 1)};
  while (static_cast<int>(s.size()) < size) {
    VertexSet frontier = set_minus(open_neighborhood(g, s), s);
    if (frontier.empty()) break;
    s = set_union(s, {frontier[uniform(rng, 0, static_cast<int>(frontier.size()) - 1)]});
  }
  return s;
}

RandomTd random_td(int n, int nodes, double edge_prob, Rng& rng) {
  std::vector<int> parent(nodes, -1);
  std::vector<std::vector<int>> adj(nodes);
  for (int t = 1; t < nodes; ++t) {
    parent[t] = uniform(rng, 0, t - 1);
    adj[t].push_back(parent[t]);
    adj[parent[t]].push_back(t);
  }
  std::vector<VertexSet> bags(nodes);
  for (Vertex v = 0; v < n; ++v) {
    std::vector<int> occ{uniform(rng, 0, nodes - 1)};
    int grow = uniform(rng, 0, 2);
    for (int step = 0; step < grow; ++step) {
      int from = occ[uniform(rng, 0, static_cast<int>(occ.size()) - 1)];
      int to = adj[from].empty() ? from : adj[from][uniform(rng, 0, static_cast<int>(adj[from].size()) - 1)];
      if (std::find(occ.begin(), occ.end(), to) == occ.end()) occ.push_back(to);
    }
    for (int t : occ) bags[t].push_back(v);
  }
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      bool share = false;
      for (const auto& b : bags) share = share || (has(b, u) && has(b, v));
      if (share && coin(rng, edge_prob)) edges.emplace_back(u, v);
    }
  }
  return {Graph(n, std::move(edges)), TreeDecomposition(parent, bags)};
}

const Graph& Instance::graph() const {
  switch (kind) {
    case Kind::Embedded: return emb.graph();
    case Kind::Apex: return apex.graph;
    case Kind::CliqueSum: return rs.graph;
  }
  return emb.graph();
}

std::vector<Instance> partition_suite() {
  std::vector<Instance> out;
  Rng rng(20241015);
  for (int i = 0; i < 30; ++i) {
    Instance inst;
    int m = 2 + i % 11;
    inst.name = "grid-" + std::to_string(m) + "-" + std::to_string(i);
    inst.emb = grid(m);
    inst.p = 2 + i % 3;
    inst.phi = random_subset(m * m, 2.0 / (m * m), rng);
    out.push_back(std::move(inst));
  }
  for (int i = 0; i < 80; ++i) {
    Instance inst;
    int n = 20 + (i * 37) % 381;
    inst.name = "planar-" + std::to_string(n) + "-" + std::to_string(i);
    inst.emb = random_planar(n, 1000 + i);
    inst.p = 2 + i % 3;
    inst.phi = random_subset(n, 2.0 / n, rng);
    out.push_back(std::move(inst));
  }
  for (int i = 0; i < 40; ++i) {
    Instance inst;
    int m = 3 + i % 6, a = 1 + i % 2;
    inst.name = "apex-grid-" + std::to_string(m) + "-" + std::to_string(a) + "-" + std::to_string(i);
    inst.kind = Kind::Apex;
    inst.apex = apex_grid(m, a);
    inst.p = 2 + i % 2;
    inst.phi = random_subset(m * m + a, 2.0 / (m * m), rng);
    out.push_back(std::move(inst));
  }
  for (int i = 0; i < 50; ++i) {
    Instance inst;
    inst.kind = Kind::CliqueSum;
    CliqueSumOptions opt;
    opt.pieces = 1 + i % 4;
    opt.planar_pieces = i % 2 == 1;
    inst.name = "clique-sum-" + std::to_string(opt.pieces) + "-" + std::to_string(i);
    inst.rs = random_clique_sum(5000 + i, opt);
    inst.p = 2 + i % 2;
    out.push_back(std::move(inst));
  }
  return out;
}

Rcd decompose(const Instance& inst) {
  switch (inst.kind) {
    case Kind::Embedded: return decompose_embedded(inst.emb, inst.p, inst.phi);
    case Kind::Apex: return decompose_apex(inst.apex, inst.p, inst.phi);
    case Kind::CliqueSum: return combine(inst.rs, inst.p);
  }
  return {};
}

std::vector<EmbeddedPiece> apex_pieces(const ApexStructure& st, const Rcd& rcd) {
  std::vector<EmbeddedPiece> out;
  const auto ev = st.embedded_vertices();
  auto comps = components(st.embedding.graph());
  for (std::size_t k = 0; k < comps.size(); ++k) {
    SubEmbedding sub = induced_embedding(st.embedding, comps[k]);
    std::vector<Vertex> to_g;
    for (Vertex v : sub.to_parent) to_g.push_back(ev[v]);
    const LayerMeta& m = rcd.parts.at(k);
    LayerMeta local = m;
    local.vertices = lower(m.vertices, to_g);
    local.phi = lower(m.phi, to_g);
    local.layers = lower_all(m.layers, to_g);
    local.connectors = lower_all(m.connectors, to_g);
    local.lplus = lower_all(m.lplus, to_g);
    local.phi_t = lower_all(m.phi_t, to_g);
    out.push_back({sub.embedding, std::move(local)});
  }
  return out;
}

std::vector<EmbeddedPiece> embedded_pieces(const Instance& inst, const Rcd& rcd) {
  switch (inst.kind) {
    case Kind::Embedded: return {{inst.emb, rcd.parts.front()}};
    case Kind::Apex: return apex_pieces(inst.apex, rcd);
    case Kind::CliqueSum: {
      std::vector<EmbeddedPiece> out;
      for (int t = 0; t < inst.rs.td.size(); ++t) {
        TorsoPiece piece = torso_piece(inst.rs, t);
        if (piece.structure.graph.n() == 0) continue;
        Rcd part = decompose_apex(piece.structure, inst.p, piece.phi);
        for (auto& ep : apex_pieces(piece.structure, part)) out.push_back(std::move(ep));
      }
      return out;
    }
  }
  return {};
}

}  // namespace rcd::testing
