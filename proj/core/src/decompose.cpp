#include "rcd/decompose.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "rcd/errors.hpp"

namespace rcd {

std::vector<Vertex> ApexStructure::embedded_vertices() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < graph.n(); ++v)
    if (!has(apices, v)) out.push_back(v);
  return out;
}

void validate_apex_structure(const ApexStructure& st) {
  for (Vertex a : st.apices)
    if (!st.graph.contains(a)) throw InvalidInput("apex out of range");
  if (static_cast<int>(st.apices.size()) > st.h) throw InvalidInput("more apices than h");
  auto ev = st.embedded_vertices();
  Subgraph rest = induced_subgraph(st.graph, ev);
  if (!(rest.graph == st.embedding.graph())) throw InvalidInput("embedding does not match G - A");
}

LayerClassification classify_layers(const Graph& g, const RadialLayering& layering, const VertexSet& phi) {
  LayerClassification lc;
  lc.is_bad.assign(layering.count() + 1, 0);
  if (layering.count() >= 1) lc.is_bad[1] = 1;
  for (Vertex v : closed_neighborhood(g, phi)) lc.is_bad[layering.index[v]] = 1;
  for (int t = 1; t <= layering.count(); ++t)
    if (lc.is_bad[t]) lc.bad.push_back(t);
  if (static_cast<int>(lc.bad.size()) > 3 * static_cast<int>(phi.size()) + 1)
    throw InternalError("too many bad layers");
  return lc;
}

Connectors build_connectors(const Embedding& emb, const RadialLayering& layering, const LayerClassification& lc,
                            const VertexSet& phi) {
  const Graph& g = emb.graph();
  const int m = layering.count();
  Connectors c;
  c.x.assign(m, {});
  c.lplus.assign(m, {});
  c.phi_t.assign(m, {});
  std::vector<char> below(g.n(), 0);  // union of X_i for i > t
  for (int t = m; t >= 1; --t) {
    if (lc.is_bad[t]) {
      c.x[t - 1] = layering.layer(t);
    } else {
      VertexSet seeds;
      for (const VertexSet& comp : components(g, below)) {
        if (!intersects(comp, phi)) continue;
        Vertex best = -1;
        for (Vertex v : comp)
          for (Vertex w : g.neighbors(v))
            if (layering.index[w] == t && (best < 0 || w < best)) best = w;
        if (best >= 0) seeds.push_back(best);
      }
      normalize(seeds);
      c.phi_t[t - 1] = seeds;
      if (!seeds.empty()) {
        KeyOutput out = compute_key_sets(boundary_complex(emb, layering, t), seeds);
        c.x[t - 1] = out.x;
        c.lplus[t - 1] = out.lplus;
      }
    }
    for (Vertex v : c.x[t - 1]) below[v] = 1;
  }
  if (phi.size() > 1) {
    auto label = component_labels(g, below);
    for (Vertex v : phi)
      if (label[v] < 0 || label[v] != label[phi.front()]) throw InternalError("connectors do not join phi");
  }
  return c;
}

int rcd_delta(int p, int c, int h) { return p + 3 * c + 4 * h + 1; }

std::vector<int> good_residues(int p, int delta, const std::vector<int>& bad_layers) {
  std::vector<int> out;
  for (int q = 1; q <= delta && static_cast<int>(out.size()) < p; ++q) {
    bool bad = std::any_of(bad_layers.begin(), bad_layers.end(), [&](int b) { return (b - q) % delta == 0; });
    if (!bad) out.push_back(q);
  }
  if (static_cast<int>(out.size()) < p) throw InternalError("not enough good residues");
  return out;
}

std::vector<VertexSet> assemble(const RadialLayering& layering, const Connectors& conn, int p, int delta,
                                const std::vector<int>& residues) {
  std::vector<VertexSet> z(p);
  for (int i = 0; i < p; ++i) {
    for (int t = residues[i]; t <= layering.count(); t += delta) {
      VertexSet drop = set_union(conn.x[t - 1], conn.lplus[t - 1]);
      VertexSet part = set_minus(layering.layer(t), drop);
      z[i].insert(z[i].end(), part.begin(), part.end());
    }
    normalize(z[i]);
  }
  return z;
}

namespace {

VertexSet complement_of_union(int n, const std::vector<VertexSet>& classes) {
  std::vector<char> in(n, 0);
  for (const auto& z : classes)
    for (Vertex v : z) in[v] = 1;
  VertexSet out;
  for (Vertex v = 0; v < n; ++v)
    if (!in[v]) out.push_back(v);
  return out;
}

VertexSet map_set(const VertexSet& s, const std::vector<Vertex>& to) {
  VertexSet out;
  for (Vertex v : s) out.push_back(to[v]);
  normalize(out);
  return out;
}

LayerMeta map_meta(const LayerMeta& m, const std::vector<Vertex>& to) {
  LayerMeta r = m;
  r.vertices = map_set(m.vertices, to);
  r.phi = map_set(m.phi, to);
  for (auto& s : r.layers) s = map_set(s, to);
  for (auto& s : r.connectors) s = map_set(s, to);
  for (auto& s : r.lplus) s = map_set(s, to);
  for (auto& s : r.phi_t) s = map_set(s, to);
  return r;
}

void check_disjoint(Report& r, int n, const std::vector<VertexSet>& classes) {
  std::vector<int> owner(n, -1);
  bool ok = true;
  std::string detail;
  for (int i = 0; i < static_cast<int>(classes.size()); ++i) {
    for (Vertex v : classes[i]) {
      if (v < 0 || v >= n) {
        ok = false;
        detail = "vertex out of range";
        continue;
      }
      if (owner[v] >= 0 && ok) {
        ok = false;
        detail = "vertex " + std::to_string(v) + " in classes " + std::to_string(owner[v] + 1) + " and " +
                 std::to_string(i + 1);
      }
      owner[v] = i;
    }
  }
  r.add("classes-disjoint", ok, detail);
}

bool phi_connected(const Graph& g, const std::vector<char>& alive, const VertexSet& phi) {
  if (phi.size() <= 1) return true;
  auto label = component_labels(g, alive);
  for (Vertex v : phi)
    if (label[v] < 0 || label[v] != label[phi.front()]) return false;
  return true;
}

}  // namespace

Rcd decompose_embedded(const Embedding& emb, int p, const VertexSet& phi, int h) {
  const Graph& g = emb.graph();
  if (p < 1) throw InvalidInput("p must be positive");
  for (Vertex v : phi)
    if (!g.contains(v)) throw InvalidInput("phi vertex out of range");
  if (!is_connected(g)) throw HypothesisViolation("decompose_embedded needs a connected graph");
  if (!is_minimal(emb)) throw HypothesisViolation("decompose_embedded needs a minimal embedding");
  Rcd rcd;
  rcd.p = p;
  rcd.graph = g;
  RadialLayering layering = radial_layering(emb);
  LayerClassification lc = classify_layers(g, layering, phi);
  Connectors conn = build_connectors(emb, layering, lc, phi);
  LayerMeta meta;
  meta.vertices.resize(g.n());
  std::iota(meta.vertices.begin(), meta.vertices.end(), 0);
  meta.phi = phi;
  meta.c = static_cast<int>(phi.size());
  meta.h = h;
  meta.delta = rcd_delta(p, meta.c, h);
  meta.bad_layers = lc.bad;
  meta.residues = good_residues(p, meta.delta, lc.bad);
  meta.layers = layering.layers;
  meta.connectors = conn.x;
  meta.lplus = conn.lplus;
  meta.phi_t = conn.phi_t;
  rcd.classes = assemble(layering, conn, p, meta.delta, meta.residues);
  rcd.residue = complement_of_union(g.n(), rcd.classes);
  rcd.parts.push_back(std::move(meta));
  Report r = check_embedded_rcd(g, rcd, phi);
  if (!r.ok()) throw InternalError("decomposition postcondition failed:\n" + r.summary());
  return rcd;
}

Rcd decompose_apex(const ApexStructure& st, int p, const VertexSet& phi) {
  validate_apex_structure(st);
  const Graph& g = st.graph;
  if (!is_connected(g)) throw HypothesisViolation("decompose_apex needs a connected graph");
  for (Vertex v : phi)
    if (!g.contains(v)) throw InvalidInput("phi vertex out of range");
  const auto ev = st.embedded_vertices();
  Rcd rcd;
  rcd.p = p;
  rcd.graph = g;
  rcd.classes.assign(p, {});
  for (const VertexSet& comp : components(st.embedding.graph())) {
    SubEmbedding sub = induced_embedding(st.embedding, comp);
    std::vector<Vertex> to_g;
    for (Vertex v : sub.to_parent) to_g.push_back(ev[v]);
    VertexSet phi_local;
    for (Vertex v : phi) {
      auto it = std::lower_bound(to_g.begin(), to_g.end(), v);
      if (it != to_g.end() && *it == v) phi_local.push_back(static_cast<Vertex>(it - to_g.begin()));
    }
    for (Vertex a : st.apices) {
      for (Vertex w : g.neighbors(a)) {  // ascending
        auto it = std::lower_bound(to_g.begin(), to_g.end(), w);
        if (it != to_g.end() && *it == w) {
          phi_local.push_back(static_cast<Vertex>(it - to_g.begin()));
          break;
        }
      }
    }
    normalize(phi_local);
    Rcd part = decompose_embedded(sub.embedding, p, phi_local, st.h);
    for (int i = 0; i < p; ++i) {
      VertexSet z = map_set(part.classes[i], to_g);
      rcd.classes[i] = set_union(rcd.classes[i], z);
    }
    rcd.parts.push_back(map_meta(part.parts.front(), to_g));
  }
  rcd.residue = complement_of_union(g.n(), rcd.classes);
  Report r = check_apex_rcd(st, rcd, phi);
  if (!r.ok()) throw InternalError("apex decomposition postcondition failed:\n" + r.summary());
  return rcd;
}

Report check_embedded_rcd(const Graph& g, const Rcd& rcd, const VertexSet& phi) {
  Report r;
  r.add("class-count", static_cast<int>(rcd.classes.size()) == rcd.p);
  check_disjoint(r, g.n(), rcd.classes);
  VertexSet nphi = closed_neighborhood(g, phi);
  for (int i = 0; i < static_cast<int>(rcd.classes.size()); ++i)
    r.add("avoids-closed-neighbourhood", !intersects(rcd.classes[i], nphi), "class " + std::to_string(i + 1));
  std::vector<char> alive(g.n(), 1);
  for (const auto& z : rcd.classes)
    for (Vertex v : z) alive[v] = 0;
  r.add("phi-connected", phi_connected(g, alive, phi));
  return r;
}

Report check_apex_rcd(const ApexStructure& st, const Rcd& rcd, const VertexSet& phi) {
  const Graph& g = st.graph;
  Report r;
  r.add("class-count", static_cast<int>(rcd.classes.size()) == rcd.p);
  check_disjoint(r, g.n(), rcd.classes);
  VertexSet nphi = closed_neighborhood(g, set_minus(phi, st.apices));
  for (int i = 0; i < static_cast<int>(rcd.classes.size()); ++i) {
    r.add("avoids-apices", !intersects(rcd.classes[i], st.apices), "class " + std::to_string(i + 1));
    r.add("avoids-closed-neighbourhood", !intersects(rcd.classes[i], nphi), "class " + std::to_string(i + 1));
  }
  // G' = G - ∪Z minus apex edges into N(∪Z) \ A.
  std::vector<char> inz(g.n(), 0);
  for (const auto& z : rcd.classes)
    for (Vertex v : z) inz[v] = 1;
  std::vector<char> near(g.n(), 0);
  for (Vertex v = 0; v < g.n(); ++v)
    if (inz[v])
      for (Vertex w : g.neighbors(v))
        if (!inz[w] && !has(st.apices, w)) near[w] = 1;
  std::vector<Edge> es;
  for (auto [u, v] : g.edges()) {
    if (inz[u] || inz[v]) continue;
    bool au = has(st.apices, u), av = has(st.apices, v);
    if ((au && near[v]) || (av && near[u])) continue;
    es.emplace_back(u, v);
  }
  Graph gp(g.n(), std::move(es));
  std::vector<char> alive(g.n(), 1);
  for (Vertex v = 0; v < g.n(); ++v)
    if (inz[v]) alive[v] = 0;
  r.add("phi-connected", phi_connected(gp, alive, phi));
  return r;
}

}  // namespace rcd
