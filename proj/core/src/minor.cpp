#include <algorithm>
#include <cstdint>
#include <unordered_set>

#include "rcd/errors.hpp"
#include "rcd/graph.hpp"

namespace rcd {
namespace {

// Partitions of V(g) into connected parts, reached by edge contractions.
// H is a minor iff some such partition has a quotient containing H as a
// subgraph.
class MinorSearch {
 public:
  MinorSearch(const Graph& h, const Graph& g) : h_(h), g_(g) {
    order_.resize(h.n());
    for (int i = 0; i < h.n(); ++i) order_[i] = i;
    std::sort(order_.begin(), order_.end(), [&](int a, int b) {
      if (h.degree(a) != h.degree(b)) return h.degree(a) > h.degree(b);
      return a < b;
    });
  }

  std::vector<VertexSet> run() {
    std::vector<int> label(g_.n());
    for (int v = 0; v < g_.n(); ++v) label[v] = v;
    if (search(label)) return model_;
    return {};
  }

 private:
  static void canonicalize(std::vector<int>& label) {
    int remap[16];
    std::fill(std::begin(remap), std::end(remap), -1);
    int next = 0;
    for (int& l : label) {
      if (remap[l] < 0) remap[l] = next++;
      l = remap[l];
    }
  }

  static uint64_t key(const std::vector<int>& label) {
    uint64_t k = 0;
    for (int l : label) k = (k << 4) | static_cast<uint64_t>(l);
    return k;
  }

  bool embed(int idx, const std::vector<uint32_t>& qadj, std::vector<int>& phi, uint32_t used) {
    if (idx == h_.n()) return true;
    int x = order_[idx];
    int k = static_cast<int>(qadj.size());
    for (int p = 0; p < k; ++p) {
      if (used >> p & 1) continue;
      if (__builtin_popcount(qadj[p]) < h_.degree(x)) continue;
      bool ok = true;
      for (Vertex y : h_.neighbors(x)) {
        if (phi[y] >= 0 && !(qadj[p] >> phi[y] & 1)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      phi[x] = p;
      if (embed(idx + 1, qadj, phi, used | (1u << p))) return true;
      phi[x] = -1;
    }
    return false;
  }

  bool search(std::vector<int> label) {
    canonicalize(label);
    if (!seen_.insert(key(label)).second) return false;
    int k = *std::max_element(label.begin(), label.end()) + 1;
    if (k < h_.n()) return false;
    std::vector<uint32_t> qadj(k, 0);
    for (auto [u, v] : g_.edges()) {
      int a = label[u], b = label[v];
      if (a == b) continue;
      qadj[a] |= 1u << b;
      qadj[b] |= 1u << a;
    }
    int qm = 0;
    for (uint32_t m : qadj) qm += __builtin_popcount(m);
    qm /= 2;
    if (qm < h_.m()) return false;
    std::vector<int> phi(h_.n(), -1);
    if (embed(0, qadj, phi, 0)) {
      model_.assign(h_.n(), {});
      for (int x = 0; x < h_.n(); ++x)
        for (int v = 0; v < g_.n(); ++v)
          if (label[v] == phi[x]) model_[x].push_back(v);
      return true;
    }
    if (k == h_.n()) return false;
    for (int a = 0; a < k; ++a) {
      for (int b = a + 1; b < k; ++b) {
        if (!(qadj[a] >> b & 1)) continue;
        std::vector<int> next = label;
        for (int& l : next)
          if (l == b) l = a;
        if (search(std::move(next))) return true;
      }
    }
    return false;
  }

  const Graph& h_;
  const Graph& g_;
  std::vector<int> order_;
  std::unordered_set<uint64_t> seen_;
  std::vector<VertexSet> model_;
};

}  // namespace

std::vector<VertexSet> find_minor_model(const Graph& h, const Graph& g) {
  if (h.n() > 7 || g.n() > 14)
    throw LimitExceeded("is_minor supports |V(h)| <= 7 and |V(g)| <= 14");
  if (h.n() == 0) return {};
  if (h.n() > g.n() || h.m() > g.m()) return {};
  return MinorSearch(h, g).run();
}

bool is_minor(const Graph& h, const Graph& g) {
  if (h.n() == 0) {
    if (g.n() > 14) throw LimitExceeded("is_minor supports |V(g)| <= 14");
    return true;
  }
  return !find_minor_model(h, g).empty();
}

}  // namespace rcd
