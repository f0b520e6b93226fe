#include "rcd/treewidth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <unordered_set>

#include "rcd/errors.hpp"

namespace rcd {
namespace {

class Bitset {
 public:
  explicit Bitset(int n = 0) : w_((n + 63) / 64, 0) {}
  void set(int i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool test(int i) const { return w_[i >> 6] >> (i & 63) & 1; }
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < w_.size(); ++k) {
      uint64_t x = w_[k];
      while (x) {
        int b = std::countr_zero(x);
        f(static_cast<int>(k * 64 + b));
        x &= x - 1;
      }
    }
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }

 private:
  std::vector<uint64_t> w_;
};

// Eliminates vertices, keeping the filled graph.
class FillGraph {
 public:
  explicit FillGraph(const Graph& g) : n_(g.n()), adj_(n_, Bitset(n_)), deg_(n_, 0), alive_(n_, 1) {
    for (auto [u, v] : g.edges()) {
      adj_[u].set(v);
      adj_[v].set(u);
      ++deg_[u];
      ++deg_[v];
    }
  }
  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    adj_[v].for_each([&](int w) { out.push_back(w); });
    return out;
  }
  long fill(int v) const {
    auto nb = neighbors(v);
    long missing = 0;
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (!adj_[nb[i]].test(nb[j])) ++missing;
    return missing;
  }
  void eliminate(int v) {
    auto nb = neighbors(v);
    for (int a : nb) {
      adj_[a].reset(v);
      --deg_[a];
    }
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        int a = nb[i], b = nb[j];
        if (!adj_[a].test(b)) {
          adj_[a].set(b);
          adj_[b].set(a);
          ++deg_[a];
          ++deg_[b];
        }
      }
    }
    adj_[v] = Bitset(n_);
    deg_[v] = 0;
    alive_[v] = 0;
  }
  // Merges v into u and deletes v.
  void contract(int v, int u) {
    auto nb = neighbors(v);
    for (int a : nb) {
      adj_[a].reset(v);
      --deg_[a];
    }
    for (int a : nb) {
      if (a == u || adj_[u].test(a)) continue;
      adj_[u].set(a);
      adj_[a].set(u);
      ++deg_[u];
      ++deg_[a];
    }
    adj_[v] = Bitset(n_);
    deg_[v] = 0;
    alive_[v] = 0;
  }
  void remove(int v) { contract(v, v); }
  int degree(int v) const { return deg_[v]; }
  bool alive(int v) const { return alive_[v]; }

 private:
  int n_;
  std::vector<Bitset> adj_;
  std::vector<int> deg_;
  std::vector<char> alive_;
};

class ExactSearch {
 public:
  explicit ExactSearch(const Graph& g) : n_(g.n()), adj_(g.n(), 0) {
    for (auto [u, v] : g.edges()) {
      adj_[u] |= 1u << v;
      adj_[v] |= 1u << u;
    }
    all_ = n_ == 32 ? ~0u : (1u << n_) - 1;
  }

  bool decide(int k, std::vector<Vertex>& order) {
    k_ = k;
    failed_.clear();
    order.clear();
    return dfs(0, order);
  }

 private:
  // Vertices outside s and v reachable from v through s.
  uint32_t q_set(uint32_t s, int v) const {
    uint32_t visited = 1u << v;
    uint32_t result = 0;
    uint32_t stack = 1u << v;
    while (stack) {
      int x = std::countr_zero(stack);
      stack &= stack - 1;
      uint32_t nb = adj_[x];
      result |= nb & ~s;
      uint32_t inner = nb & s & ~visited;
      visited |= inner;
      stack |= inner;
    }
    return result & ~(1u << v);
  }

  bool dfs(uint32_t s, std::vector<Vertex>& order) {
    uint32_t rest = all_ & ~s;
    if (std::popcount(rest) <= k_ + 1) {
      for (uint32_t r = rest; r; r &= r - 1) order.push_back(std::countr_zero(r));
      return true;
    }
    if (failed_.count(s)) return false;
    for (uint32_t r = rest; r; r &= r - 1) {
      int v = std::countr_zero(r);
      if (std::popcount(q_set(s, v)) > k_) continue;
      order.push_back(v);
      if (dfs(s | (1u << v), order)) return true;
      order.pop_back();
    }
    failed_.insert(s);
    return false;
  }

  int n_;
  std::vector<uint32_t> adj_;
  uint32_t all_ = 0;
  int k_ = 0;
  std::unordered_set<uint32_t> failed_;
};

}  // namespace

TwResult treewidth_upper_bound(const Graph& g) {
  const int n = g.n();
  FillGraph fg(g);
  std::vector<long> fill(n);
  for (int v = 0; v < n; ++v) fill[v] = fg.fill(v);
  std::vector<Vertex> order;
  std::vector<int> stamp(n, -1);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (fg.alive(v) && (best < 0 || fill[v] < fill[best])) best = v;
    auto nb = fg.neighbors(best);
    fg.eliminate(best);
    order.push_back(best);
    std::vector<int> touched;
    for (int a : nb) {
      if (stamp[a] != step) {
        stamp[a] = step;
        touched.push_back(a);
      }
      for (int b : fg.neighbors(a)) {
        if (stamp[b] != step) {
          stamp[b] = step;
          touched.push_back(b);
        }
      }
    }
    for (int a : touched) fill[a] = fg.fill(a);
  }
  TwResult r;
  r.td = td_from_elimination(g, order);
  r.width = std::max(r.td.width(), n == 0 ? -1 : 0);
  return r;
}

int treewidth_lower_bound(const Graph& g) {
  const int n = g.n();
  if (n == 0) return -1;
  FillGraph fg(g);
  int lb = 0;
  for (int step = 0; step < n; ++step) {
    int v = -1;
    for (int x = 0; x < n; ++x)
      if (fg.alive(x) && (v < 0 || fg.degree(x) < fg.degree(v))) v = x;
    lb = std::max(lb, fg.degree(v));
    if (fg.degree(v) == 0) {
      fg.remove(v);
      continue;
    }
    int u = -1;
    for (int w : fg.neighbors(v))
      if (u < 0 || fg.degree(w) < fg.degree(u)) u = w;
    fg.contract(v, u);
  }
  return lb;
}

TwResult exact_treewidth(const Graph& g, int max_vertices) {
  if (g.n() > max_vertices || g.n() > 30)
    throw LimitExceeded("exact treewidth limited to " + std::to_string(std::min(max_vertices, 30)) + " vertices");
  TwResult best = treewidth_upper_bound(g);
  if (g.n() == 0) return best;
  ExactSearch search(g);
  std::vector<Vertex> order;
  for (int k = std::max(0, treewidth_lower_bound(g)); k < best.width; ++k) {
    if (search.decide(k, order)) {
      best.td = td_from_elimination(g, order);
      best.width = best.td.width();
      if (best.width != k) throw InternalError("exact treewidth certificate has the wrong width");
      break;
    }
  }
  return best;
}

}  // namespace rcd
