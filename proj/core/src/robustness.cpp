#include "rcd/robustness.hpp"

#include <algorithm>
#include <random>

#include "rcd/errors.hpp"
#include "rcd/treewidth.hpp"

namespace rcd {
namespace {

VertexSet cut_first(const Graph& g, const VertexSet& z, int s) {
  Subgraph sub = induced_subgraph(g, z);
  const Graph& h = sub.graph;
  int base = static_cast<int>(components(h).size());
  std::vector<std::pair<int, int>> score;  // (-(is cut), -degree) per local vertex
  for (Vertex v = 0; v < h.n(); ++v) {
    std::vector<char> alive(h.n(), 1);
    alive[v] = 0;
    bool cut = static_cast<int>(components(h, alive).size()) > base - (h.degree(v) == 0 ? 1 : 0);
    score.emplace_back(cut ? 0 : 1, -h.degree(v));
  }
  std::vector<Vertex> idx(h.n());
  for (Vertex v = 0; v < h.n(); ++v) idx[v] = v;
  std::stable_sort(idx.begin(), idx.end(), [&](Vertex a, Vertex b) { return score[a] < score[b]; });
  VertexSet out;
  for (int i = 0; i < s && i < h.n(); ++i) out.push_back(sub.to_parent[idx[i]]);
  normalize(out);
  return out;
}

}  // namespace

RobustnessReport verify_rcd(const Graph& g, const Rcd& rcd, const RobustnessOptions& opt) {
  if (rcd.p < 1 || static_cast<int>(rcd.classes.size()) != rcd.p) throw InvalidInput("malformed decomposition");
  RobustnessReport rep;
  rep.threshold = opt.threshold;
  std::mt19937_64 rng(opt.seed);
  for (int k = 0; k < opt.samples; ++k) {
    RobustnessSample s;
    s.cls = k < rcd.p ? k : static_cast<int>(rng() % rcd.p);
    const VertexSet& z = rcd.classes[s.cls];
    if (k >= rcd.p && !z.empty()) {
      int cap = std::min<int>(opt.s_max, static_cast<int>(z.size()));
      int size = static_cast<int>(rng() % (cap + 1));
      if (opt.strategy == ZPrimeStrategy::Cut) {
        s.zprime = cut_first(g, z, size);
      } else {
        std::vector<Vertex> pool = z;
        std::shuffle(pool.begin(), pool.end(), rng);
        s.zprime.assign(pool.begin(), pool.begin() + size);
        normalize(s.zprime);
      }
    }
    QuotientMap q = contract_set(g, set_minus(z, s.zprime));
    s.contracted_n = q.target.n();
    s.tw_upper = treewidth_upper_bound(q.target).width;
    int bound = s.tw_upper;
    if (q.target.n() <= opt.exact_limit) {
      s.tw_exact = exact_treewidth(q.target, opt.exact_limit).width;
      bound = s.tw_exact;
    }
    s.ratio = static_cast<double>(bound) / (rcd.p + static_cast<int>(s.zprime.size()) + 1);
    rep.max_ratio = std::max(rep.max_ratio, s.ratio);
    rep.samples.push_back(std::move(s));
  }
  rep.pass = rep.max_ratio <= opt.threshold;
  return rep;
}

}  // namespace rcd
