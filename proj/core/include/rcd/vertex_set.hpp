#pragma once

#include <algorithm>
#include <vector>

namespace rcd {

using Vertex = int;
// Sorted, duplicate free.
using VertexSet = std::vector<Vertex>;

inline void normalize(VertexSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

inline VertexSet normalized(VertexSet s) {
  normalize(s);
  return s;
}

inline bool has(const VertexSet& s, Vertex v) {
  return std::binary_search(s.begin(), s.end(), v);
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool intersects(const VertexSet& a, const VertexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return true;
    }
  }
  return false;
}

inline bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline std::vector<char> to_mask(int n, const VertexSet& s) {
  std::vector<char> m(n, 0);
  for (Vertex v : s) m[v] = 1;
  return m;
}

inline VertexSet from_mask(const std::vector<char>& m) {
  VertexSet s;
  for (int v = 0; v < static_cast<int>(m.size()); ++v)
    if (m[v]) s.push_back(v);
  return s;
}

}  // namespace rcd
