#include "rcd/dot.hpp"

#include <sstream>

namespace rcd {
namespace {

constexpr const char* kPalette[] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00",
                                    "#ffff33", "#a65628", "#f781bf", "#999999"};

void edges(std::ostringstream& os, const Graph& g) {
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
}

}  // namespace

std::string to_dot(const Graph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (Vertex v = 0; v < g.n(); ++v) os << "  " << v << ";\n";
  edges(os, g);
  os << "}\n";
  return os.str();
}

std::string to_dot(const Rcd& rcd) {
  std::vector<int> cls(rcd.graph.n(), -1);
  for (int i = 0; i < rcd.p; ++i)
    for (Vertex v : rcd.classes[i]) cls[v] = i;
  std::ostringstream os;
  os << "graph Rcd {\n  node [style=filled];\n";
  for (Vertex v = 0; v < rcd.graph.n(); ++v) {
    const char* color = cls[v] < 0 ? "white" : kPalette[cls[v] % std::size(kPalette)];
    os << "  " << v << " [fillcolor=\"" << color << "\"";
    if (cls[v] >= 0) os << ", tooltip=\"Z" << cls[v] + 1 << "\"";
    os << "];\n";
  }
  edges(os, rcd.graph);
  os << "}\n";
  return os.str();
}

std::string to_dot(const TreeDecomposition& td) {
  std::ostringstream os;
  os << "graph TD {\n  node [shape=box];\n";
  for (int t = 0; t < td.size(); ++t) {
    os << "  " << t << " [label=\"";
    for (std::size_t i = 0; i < td.bag(t).size(); ++i) os << (i ? " " : "") << td.bag(t)[i];
    os << "\"];\n";
  }
  for (int t = 0; t < td.size(); ++t)
    if (td.parent(t) >= 0) os << "  " << td.parent(t) << " -- " << t << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace rcd
