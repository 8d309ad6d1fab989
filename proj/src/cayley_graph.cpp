#include "dihedrant/cayley_graph.hpp"

namespace dihedrant {

CayleyGraph::CayleyGraph(const ConnectionSet& s) : set_(s), graph_(s.group().order()) {
  const auto& g = s.group();
  auto elems = s.elements();
  for (int x = 0; x < g.order(); ++x)
    for (auto& e : elems) {
      int y = g.index_of(g.mul(e, g.element_at(x)));
      if (y != x) graph_.add_edge(x, y);
    }
}

static bool vertex_map_preserves_adjacency(const Graph& graph, const Perm& p) {
  int nv = graph.num_vertices();
  for (int v = 0; v < nv; ++v) {
    Bitset mapped(nv);
    graph.neighbors(v).for_each([&](int w) { mapped.set(p[w]); });
    if (!(mapped == graph.neighbors(p[v]))) return false;
  }
  return true;
}

bool inversion_map_is_graph_automorphism(const CayleyGraph& gamma) {
  const auto& g = gamma.group();
  std::vector<uint32_t> img(g.order());
  for (int i = 0; i < g.order(); ++i)
    img[i] = (uint32_t)g.index_of(g.inverse(g.element_at(i)));
  return vertex_map_preserves_adjacency(gamma.graph(), Perm(std::move(img)));
}

bool left_regular_in_aut(const CayleyGraph& gamma) {
  const auto& g = gamma.group();
  return vertex_map_preserves_adjacency(gamma.graph(), g.left_regular({1, 0})) &&
         vertex_map_preserves_adjacency(gamma.graph(), g.left_regular({0, 1}));
}

}  // namespace dihedrant
