#ifndef DIHEDRANT_CAYLEY_GRAPH_HPP
#define DIHEDRANT_CAYLEY_GRAPH_HPP

#include "dihedrant/connection_set.hpp"
#include "dihedrant/graph.hpp"

namespace dihedrant {

// Cayley graph on the dihedral group: x ~ y iff y * x^-1 is in S, so the
// neighborhood of x is S*x. Vertices follow the group's element indexing.
class CayleyGraph {
public:
  explicit CayleyGraph(const ConnectionSet& s);

  int n() const { return set_.n(); }
  const ConnectionSet& connection_set() const { return set_; }
  const DihedralGroup& group() const { return set_.group(); }
  const Graph& graph() const { return graph_; }

  int vertex_of(const DihedralElement& e) const { return group().index_of(e); }
  DihedralElement element_of(int v) const { return group().element_at(v); }

private:
  ConnectionSet set_;
  Graph graph_;
};

// The map x -> x^-1 on vertices preserves adjacency.
bool inversion_map_is_graph_automorphism(const CayleyGraph& gamma);

// The left-regular copy of the group preserves adjacency (checked on the two
// group generators; left multiplication is a homomorphism into Sym(V), so
// that covers the whole copy).
bool left_regular_in_aut(const CayleyGraph& gamma);

}  // namespace dihedrant

#endif
