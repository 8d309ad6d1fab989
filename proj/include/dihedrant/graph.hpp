#ifndef DIHEDRANT_GRAPH_HPP
#define DIHEDRANT_GRAPH_HPP

#include <cassert>
#include <vector>

#include "dihedrant/bitset.hpp"

namespace dihedrant {

// Simple undirected graph with per-vertex neighbor bitsets.
class Graph {
public:
  Graph() = default;
  explicit Graph(int nv) : adj_(nv, Bitset(nv)) {}

  int num_vertices() const { return (int)adj_.size(); }

  void add_edge(int u, int v) {
    assert(u != v);
    adj_[u].set(v);
    adj_[v].set(u);
  }

  bool adjacent(int u, int v) const { return adj_[u].test(v); }
  const Bitset& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }

  int num_edges() const {
    int total = 0;
    for (auto& row : adj_) total += row.count();
    return total / 2;
  }

  bool operator==(const Graph& o) const = default;

private:
  std::vector<Bitset> adj_;
};

}  // namespace dihedrant

#endif
