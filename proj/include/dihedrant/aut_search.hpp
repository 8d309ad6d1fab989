#ifndef DIHEDRANT_AUT_SEARCH_HPP
#define DIHEDRANT_AUT_SEARCH_HPP

#include <cstdint>
#include <vector>

#include "dihedrant/errors.hpp"
#include "dihedrant/factored_int.hpp"
#include "dihedrant/graph.hpp"
#include "dihedrant/perm.hpp"

namespace dihedrant {

// Ordered partition of the vertex set. Vertices live in `order`; a cell is a
// contiguous run of positions. Splits only ever refine, so a start position
// stays a start position.
class Partition {
public:
  explicit Partition(int n);

  int size() const { return (int)order_.size(); }
  int vertex_at(int position) const { return order_[position]; }
  int position_of(int vertex) const { return pos_[vertex]; }
  int cell_start(int position) const { return cell_start_[position]; }
  int cell_size_at(int start) const { return cell_size_[start]; }
  bool is_discrete() const;

  // Leftmost cell of minimal size > 1; -1 when discrete.
  int target_cell_start() const;
  std::vector<int> cell_members(int start) const;

  // Splits v into a singleton at the head of its cell. Returns the start of
  // the remainder cell (v's own cell start stays where it was).
  int individualize(int v);

  // Cell sizes in left-to-right start order: the node invariant compared
  // across search branches.
  std::vector<int> shape() const;

  // Equitable refinement (neighbor counts against every cell), processing the
  // given seed cells first. Deterministic: FIFO worklist, fragments sorted by
  // neighbor count ascending, stable within a count.
  void refine(const Graph& graph, const std::vector<int>& seed_starts);

private:
  bool split_cell(int start, const std::vector<int>& cnt,
                  std::vector<int>& fragment_starts);

  std::vector<int> order_;
  std::vector<int> pos_;
  std::vector<int> cell_start_;
  std::vector<int> cell_size_;  // valid at start positions only
};

struct AutSearchResult {
  int degree = 0;
  std::vector<Perm> generators;
  FactoredInteger order;
  uint64_t nodes_explored = 0;
};

// Automorphism group via individualization-refinement backtracking with
// orbit pruning. Throws ResourceLimitError past limits.node_cap tree nodes.
AutSearchResult automorphism_group(const Graph& graph, const Limits& limits = {});

bool is_graph_automorphism(const Graph& graph, const Perm& p);

}  // namespace dihedrant

#endif
