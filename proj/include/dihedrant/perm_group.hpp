#ifndef DIHEDRANT_PERM_GROUP_HPP
#define DIHEDRANT_PERM_GROUP_HPP

#include <cstdint>
#include <deque>
#include <optional>
#include <utility>
#include <vector>

#include "dihedrant/errors.hpp"
#include "dihedrant/factored_int.hpp"
#include "dihedrant/graph.hpp"
#include "dihedrant/perm.hpp"

namespace dihedrant {

// Deterministic stabilizer chain: base points are taken from the requested
// prefix first, then lowest-index moved points. Transversal entries are never
// rebuilt once computed, so processed Schreier generators stay valid while
// the chain grows.
class StabChain {
public:
  StabChain(int degree, const std::vector<Perm>& gens, const std::vector<int>& base_prefix = {});

  int degree() const { return degree_; }
  size_t num_levels() const { return levels_.size(); }
  int base_point(size_t level) const { return levels_[level].beta; }
  size_t orbit_size(size_t level) const { return levels_[level].orbit.size(); }
  const std::vector<Perm>& level_gens(size_t level) const { return levels_[level].gens; }

  FactoredInteger order() const;
  // Order contributed by levels at index >= from.
  FactoredInteger order_from_level(size_t from) const;

  // Strips g through the chain starting at the given level; returns the
  // residue and the level it dropped out at (num_levels() if it fixed every
  // base point).
  std::pair<Perm, size_t> sift(const Perm& g, size_t from = 0) const;

  bool contains(const Perm& g) const;

  // All strong generators at levels >= from (they fix the first `from` base
  // points pointwise).
  std::vector<Perm> strong_gens_from_level(size_t from) const;

private:
  struct Level {
    int beta = -1;
    std::vector<Perm> gens;
    std::vector<int> orbit;            // BFS order; orbit[0] == beta
    std::vector<int> orbit_slot;       // point -> index+1 into orbit, 0 if absent
    std::vector<Perm> transversal;     // u with beta^u == orbit[i]
    std::vector<Perm> transversal_inv;
    size_t orbit_scanned = 0;   // orbit prefix already expanded with all gens
    size_t done_orbit_gens = 0; // gens prefix already applied to that prefix
    size_t done_points = 0;     // Schreier pairs queued: orbit x gens prefix
    size_t done_gens = 0;
    std::deque<std::pair<uint32_t, uint32_t>> pending;  // (orbit idx, gen idx)
  };

  void extend_orbit(Level& lv);
  void add_base_point(int point);
  // Drains the level's pending Schreier pairs. Returns the level a fresh
  // strong generator was appended to, or nullopt once the level is clean.
  std::optional<size_t> process_level(size_t i);

  int degree_;
  std::vector<Level> levels_;
};

// Finite permutation group given by generators, with a lazily built chain.
class PermutationGroup {
public:
  PermutationGroup(int degree, std::vector<Perm> generators);

  // Forces the given points to head the base, in order.
  static PermutationGroup with_base_prefix(int degree, std::vector<Perm> generators,
                                           std::vector<int> prefix);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const StabChain& chain() const;

  FactoredInteger order() const { return chain().order(); }
  bool contains(const Perm& g) const;
  bool is_trivial() const;

  // Pointwise stabilizer of v as a new group.
  PermutationGroup point_stabilizer(int v) const;

private:
  int degree_;
  std::vector<Perm> gens_;
  std::vector<int> base_prefix_;
  mutable std::optional<StabChain> chain_;
};

std::vector<int> orbit_of_point(const std::vector<Perm>& gens, int point);
// Orbit partition cells, each sorted, ordered by least member.
std::vector<std::vector<int>> orbit_partition(const std::vector<Perm>& gens, int degree);
bool is_transitive(const std::vector<Perm>& gens, int degree);

// Orbit of a tuple under the componentwise action; throws ResourceLimitError
// when the orbit exceeds the cap.
std::vector<std::vector<int>> orbit_of_tuple(const std::vector<Perm>& gens,
                                             const std::vector<int>& tuple, uint64_t cap);

// True if <H_gens> is normalized by every generator of g.
bool is_normal(const std::vector<Perm>& h_gens, const PermutationGroup& g);

// Finest block system of a transitive group in which the two seed points
// share a block; cells sorted, ordered by least member.
std::vector<std::vector<int>> minimal_block_system_for_pair(const std::vector<Perm>& gens,
                                                            int degree, int a, int b);

// All minimal nontrivial block systems of a transitive group. Throws if the
// group is intransitive.
std::vector<std::vector<std::vector<int>>> minimal_block_systems(const PermutationGroup& g);

// Transitive with no nontrivial block system. Throws on intransitive input.
bool is_primitive(const PermutationGroup& g);

// Transitive and of order equal to the degree. If a domain subset is given,
// it must be invariant, and the test applies to the restricted action.
bool is_regular_on(const PermutationGroup& g,
                   const std::optional<std::vector<int>>& domain = std::nullopt);

// Restriction of gens to an invariant subset (throws if not invariant);
// points are renumbered by their position in `domain`.
std::vector<Perm> restrict_to_domain(const std::vector<Perm>& gens,
                                     const std::vector<int>& domain);

// Kernel and image of the action of g on labels 0..num_labels-1 given by
// label_of (one label per domain point). Every generator must map label
// classes to label classes.
struct ActionDecomposition {
  PermutationGroup image;          // degree num_labels
  std::vector<Perm> kernel_gens;   // degree of g
  FactoredInteger kernel_order;
};
ActionDecomposition decompose_action(const PermutationGroup& g,
                                     const std::vector<int>& label_of, int num_labels);

// Number of s-arcs (walks v0..vs with consecutive vertices adjacent and
// v_{j-1} != v_{j+1}).
uint64_t count_s_arcs(const Graph& graph, int s);

// G must act on the graph's vertices by automorphisms.
bool is_transitive_on_arcs(const Graph& graph, const PermutationGroup& g,
                           const Limits& limits = {});
bool is_s_arc_transitive(const Graph& graph, const PermutationGroup& g, int s,
                         const Limits& limits = {});

// Vertex-transitive (throws otherwise) and the vertex stabilizer is
// transitive on both the distance-1 and distance-2 shells.
bool is_2_distance_transitive(const Graph& graph, const PermutationGroup& g);

}  // namespace dihedrant

#endif
