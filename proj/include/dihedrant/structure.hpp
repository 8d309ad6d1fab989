#ifndef DIHEDRANT_STRUCTURE_HPP
#define DIHEDRANT_STRUCTURE_HPP

#include <optional>
#include <string>
#include <vector>

#include "dihedrant/aut_search.hpp"
#include "dihedrant/cayley_graph.hpp"
#include "dihedrant/connection_set.hpp"
#include "dihedrant/errors.hpp"
#include "dihedrant/factored_int.hpp"
#include "dihedrant/graph_metrics.hpp"
#include "dihedrant/perm_group.hpp"

namespace dihedrant {

enum class OutcomeKind {
  Disconnected,
  NotInnerAutomorphic,
  CaseI,    // complete bipartite K_{n,n}
  CaseII,   // K_{n,n} minus a perfect matching
  CaseIII,  // complete K_{2n}
  CaseIV,   // complete multipartite K_{m[t]}
  CaseV,    // one reflection class plus a small odd-rotation set
  NotArcTransitive,
};

std::string outcome_name(OutcomeKind kind);

struct ClassificationOutcome {
  OutcomeKind kind;
  int variant = 0;            // CaseI/CaseII: which standard generating set matched
  int parts = 0;              // CaseIV: m
  int part_size = 0;          // CaseIV: t
  int pi = -1;                // CaseV: reflection class parity
  std::vector<int> delta;     // CaseV: rotation exponents in S, sorted
  bool arc_transitive = false;  // CaseV: computed with the full Aut group
};

// Decides the structural case of Cay(D_2n, S) in a fixed order. Shape tests
// are cheap; only CaseV and the fallthrough branch run the automorphism
// engine (CaseV to fill arc_transitive, the fallthrough to confirm the graph
// is genuinely not arc-transitive). A connected class-closed arc-transitive
// graph matching no case would throw std::logic_error.
ClassificationOutcome classify(const ConnectionSet& s, const Limits& limits = {});

// Shape tests only: CaseV.arc_transitive is left false and NotArcTransitive
// means just "matches no case shape". Never runs the automorphism engine.
ClassificationOutcome classify_shape(const ConnectionSet& s);

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CheckList {
  std::vector<Check> checks;
  bool all_pass() const;
  void add(std::string name, bool pass, std::string detail = "");
};

// Exact-set property suite for a CaseV connection set: girth 4, diameter 3,
// parity bipartition, and closed forms for the distance-2 and distance-3
// shells of the identity vertex.
CheckList verify_case_v(const ConnectionSet& s);

// Orbit partition of right multiplication by the central rotation a^{n/2}:
// n cells {x, x a^{n/2}}. When n % 4 == 0 the cells are parity-pure and get
// tagged into the odd side (side_one) and the even side (side_two).
struct CentralOrbitPartition {
  std::vector<std::vector<int>> cells;  // size-2 cells ordered by least member
  std::vector<int> cell_of;             // vertex -> cell index
  std::vector<int> side_one;            // cell indices, odd rotation exponents
  std::vector<int> side_two;
};
CentralOrbitPartition central_orbit_partition(const DihedralGroup& g);

// Quotient of a graph by a vertex partition, with the cover-multiplicity
// test: does every vertex see exactly r neighbors in each adjacent cell?
struct CoverCheck {
  Graph quotient;
  std::optional<int> multiplicity;  // nullopt when not uniform
  FamilyTag tag;
};
CoverCheck quotient_with_cover_check(const Graph& graph,
                                     const std::vector<std::vector<int>>& cells);

// The 4p cell transpositions for Cay(D_8p, thm14(p, pi)), in t-major order
// (swap of a^{2t+1}b, then a^{2t+1}, then a^{2t}b, then a^{2t} with their
// central translates, for t = 1..p). Their product in this order is right
// multiplication by a^{2p}.
std::vector<Perm> kernel_generators(int p);

// Sub-checks: every transposition is a graph automorphism; the group they
// generate is elementary abelian of order 2^{4p}; the ordered product equals
// right multiplication by a^{2p}; and the group is exactly the kernel of
// Aut acting on the central orbit cells.
CheckList verify_kernel(const ConnectionSet& s, int p, const Limits& limits = {});

// Induced action of Aut on the cells: the side-preserving subgroup restricted
// to the odd side is primitive of order (2p)!, contains a regular dihedral
// image of right multiplication by <a^2, b>, and the full induced action has
// order 2(2p)!.
CheckList verify_quotient_group_structure(const ConnectionSet& s, int p,
                                          const Limits& limits = {});

// Named verification suites behind `verify <name>`.
CheckList verify_thm14(int p, const Limits& limits = {});
CheckList verify_lemma35(int n, const Limits& limits = {});
CheckList verify_lemma42(int p, const Limits& limits = {});
CheckList verify_lemma43(int p, const Limits& limits = {});
CheckList verify_lemma45(int p, const Limits& limits = {});
CheckList verify_cor12(int n, const Limits& limits = {});
CheckList verify_cor13(int n, const Limits& limits = {});
CheckList verify_prop21(int n, bool exhaustive, int samples = 500, uint64_t seed = 1,
                        const Limits& limits = {});

// Every connection set that is a nonempty union of conjugacy classes.
std::vector<ConnectionSet> enumerate_class_closed_sets(int n);

// Every nonempty union of odd-rotation conjugacy classes at even n, in mask
// order over the classes {a^j, a^-j} (j odd ascending). Includes unions past
// the case-(v) size bound |delta| <= n/2 - 2; callers filter.
std::vector<std::vector<DihedralElement>> enumerate_case_v_deltas(int n);

}  // namespace dihedrant

#endif
