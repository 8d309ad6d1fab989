#ifndef DIHEDRANT_CONNECTION_SET_HPP
#define DIHEDRANT_CONNECTION_SET_HPP

#include <map>
#include <string>
#include <vector>

#include "dihedrant/bitset.hpp"
#include "dihedrant/dihedral.hpp"

namespace dihedrant {

// Identity-free, inverse-closed subset of a dihedral group, stored as a
// bitset over the vertex indexing. Group order is capped at 4096 vertices.
class ConnectionSet {
public:
  explicit ConnectionSet(int n);

  int n() const { return n_; }
  const DihedralGroup& group() const { return group_; }

  // Inserts e together with its inverse. Rejects the identity.
  void insert_with_inverse(const DihedralElement& e);
  // Inserts the full conjugacy classes of e and e^-1.
  void insert_class_closure(const DihedralElement& e);

  bool contains(const DihedralElement& e) const { return members_.test(group_.index_of(e)); }
  int size() const { return members_.count(); }
  bool empty() const { return members_.none(); }

  const Bitset& members() const { return members_; }
  std::vector<DihedralElement> elements() const;  // sorted by vertex index
  std::vector<std::string> tokens() const;

  bool operator==(const ConnectionSet& o) const = default;
  size_t hash() const { return members_.hash() * 31 + (size_t)n_; }

private:
  int n_;
  DihedralGroup group_;
  Bitset members_;
};

// Union of the conjugacy classes of the given representatives and of their
// inverses. Throws if a representative is the identity.
ConnectionSet from_class_reps(int n, const std::vector<DihedralElement>& reps);

// Inverse-closure of the given elements. Throws on the identity.
ConnectionSet from_raw_elements(int n, const std::vector<DihedralElement>& elems);

// --- Named families ---------------------------------------------------------
//
// The complete-bipartite families (giving K_{n,n}):
//   variant 1: all n reflections (any n)
//   variant 2: even-exponent reflections + odd rotations (n even)
//   variant 3: odd-exponent reflections + odd rotations (n even)
ConnectionSet family_knn(int n, int variant);

// K_{n,n} minus a perfect matching, for n = 2k with k >= 3 odd:
//   variant 1: even-exponent reflections + odd rotations except a^k
//   variant 2: odd-exponent reflections + odd rotations except a^k
ConnectionSet family_knn_minus_matching(int n, int variant);

// Everything but the identity (complete graph on 2n vertices).
ConnectionSet family_complete(int n);

// Complement of the order-t subgroup of the rotation subgroup; gives the
// complete multipartite graph with 2n/t parts of size t. Needs t | n, t >= 2,
// and 2n/t >= 3.
ConnectionSet family_multipartite(int n, int t);

// The coprime-rotation family on the order-8p group (n = 4p, p an odd prime):
// the reflection class of a^pi*b plus all rotations a^i with gcd(i, 4p) = 1.
ConnectionSet family_thm14(int p, int pi);

// The two n = 30 showcase sets: reflections of one parity plus rotation class
// unions O1 u O3 (the "S" set, 25 elements) or O2 u O3 (the "R" set, 27
// elements), where O1 = {a^5, a^25}, O2 = {a^3, a^9, a^21, a^27} and O3 is
// all coprime rotations.
ConnectionSet family_ex44_S(int pi);
ConnectionSet family_ex44_R(int pi);

// Same construction at n = 42: O1 = {a^7, a^35}, O2 = {a^3, a^9, a^15, a^27,
// a^33, a^39}, O3 = coprime rotations; |S| = 35, |R| = 39.
ConnectionSet family_ex45_S(int pi);
ConnectionSet family_ex45_R(int pi);

// Generic bipartite girth-4 candidate: reflection class of a^pi*b plus a
// class-closed set delta of odd rotations, 0 < |delta| <= n/2 - 2.
ConnectionSet family_case_v(int n, int pi, const std::vector<DihedralElement>& delta);

// --- Spec strings ------------------------------------------------------------
//
// Grammar:  n=INT; S=body
//           body := classes(tok, ...) | raw(tok, ...) | family(NAME, k=v, ...)
//           tok  := r<INT> | f<INT>
// classes() takes class representatives, raw() arbitrary elements (inverses
// added), family() one of: knn_v1, knn_v2, knn_v3, knn_minus_matching_v1,
// knn_minus_matching_v2, complete, multipartite, thm14, ex44_S, ex44_R,
// ex45_S, ex45_R, caseV. The caseV delta value is a '+'-separated token list.
struct ParsedSpec {
  int n = 0;
  ConnectionSet set;
  std::string family;  // empty for classes()/raw()
};
ParsedSpec parse_connection_spec(const std::string& text);

// Dispatch by family name, shared by the DSL and the CLI.
ConnectionSet build_family(int n, const std::string& name,
                           const std::map<std::string, std::string>& params);

// Automorphisms of the group fixing S setwise.
std::vector<GroupAutomorphism> aut_G_S(const ConnectionSet& s);

// S is closed under conjugation (checked against the group generators).
bool is_inner_automorphic(const ConnectionSet& s);

// <S> is the whole group.
bool is_connected(const ConnectionSet& s);

// Pointwise image of S under a group automorphism.
ConnectionSet apply_group_automorphism(const ConnectionSet& s, const GroupAutomorphism& phi);

}  // namespace dihedrant

#endif
