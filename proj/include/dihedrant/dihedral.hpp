#ifndef DIHEDRANT_DIHEDRAL_HPP
#define DIHEDRANT_DIHEDRAL_HPP

#include <compare>
#include <string>
#include <vector>

#include "dihedrant/perm.hpp"

namespace dihedrant {

// Element a^rot * b^refl of the dihedral group of order 2n, where a is the
// rotation of order n, b a reflection, and b*a*b = a^-1. rot is reduced mod n;
// refl is 0 or 1.
struct DihedralElement {
  int rot = 0;
  int refl = 0;
  auto operator<=>(const DihedralElement&) const = default;
};

// Text form: rotations "r<i>" (a^i), reflections "f<i>" (a^i * b).
std::string element_token(const DihedralElement& e);
DihedralElement parse_element_token(const std::string& token, int n);

class DihedralGroup {
public:
  // n >= 2; group order is 2n. Vertex indexing used everywhere: a^i -> i,
  // a^i*b -> n+i.
  explicit DihedralGroup(int n);

  int n() const { return n_; }
  int order() const { return 2 * n_; }

  DihedralElement make(int rot, int refl) const;
  DihedralElement identity() const { return {0, 0}; }

  DihedralElement mul(const DihedralElement& x, const DihedralElement& y) const;
  DihedralElement inverse(const DihedralElement& x) const;
  // x^g = g^-1 * x * g
  DihedralElement conjugate(const DihedralElement& x, const DihedralElement& g) const;
  DihedralElement power(const DihedralElement& x, int k) const;

  int element_order(const DihedralElement& x) const;

  // Closed-form conjugacy class, sorted by vertex index.
  std::vector<DihedralElement> conjugacy_class(const DihedralElement& x) const;
  // All classes, identity class first, then by least member index.
  std::vector<std::vector<DihedralElement>> all_conjugacy_classes() const;

  int index_of(const DihedralElement& e) const;
  DihedralElement element_at(int index) const;

  // x -> x*g and x -> g^-1*x as permutations of the vertex indices.
  Perm right_regular(const DihedralElement& g) const;
  Perm left_regular(const DihedralElement& g) const;

  bool operator==(const DihedralGroup&) const = default;

private:
  int n_;
};

// Automorphism a -> a^rotation_power, b -> a^reflection_offset * b, with
// gcd(rotation_power, n) = 1. These n*phi(n) maps form the full automorphism
// group for n >= 3.
struct GroupAutomorphism {
  int rotation_power = 1;    // j
  int reflection_offset = 0; // i

  DihedralElement apply(const DihedralElement& x, int n) const;
  // this followed by o
  GroupAutomorphism compose(const GroupAutomorphism& o, int n) const;
  bool operator==(const GroupAutomorphism&) const = default;
};

// All automorphisms of the order-2n dihedral group. Throws for n == 2: that
// group is Klein's four-group and its automorphism group is not of this shape.
std::vector<GroupAutomorphism> all_group_automorphisms(int n);

}  // namespace dihedrant

#endif
