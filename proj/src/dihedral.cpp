#include "dihedrant/dihedral.hpp"

#include <numeric>
#include <stdexcept>

namespace dihedrant {

static int mod(int v, int n) {
  int r = v % n;
  return r < 0 ? r + n : r;
}

std::string element_token(const DihedralElement& e) {
  return (e.refl ? "f" : "r") + std::to_string(e.rot);
}

DihedralElement parse_element_token(const std::string& token, int n) {
  if (token.size() < 2 || (token[0] != 'r' && token[0] != 'f'))
    throw std::invalid_argument("bad element token '" + token + "' (expected r<i> or f<i>)");
  for (size_t i = 1; i < token.size(); ++i)
    if (token[i] < '0' || token[i] > '9')
      throw std::invalid_argument("bad element token '" + token + "' (expected r<i> or f<i>)");
  long v = std::stol(token.substr(1));
  return {mod((int)(v % n), n), token[0] == 'f' ? 1 : 0};
}

DihedralGroup::DihedralGroup(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("dihedral group needs n >= 2");
}

DihedralElement DihedralGroup::make(int rot, int refl) const {
  return {mod(rot, n_), refl & 1};
}

DihedralElement DihedralGroup::mul(const DihedralElement& x, const DihedralElement& y) const {
  // (a^i b^e)(a^j b^d) = a^(i + j or i - j) b^(e xor d): b conjugates a to a^-1.
  int rot = x.refl ? x.rot - y.rot : x.rot + y.rot;
  return {mod(rot, n_), x.refl ^ y.refl};
}

DihedralElement DihedralGroup::inverse(const DihedralElement& x) const {
  if (x.refl) return x;
  return {mod(-x.rot, n_), 0};
}

DihedralElement DihedralGroup::conjugate(const DihedralElement& x, const DihedralElement& g) const {
  return mul(mul(inverse(g), x), g);
}

DihedralElement DihedralGroup::power(const DihedralElement& x, int k) const {
  if (x.refl) return (k % 2 == 0) ? identity() : x;
  long r = (long)x.rot * k % n_;
  return {mod((int)r, n_), 0};
}

int DihedralGroup::element_order(const DihedralElement& x) const {
  if (x.refl) return 2;
  if (x.rot == 0) return 1;
  return n_ / std::gcd(n_, x.rot);
}

std::vector<DihedralElement> DihedralGroup::conjugacy_class(const DihedralElement& x) const {
  // Rotations pair up with their inverses; reflections split by exponent
  // parity for even n and form a single class for odd n.
  if (!x.refl) {
    int inv = mod(-x.rot, n_);
    if (inv == x.rot) return {{x.rot, 0}};
    if (inv < x.rot) return {{inv, 0}, {x.rot, 0}};
    return {{x.rot, 0}, {inv, 0}};
  }
  std::vector<DihedralElement> c;
  int start = (n_ % 2 == 1) ? 0 : x.rot % 2;
  int step = (n_ % 2 == 1) ? 1 : 2;
  for (int i = start; i < n_; i += step) c.push_back({i, 1});
  return c;
}

std::vector<std::vector<DihedralElement>> DihedralGroup::all_conjugacy_classes() const {
  std::vector<std::vector<DihedralElement>> out;
  std::vector<char> seen(2 * n_, 0);
  for (int idx = 0; idx < 2 * n_; ++idx) {
    if (seen[idx]) continue;
    auto cls = conjugacy_class(element_at(idx));
    for (auto& e : cls) seen[index_of(e)] = 1;
    out.push_back(std::move(cls));
  }
  return out;
}

int DihedralGroup::index_of(const DihedralElement& e) const {
  return e.refl ? n_ + e.rot : e.rot;
}

DihedralElement DihedralGroup::element_at(int index) const {
  if (index < n_) return {index, 0};
  return {index - n_, 1};
}

Perm DihedralGroup::right_regular(const DihedralElement& g) const {
  std::vector<uint32_t> img(2 * n_);
  for (int i = 0; i < 2 * n_; ++i)
    img[i] = (uint32_t)index_of(mul(element_at(i), g));
  return Perm(std::move(img));
}

Perm DihedralGroup::left_regular(const DihedralElement& g) const {
  std::vector<uint32_t> img(2 * n_);
  auto gi = inverse(g);
  for (int i = 0; i < 2 * n_; ++i)
    img[i] = (uint32_t)index_of(mul(gi, element_at(i)));
  return Perm(std::move(img));
}

DihedralElement GroupAutomorphism::apply(const DihedralElement& x, int n) const {
  // a^r b^e -> a^(j*r + e*i) b^e
  long rot = (long)rotation_power * x.rot + (x.refl ? reflection_offset : 0);
  return {mod((int)(rot % n), n), x.refl};
}

GroupAutomorphism GroupAutomorphism::compose(const GroupAutomorphism& o, int n) const {
  // apply this, then o: a -> a^(j1 j2); b -> a^(i1 j2 + i2) b
  GroupAutomorphism r;
  r.rotation_power = mod((int)((long)rotation_power * o.rotation_power % n), n);
  r.reflection_offset =
      mod((int)(((long)reflection_offset * o.rotation_power + o.reflection_offset) % n), n);
  return r;
}

std::vector<GroupAutomorphism> all_group_automorphisms(int n) {
  if (n < 3)
    throw std::invalid_argument(
        "automorphism enumeration requires n >= 3 (the n = 2 group is Klein's four-group)");
  std::vector<GroupAutomorphism> out;
  for (int j = 1; j < n; ++j) {
    if (std::gcd(j, n) != 1) continue;
    for (int i = 0; i < n; ++i) out.push_back({j, i});
  }
  return out;
}

}  // namespace dihedrant
