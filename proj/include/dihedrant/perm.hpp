#ifndef DIHEDRANT_PERM_HPP
#define DIHEDRANT_PERM_HPP

#include <cassert>
#include <cstdint>
#include <numeric>
#include <vector>

namespace dihedrant {

// Permutation of {0, ..., degree-1} stored as an image array.
// Composition is left-to-right: (p * q) applies p first, then q.
class Perm {
public:
  Perm() = default;
  explicit Perm(int degree) : img_(degree) {
    std::iota(img_.begin(), img_.end(), 0);
  }
  explicit Perm(std::vector<uint32_t> images) : img_(std::move(images)) {
#ifndef NDEBUG
    std::vector<char> seen(img_.size(), 0);
    for (uint32_t v : img_) {
      assert(v < img_.size() && !seen[v]);
      seen[v] = 1;
    }
#endif
  }

  static Perm transposition(int degree, int a, int b) {
    Perm p(degree);
    p.img_[a] = b;
    p.img_[b] = a;
    return p;
  }

  int degree() const { return (int)img_.size(); }
  uint32_t operator[](int x) const { return img_[x]; }
  const std::vector<uint32_t>& images() const { return img_; }

  Perm operator*(const Perm& q) const {
    assert(degree() == q.degree());
    Perm r;
    r.img_.resize(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) r.img_[i] = q.img_[img_[i]];
    return r;
  }

  Perm inverse() const {
    Perm r;
    r.img_.resize(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = (uint32_t)i;
    return r;
  }

  bool is_identity() const {
    for (size_t i = 0; i < img_.size(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  // Lowest moved point, or -1 for the identity.
  int lowest_moved_point() const {
    for (size_t i = 0; i < img_.size(); ++i)
      if (img_[i] != i) return (int)i;
    return -1;
  }

  bool operator==(const Perm& o) const = default;

  size_t hash() const {
    size_t h = 0xcbf29ce484222325ull;
    for (uint32_t v : img_) {
      h ^= v;
      h *= 0x100000001b3ull;
    }
    return h;
  }

private:
  std::vector<uint32_t> img_;
};

struct PermHash {
  size_t operator()(const Perm& p) const { return p.hash(); }
};

}  // namespace dihedrant

#endif
