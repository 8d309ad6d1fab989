#ifndef DIHEDRANT_BITSET_HPP
#define DIHEDRANT_BITSET_HPP

#include <bit>
#include <cassert>
#include <compare>
#include <cstdint>
#include <vector>

namespace dihedrant {

// Fixed-size bit vector sized at construction. All binary operations require
// equal sizes.
class Bitset {
public:
  Bitset() : size_(0) {}
  explicit Bitset(int size) : words_((size + 63) / 64, 0), size_(size) {
    assert(size >= 0);
  }

  int size() const { return size_; }

  void set(int i) {
    assert(i >= 0 && i < size_);
    words_[i >> 6] |= uint64_t{1} << (i & 63);
  }
  void reset(int i) {
    assert(i >= 0 && i < size_);
    words_[i >> 6] &= ~(uint64_t{1} << (i & 63));
  }
  bool test(int i) const {
    assert(i >= 0 && i < size_);
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  void clear() {
    for (auto& w : words_) w = 0;
  }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool none() const {
    for (uint64_t w : words_)
      if (w) return false;
    return true;
  }

  bool intersects(const Bitset& o) const {
    assert(size_ == o.size_);
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  int count_and(const Bitset& o) const {
    assert(size_ == o.size_);
    int c = 0;
    for (size_t i = 0; i < words_.size(); ++i)
      c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }

  Bitset& operator|=(const Bitset& o) {
    assert(size_ == o.size_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    assert(size_ == o.size_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator^=(const Bitset& o) {
    assert(size_ == o.size_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }

  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

  // Complement within the declared size (tail bits stay zero).
  Bitset complement() const {
    Bitset r(size_);
    for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
    r.trim();
    return r;
  }

  bool operator==(const Bitset& o) const = default;

  // Arbitrary total order, used for grouping equal rows.
  std::strong_ordering operator<=>(const Bitset& o) const {
    assert(size_ == o.size_);
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] != o.words_[i]) return words_[i] <=> o.words_[i];
    return std::strong_ordering::equal;
  }

  // First set bit at index >= from, or -1.
  int next_set(int from) const {
    if (from >= size_) return -1;
    int wi = from >> 6;
    uint64_t w = words_[wi] >> (from & 63);
    if (w) return from + std::countr_zero(w);
    for (wi += 1; wi < (int)words_.size(); ++wi)
      if (words_[wi]) return wi * 64 + std::countr_zero(words_[wi]);
    return -1;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (int i = next_set(0); i >= 0; i = next_set(i + 1)) f(i);
  }

  std::vector<int> to_vector() const {
    std::vector<int> v;
    v.reserve(count());
    for_each([&](int i) { v.push_back(i); });
    return v;
  }

  size_t hash() const {
    size_t h = 0xcbf29ce484222325ull;
    for (uint64_t w : words_) {
      h ^= w;
      h *= 0x100000001b3ull;
    }
    return h;
  }

private:
  void trim() {
    int tail = size_ & 63;
    if (tail && !words_.empty())
      words_.back() &= (uint64_t{1} << tail) - 1;
  }

  std::vector<uint64_t> words_;
  int size_;
};

}  // namespace dihedrant

#endif
