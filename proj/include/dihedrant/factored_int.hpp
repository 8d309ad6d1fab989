#ifndef DIHEDRANT_FACTORED_INT_HPP
#define DIHEDRANT_FACTORED_INT_HPP

#include <cassert>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace dihedrant {

// Positive integer kept as a prime factorization. Group orders here reach
// 2^158, far past any machine word, and they are only ever built from small
// factors (orbit sizes), so a prime -> exponent map is exact and cheap.
class FactoredInteger {
public:
  FactoredInteger() = default;  // one

  static FactoredInteger from_integer(uint64_t v) {
    if (v == 0) throw std::invalid_argument("FactoredInteger: zero has no factorization");
    FactoredInteger r;
    for (uint64_t p = 2; p * p <= v; ++p)
      while (v % p == 0) {
        r.exp_[p] += 1;
        v /= p;
      }
    if (v > 1) r.exp_[v] += 1;
    return r;
  }

  static FactoredInteger prime_power(uint64_t p, uint32_t e) {
    FactoredInteger r;
    if (e) r.exp_[p] = e;
    return r;
  }

  static FactoredInteger factorial(uint32_t k) {
    FactoredInteger r;
    for (uint32_t i = 2; i <= k; ++i) r *= from_integer(i);
    return r;
  }

  bool is_one() const { return exp_.empty(); }

  FactoredInteger& operator*=(const FactoredInteger& o) {
    for (auto& [p, e] : o.exp_) exp_[p] += e;
    return *this;
  }
  friend FactoredInteger operator*(FactoredInteger a, const FactoredInteger& b) {
    return a *= b;
  }

  // Exact division; throws if the divisor does not divide this value.
  FactoredInteger& operator/=(const FactoredInteger& o) {
    for (auto& [p, e] : o.exp_) {
      auto it = exp_.find(p);
      if (it == exp_.end() || it->second < e)
        throw std::invalid_argument("FactoredInteger: inexact division");
      it->second -= e;
      if (it->second == 0) exp_.erase(it);
    }
    return *this;
  }
  friend FactoredInteger operator/(FactoredInteger a, const FactoredInteger& b) {
    return a /= b;
  }

  bool operator==(const FactoredInteger& o) const = default;

  bool equals_integer(uint64_t v) const { return *this == from_integer(v); }

  // Value as uint64 when it fits.
  std::optional<uint64_t> as_uint64() const {
    unsigned __int128 acc = 1;
    for (auto& [p, e] : exp_)
      for (uint32_t i = 0; i < e; ++i) {
        acc *= p;
        if (acc > UINT64_MAX) return std::nullopt;
      }
    return (uint64_t)acc;
  }

  double log2_value() const {
    double s = 0;
    for (auto& [p, e] : exp_) s += e * std::log2((double)p);
    return s;
  }

  std::string to_string() const {
    if (exp_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (auto& [p, e] : exp_) {
      if (!first) os << " * ";
      first = false;
      os << p;
      if (e > 1) os << "^" << e;
    }
    return os.str();
  }

  const std::map<uint64_t, uint32_t>& exponents() const { return exp_; }

private:
  std::map<uint64_t, uint32_t> exp_;
};

}  // namespace dihedrant

#endif
