#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "dihedrant/dihedral.hpp"

using namespace dihedrant;

namespace {

// Faithful action on Z_n for n >= 3: a^i shifts by i, b negates. Products
// compose left to right, so this is an independent oracle for mul().
std::vector<int> action_table(const DihedralElement& e, int n) {
  std::vector<int> img(n);
  for (int x = 0; x < n; ++x) {
    int y = (x + e.rot) % n;
    img[x] = e.refl ? (n - y) % n : y;
  }
  return img;
}

std::vector<int> compose_tables(const std::vector<int>& f, const std::vector<int>& g) {
  std::vector<int> out(f.size());
  for (size_t x = 0; x < f.size(); ++x) out[x] = g[f[x]];
  return out;
}

}  // namespace

TEST_CASE("multiplication matches the shift-and-negate action on Z_n") {
  for (int n : {3, 4, 5, 6, 7, 8}) {
    DihedralGroup g(n);
    for (int i = 0; i < 2 * n; ++i)
      for (int j = 0; j < 2 * n; ++j) {
        auto x = g.element_at(i), y = g.element_at(j);
        CHECK(action_table(g.mul(x, y), n) ==
              compose_tables(action_table(x, n), action_table(y, n)));
      }
  }
}

TEST_CASE("fixed products at n = 6") {
  DihedralGroup g(6);
  CHECK(g.mul({1, 1}, {2, 0}) == DihedralElement{5, 1});
  CHECK(g.mul({2, 0}, {1, 1}) == DihedralElement{3, 1});
  CHECK(g.mul({0, 1}, {0, 1}) == g.identity());
  CHECK(g.mul({1, 0}, {5, 0}) == g.identity());
  CHECK(g.mul({2, 1}, {2, 1}) == g.identity());
}

TEST_CASE("inverse and power") {
  for (int n : {3, 4, 6, 7}) {
    DihedralGroup g(n);
    for (int i = 0; i < 2 * n; ++i) {
      auto x = g.element_at(i);
      CHECK(g.mul(x, g.inverse(x)) == g.identity());
      CHECK(g.mul(g.inverse(x), x) == g.identity());
      CHECK(g.power(x, -1) == g.inverse(x));
      auto acc = g.identity();
      for (int k = 0; k <= 5; ++k) {
        CHECK(g.power(x, k) == acc);
        acc = g.mul(acc, x);
      }
    }
  }
}

TEST_CASE("element orders") {
  DihedralGroup g(12);
  CHECK(g.element_order(g.identity()) == 1);
  for (int i = 1; i < 12; ++i) CHECK(g.element_order(g.make(i, 0)) == 12 / std::gcd(12, i));
  for (int i = 0; i < 12; ++i) CHECK(g.element_order(g.make(i, 1)) == 2);
}

TEST_CASE("conjugation") {
  DihedralGroup g(6);
  CHECK(g.conjugate({0, 1}, {1, 0}) == DihedralElement{4, 1});
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j)
      for (int k : {1, 7, 9}) {
        auto x = g.element_at(i), u = g.element_at(j), v = g.element_at(k);
        CHECK(g.conjugate(x, g.mul(u, v)) == g.conjugate(g.conjugate(x, u), v));
      }
}

TEST_CASE("conjugacy classes match brute-force conjugation") {
  for (int n : {3, 4, 5, 6, 7, 8}) {
    DihedralGroup g(n);
    for (int i = 0; i < 2 * n; ++i) {
      auto x = g.element_at(i);
      std::set<int> brute;
      for (int j = 0; j < 2 * n; ++j) brute.insert(g.index_of(g.conjugate(x, g.element_at(j))));
      std::set<int> closed;
      for (auto& y : g.conjugacy_class(x)) closed.insert(g.index_of(y));
      CHECK(closed == brute);
    }
  }
}

TEST_CASE("class lists partition the group") {
  for (int n : {5, 6, 8}) {
    DihedralGroup g(n);
    auto classes = g.all_conjugacy_classes();
    CHECK(classes[0] == std::vector<DihedralElement>{g.identity()});
    std::set<int> all;
    size_t total = 0;
    for (auto& cls : classes) {
      total += cls.size();
      for (auto& e : cls) all.insert(g.index_of(e));
    }
    CHECK(total == (size_t)(2 * n));
    CHECK(all.size() == (size_t)(2 * n));
  }
  CHECK(DihedralGroup(6).all_conjugacy_classes().size() == 6);
  CHECK(DihedralGroup(5).all_conjugacy_classes().size() == 4);
  CHECK(DihedralGroup(8).all_conjugacy_classes().size() == 7);
  CHECK(DihedralGroup(7).all_conjugacy_classes().size() == 5);

  DihedralGroup g6(6);
  auto refl_class = g6.conjugacy_class({0, 1});
  CHECK(refl_class == std::vector<DihedralElement>{{0, 1}, {2, 1}, {4, 1}});
  CHECK(g6.conjugacy_class({3, 0}) == std::vector<DihedralElement>{{3, 0}});
}

TEST_CASE("vertex indexing") {
  DihedralGroup g(7);
  for (int i = 0; i < 7; ++i) {
    CHECK(g.index_of(g.make(i, 0)) == i);
    CHECK(g.index_of(g.make(i, 1)) == 7 + i);
  }
  for (int v = 0; v < 14; ++v) CHECK(g.index_of(g.element_at(v)) == v);
  CHECK_THROWS_AS(DihedralGroup(1), std::invalid_argument);
}

TEST_CASE("element tokens") {
  CHECK(element_token({2, 0}) == "r2");
  CHECK(element_token({3, 1}) == "f3");
  CHECK(element_token({0, 0}) == "r0");
  DihedralGroup g(7);
  for (int v = 0; v < 14; ++v) {
    auto e = g.element_at(v);
    CHECK(parse_element_token(element_token(e), 7) == e);
  }
  CHECK(parse_element_token("r9", 6) == DihedralElement{3, 0});
  CHECK(parse_element_token("f12", 12) == DihedralElement{0, 1});
  for (const char* bad : {"x3", "r", "f", "", "r-1", "r3x"})
    CHECK_THROWS_AS(parse_element_token(bad, 6), std::invalid_argument);
}

TEST_CASE("regular representations") {
  DihedralGroup g(5);
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) {
      auto x = g.element_at(i), y = g.element_at(j);
      CHECK(g.right_regular(g.mul(x, y)) == g.right_regular(x) * g.right_regular(y));
      CHECK(g.left_regular(g.mul(x, y)) == g.left_regular(x) * g.left_regular(y));
      CHECK(g.right_regular(x) * g.left_regular(y) == g.left_regular(y) * g.right_regular(x));
    }
  for (int i = 1; i < 10; ++i) {
    auto r = g.right_regular(g.element_at(i));
    for (int v = 0; v < 10; ++v) CHECK(r[v] != (uint32_t)v);
  }
  CHECK(g.right_regular(g.identity()).is_identity());
}

TEST_CASE("group automorphisms") {
  CHECK(all_group_automorphisms(6).size() == 12);
  CHECK(all_group_automorphisms(5).size() == 20);
  CHECK(all_group_automorphisms(8).size() == 32);
  CHECK_THROWS_AS(all_group_automorphisms(2), std::invalid_argument);

  DihedralGroup g(6);
  for (auto& phi : all_group_automorphisms(6)) {
    std::set<int> image;
    for (int v = 0; v < 12; ++v) image.insert(g.index_of(phi.apply(g.element_at(v), 6)));
    CHECK(image.size() == 12);
    for (int i = 0; i < 12; ++i)
      for (int j = 0; j < 12; ++j) {
        auto x = g.element_at(i), y = g.element_at(j);
        CHECK(phi.apply(g.mul(x, y), 6) == g.mul(phi.apply(x, 6), phi.apply(y, 6)));
      }
  }

  auto auts = all_group_automorphisms(6);
  for (auto& f : auts)
    for (auto& h : auts) {
      auto fh = f.compose(h, 6);
      for (int v = 0; v < 12; ++v)
        CHECK(fh.apply(g.element_at(v), 6) == h.apply(f.apply(g.element_at(v), 6), 6));
    }
}
