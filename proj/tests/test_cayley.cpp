#include "doctest.h"

#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "dihedrant/cayley_graph.hpp"
#include "dihedrant/connection_set.hpp"
#include "dihedrant/errors.hpp"
#include "dihedrant/graph_metrics.hpp"

using namespace dihedrant;

TEST_CASE("complete family") {
  for (int n : {3, 4, 5, 6}) {
    auto s = family_complete(n);
    CHECK(s.size() == 2 * n - 1);
    CHECK(recognize(CayleyGraph(s).graph()) == FamilyTag{FamilyTag::Kind::Complete, 2 * n, 0});
  }
}

TEST_CASE("complete bipartite families") {
  for (int n : {3, 4, 5, 6, 7, 8}) {
    auto s = family_knn(n, 1);
    CHECK(s.size() == n);
    CHECK(recognize(CayleyGraph(s).graph()) ==
          FamilyTag{FamilyTag::Kind::CompleteBipartite, n, 0});
  }
  for (int n : {4, 6, 8})
    for (int v : {2, 3}) {
      auto s = family_knn(n, v);
      CHECK(s.size() == n);
      CHECK(recognize(CayleyGraph(s).graph()) ==
            FamilyTag{FamilyTag::Kind::CompleteBipartite, n, 0});
    }
  CHECK(family_knn(6, 2) != family_knn(6, 3));
  CHECK_THROWS_AS(family_knn(5, 2), std::invalid_argument);
}

TEST_CASE("matching-complement families") {
  for (int n : {6, 10})
    for (int v : {1, 2}) {
      auto s = family_knn_minus_matching(n, v);
      CHECK(s.size() == n - 1);
      CHECK(recognize(CayleyGraph(s).graph()) ==
            FamilyTag{FamilyTag::Kind::CompleteBipartiteMinusMatching, n, 0});
    }
  CHECK_THROWS_AS(family_knn_minus_matching(8, 1), std::invalid_argument);
  CHECK_THROWS_AS(family_knn_minus_matching(7, 1), std::invalid_argument);
}

TEST_CASE("multipartite families") {
  struct {
    int n, t;
  } cases[] = {{6, 2}, {6, 3}, {8, 2}, {8, 4}, {9, 3}, {12, 4}};
  for (auto [n, t] : cases) {
    auto s = family_multipartite(n, t);
    CHECK(s.size() == 2 * n - t);
    CHECK(recognize(CayleyGraph(s).graph()) ==
          FamilyTag{FamilyTag::Kind::CompleteMultipartite, 2 * n / t, t});
  }
  CHECK_THROWS_AS(family_multipartite(6, 4), std::invalid_argument);
  CHECK_THROWS_AS(family_multipartite(6, 6), std::invalid_argument);
  CHECK_THROWS_AS(family_multipartite(6, 1), std::invalid_argument);
}

TEST_CASE("one-parity reflection families") {
  auto s = family_thm14(3, 1);
  CHECK(s.size() == 10);
  for (int e : {1, 5, 7, 11}) CHECK(s.contains({e, 0}));
  for (int e : {1, 3, 5, 7, 9, 11}) CHECK(s.contains({e, 1}));
  CHECK(!s.contains({3, 0}));
  CHECK(!s.contains({2, 1}));
  CHECK_THROWS_AS(family_thm14(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(family_thm14(9, 1), std::invalid_argument);
  CHECK_THROWS_AS(family_thm14(3, 2), std::invalid_argument);

  CHECK(family_ex44_S(1).size() == 25);
  CHECK(family_ex44_R(1).size() == 27);
  CHECK(family_ex45_S(1).size() == 35);
  CHECK(family_ex45_R(1).size() == 39);
  CHECK(family_ex44_S(1).contains({5, 0}));
  CHECK(!family_ex44_S(1).contains({3, 0}));
  CHECK(family_ex44_R(1).contains({3, 0}));
  CHECK(!family_ex44_R(1).contains({5, 0}));

  CHECK(family_case_v(8, 1, {{1, 0}}).size() == 6);
  CHECK_THROWS_AS(family_case_v(7, 1, {{1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(family_case_v(8, 1, {{2, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(family_case_v(8, 1, {}), std::invalid_argument);
  CHECK_THROWS_AS(family_case_v(8, 1, {{1, 0}, {3, 0}}), std::invalid_argument);
}

TEST_CASE("neighborhoods are right translates of S") {
  auto ps = parse_connection_spec("n=6; S=classes(f0)");
  CayleyGraph gamma(ps.set);
  const auto& g = gamma.group();
  for (int v = 0; v < 12; ++v) {
    std::set<int> expected;
    for (auto& s : ps.set.elements())
      expected.insert(g.index_of(g.mul(s, gamma.element_of(v))));
    std::set<int> actual;
    gamma.graph().neighbors(v).for_each([&](int u) { actual.insert(u); });
    CHECK(actual == expected);
  }
  CHECK(gamma.graph().adjacent(1, 7));
  CHECK(gamma.graph().adjacent(1, 9));
  CHECK(gamma.graph().adjacent(1, 11));
  CHECK(!gamma.graph().adjacent(1, 6));
}

TEST_CASE("spec parsing") {
  auto raw = parse_connection_spec("n=6; S=raw(r1, r5, f0)");
  CHECK(raw.n == 6);
  CHECK(raw.family.empty());
  CHECK(raw.set.size() == 3);

  auto auto_inv = parse_connection_spec("n=6; S=raw(r1)");
  CHECK(auto_inv.set.size() == 2);
  CHECK(auto_inv.set.contains({5, 0}));

  auto cls = parse_connection_spec("n=6; S=classes(r1, f0)");
  CHECK(cls.set.size() == 5);

  auto fam = parse_connection_spec("n=12; S=family(thm14, p=3, pi=1)");
  CHECK(fam.family == "thm14");
  CHECK(fam.set == family_thm14(3, 1));

  auto cv = parse_connection_spec("n=12; S=family(caseV, pi=1, delta=r1+r5)");
  CHECK(cv.set == family_thm14(3, 1));

  auto spaced = parse_connection_spec("n = 6 ; S = classes( r1 , f0 )");
  CHECK(spaced.set == cls.set);

  CHECK(parse_connection_spec("n=30; S=family(ex44_S, pi=0)").set == family_ex44_S(0));
}

TEST_CASE("spec parse errors carry positions") {
  auto pos_of = [](const std::string& text) {
    try {
      parse_connection_spec(text);
    } catch (const ParseError& e) {
      return (long)e.position();
    }
    return -1L;
  };
  CHECK(pos_of("m=6; S=raw(r1)") == 0);
  CHECK(pos_of("n=6 S=raw(r1)") == 4);
  CHECK(pos_of("n=1; S=raw(r1)") == 0);
  CHECK(pos_of("n=2100; S=family(complete)") == 0);
  CHECK(pos_of("n=6; S=classes()") == 15);
  CHECK(pos_of("n=6; S=raw(r0)") == 7);
  CHECK(pos_of("n=6; S=bogus(r1)") == 7);
  CHECK(pos_of("n=6; S=raw(r1) x") == 15);
  CHECK(pos_of("n=6; S=classes(q1)") == 15);
  CHECK(pos_of("n=12; S=family(thm14, p=4, pi=1)") == 8);
  CHECK(pos_of("n=12; S=family(nosuch)") == 8);
  CHECK(pos_of("n=6; S=raw(r1)") == -1);
}

TEST_CASE("class closure, inversion map and left action agree") {
  std::mt19937 rng(7);
  for (int n : {3, 4, 5, 6, 7, 9, 10}) {
    DihedralGroup g(n);
    std::vector<std::vector<DihedralElement>> units;
    for (int i = 1; i <= n / 2; ++i) units.push_back({g.make(i, 0)});
    for (int i = 0; i < n; ++i) units.push_back({g.make(i, 1)});
    for (int trial = 0; trial < 25; ++trial) {
      ConnectionSet s(n);
      while (s.empty())
        for (auto& u : units)
          if (rng() & 1)
            for (auto& e : u) s.insert_with_inverse(e);
      CayleyGraph gamma(s);
      bool closed = is_inner_automorphic(s);
      CHECK(closed == inversion_map_is_graph_automorphism(gamma));
      CHECK(closed == left_regular_in_aut(gamma));
    }
  }
}

TEST_CASE("set-fixing group automorphisms") {
  auto s = family_thm14(3, 1);
  auto fixing = aut_G_S(s);
  CHECK(fixing.size() == 24);
  for (auto& phi : fixing) CHECK(apply_group_automorphism(s, phi) == s);

  GroupAutomorphism shift{1, 1};
  CHECK(apply_group_automorphism(family_ex44_S(0), shift) == family_ex44_S(1));
  CHECK(apply_group_automorphism(family_thm14(3, 0), shift) == family_thm14(3, 1));
}

TEST_CASE("connectivity of the generated subgroup") {
  CHECK(is_connected(family_knn(5, 1)));
  CHECK(is_connected(family_thm14(3, 1)));
  CHECK(!is_connected(parse_connection_spec("n=6; S=classes(r1)").set));
  CHECK(!is_connected(parse_connection_spec("n=6; S=raw(f0)").set));
  CHECK(!is_connected(parse_connection_spec("n=6; S=classes(r2)").set));
  CHECK(is_connected(parse_connection_spec("n=6; S=raw(r1, f0)").set));
}

TEST_CASE("group order cap") {
  CHECK_THROWS_AS(ConnectionSet(2049), std::invalid_argument);
  CHECK_NOTHROW(ConnectionSet(2048));
}
