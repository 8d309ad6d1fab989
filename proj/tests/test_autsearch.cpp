#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "dihedrant/aut_search.hpp"
#include "dihedrant/cayley_graph.hpp"
#include "dihedrant/connection_set.hpp"
#include "dihedrant/errors.hpp"
#include "dihedrant/perm_group.hpp"
#include "test_util.hpp"

using namespace dihedrant;
using namespace testutil;

namespace {

uint64_t brute_force_aut_order(const Graph& g) {
  int nv = g.num_vertices();
  std::vector<uint32_t> img(nv);
  std::iota(img.begin(), img.end(), 0);
  uint64_t count = 0;
  do {
    if (is_graph_automorphism(g, Perm{std::vector<uint32_t>(img)})) ++count;
  } while (std::next_permutation(img.begin(), img.end()));
  return count;
}

Graph relabel(const Graph& g, const Perm& p) {
  Graph out(g.num_vertices());
  for (int u = 0; u < g.num_vertices(); ++u)
    for (int v = u + 1; v < g.num_vertices(); ++v)
      if (g.adjacent(u, v)) out.add_edge((int)p[u], (int)p[v]);
  return out;
}

}  // namespace

TEST_CASE("known automorphism group orders") {
  CHECK(automorphism_group(cycle(5)).order.equals_integer(10));
  CHECK(automorphism_group(cycle(6)).order.equals_integer(12));
  CHECK(automorphism_group(complete(5)).order.equals_integer(120));
  CHECK(automorphism_group(complete_bipartite(3)).order.equals_integer(72));
  CHECK(automorphism_group(petersen()).order.equals_integer(120));
  CHECK(automorphism_group(path(4)).order.equals_integer(2));
  CHECK(automorphism_group(Graph(1)).order.is_one());
  CHECK(automorphism_group(Graph(4)).order.equals_integer(24));
  CHECK(automorphism_group(complete_bipartite(4)).order.equals_integer(1152));
  CHECK(automorphism_group(cycle(4)).order.equals_integer(8));

  Graph two_triangles(6);
  for (int base : {0, 3})
    for (int i = 0; i < 3; ++i)
      two_triangles.add_edge(base + i, base + (i + 1) % 3);
  CHECK(automorphism_group(two_triangles).order.equals_integer(72));

  Graph star(5);
  for (int i = 1; i < 5; ++i) star.add_edge(0, i);
  CHECK(automorphism_group(star).order.equals_integer(24));
}

TEST_CASE("generators are automorphisms and chain order matches") {
  for (const Graph& g : {petersen(), complete_bipartite_minus_matching(4), cycle(7)}) {
    auto res = automorphism_group(g);
    CHECK(res.degree == g.num_vertices());
    for (const auto& p : res.generators) CHECK(is_graph_automorphism(g, p));
    CHECK(PermutationGroup(res.degree, res.generators).order() == res.order);
  }
}

TEST_CASE("order matches brute force on small random graphs") {
  std::mt19937 rng(19);
  for (int nv = 1; nv <= 7; ++nv) {
    for (int trial = 0; trial < 6; ++trial) {
      Graph g(nv);
      for (int u = 0; u < nv; ++u)
        for (int v = u + 1; v < nv; ++v)
          if (rng() % 2) g.add_edge(u, v);
      CHECK(automorphism_group(g).order.equals_integer(brute_force_aut_order(g)));
    }
  }
}

TEST_CASE("order is invariant under relabeling") {
  std::mt19937 rng(5);
  std::vector<uint32_t> img(10);
  std::iota(img.begin(), img.end(), 0);
  for (int trial = 0; trial < 4; ++trial) {
    std::shuffle(img.begin(), img.end(), rng);
    auto shuffled = relabel(petersen(), Perm{std::vector<uint32_t>(img)});
    CHECK(automorphism_group(shuffled).order.equals_integer(120));
  }
}

TEST_CASE("node cap throws") {
  Limits tight;
  tight.node_cap = 3;
  CHECK_THROWS_AS(automorphism_group(complete(8), tight), ResourceLimitError);
}

TEST_CASE("dihedral Cayley graph at n=12") {
  CayleyGraph gamma(family_thm14(3, 1));
  auto res = automorphism_group(gamma.graph());
  auto expected = FactoredInteger::prime_power(2, 17) * FactoredInteger::prime_power(3, 2) *
                  FactoredInteger::prime_power(5, 1);
  CHECK(res.order == expected);
  CHECK(inversion_map_is_graph_automorphism(gamma));
  CHECK(left_regular_in_aut(gamma));
}
