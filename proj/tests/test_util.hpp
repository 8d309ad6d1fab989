#ifndef DIHEDRANT_TEST_UTIL_HPP
#define DIHEDRANT_TEST_UTIL_HPP

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "dihedrant/graph.hpp"
#include "dihedrant/perm.hpp"

namespace testutil {

inline dihedrant::Graph cycle(int m) {
  dihedrant::Graph g(m);
  for (int i = 0; i < m; ++i) g.add_edge(i, (i + 1) % m);
  return g;
}

inline dihedrant::Graph path(int m) {
  dihedrant::Graph g(m);
  for (int i = 0; i + 1 < m; ++i) g.add_edge(i, i + 1);
  return g;
}

inline dihedrant::Graph complete(int m) {
  dihedrant::Graph g(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) g.add_edge(i, j);
  return g;
}

inline dihedrant::Graph complete_bipartite(int h) {
  dihedrant::Graph g(2 * h);
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) g.add_edge(i, h + j);
  return g;
}

inline dihedrant::Graph complete_bipartite_minus_matching(int h) {
  dihedrant::Graph g(2 * h);
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j)
      if (i != j) g.add_edge(i, h + j);
  return g;
}

// Vertices = 2-subsets of {0..4} in lexicographic order, edges between
// disjoint pairs (the Kneser form of the Petersen graph).
inline std::vector<std::pair<int, int>> petersen_pairs() {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) pairs.emplace_back(a, b);
  return pairs;
}

inline dihedrant::Graph petersen() {
  auto pairs = petersen_pairs();
  dihedrant::Graph g(10);
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j) {
      auto [a, b] = pairs[i];
      auto [c, d] = pairs[j];
      if (a != c && a != d && b != c && b != d) g.add_edge(i, j);
    }
  return g;
}

// Permutation of the 2-subsets induced by a permutation of {0..4}.
inline dihedrant::Perm petersen_induced(const std::vector<int>& sperm) {
  auto pairs = petersen_pairs();
  std::vector<uint32_t> img(10);
  for (int i = 0; i < 10; ++i) {
    int a = sperm[pairs[i].first], b = sperm[pairs[i].second];
    if (a > b) std::swap(a, b);
    for (int j = 0; j < 10; ++j)
      if (pairs[j] == std::make_pair(a, b)) img[i] = j;
  }
  return dihedrant::Perm(img);
}

inline std::vector<dihedrant::Perm> petersen_aut_gens() {
  return {petersen_induced({1, 0, 2, 3, 4}), petersen_induced({1, 2, 3, 4, 0})};
}

// Order of <gens> by breadth-first closure; only for small groups.
inline uint64_t closure_order(const std::vector<dihedrant::Perm>& gens, int degree) {
  auto images = [degree](const dihedrant::Perm& p) {
    std::vector<uint32_t> v(degree);
    for (int i = 0; i < degree; ++i) v[i] = p[i];
    return v;
  };
  std::set<std::vector<uint32_t>> seen;
  std::vector<dihedrant::Perm> queue{dihedrant::Perm(degree)};
  seen.insert(images(queue[0]));
  for (size_t head = 0; head < queue.size(); ++head)
    for (const auto& g : gens) {
      auto next = queue[head] * g;
      if (seen.insert(images(next)).second) queue.push_back(next);
    }
  return seen.size();
}

}  // namespace testutil

#endif
