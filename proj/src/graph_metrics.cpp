#include "dihedrant/graph_metrics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dihedrant {

static std::vector<int> bfs_distances(const Graph& g, int root) {
  std::vector<int> dist(g.num_vertices(), -1);
  dist[root] = 0;
  std::vector<int> queue = {root};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int u = queue[qi];
    g.neighbors(u).for_each([&](int v) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    });
  }
  return dist;
}

DistancePartition distance_partition(const Graph& g, int root) {
  auto dist = bfs_distances(g, root);
  std::vector<int> unreached;
  int ecc = 0;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (dist[v] < 0)
      unreached.push_back(v);
    else
      ecc = std::max(ecc, dist[v]);
  }
  if (!unreached.empty()) {
    std::ostringstream os;
    os << "graph is disconnected: " << unreached.size()
       << " vertices unreachable from " << root << " (";
    for (size_t i = 0; i < unreached.size() && i < 8; ++i)
      os << (i ? ", " : "") << unreached[i];
    if (unreached.size() > 8) os << ", ...";
    os << ")";
    throw std::invalid_argument(os.str());
  }
  DistancePartition dp;
  dp.root = root;
  dp.shell_of = dist;
  dp.shells.assign(ecc + 1, {});
  for (int v = 0; v < g.num_vertices(); ++v) dp.shells[dist[v]].push_back(v);
  return dp;
}

bool is_connected_graph(const Graph& g) {
  if (g.num_vertices() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::optional<int> girth(const Graph& g) {
  // For each root, a BFS plus non-tree-edge scan bounds the shortest cycle
  // through that root; the minimum over all roots is exact.
  int nv = g.num_vertices();
  int best = -1;
  for (int root = 0; root < nv; ++root) {
    std::vector<int> dist(nv, -1), parent(nv, -1);
    dist[root] = 0;
    std::vector<int> queue = {root};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      if (best > 0 && 2 * dist[u] >= best) break;
      g.neighbors(u).for_each([&](int v) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        } else if (v != parent[u]) {
          int len = dist[u] + dist[v] + 1;
          if (best < 0 || len < best) best = len;
        }
      });
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

int diameter(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.num_vertices(); ++v) {
    auto dist = bfs_distances(g, v);
    for (int x : dist) {
      if (x < 0) throw std::invalid_argument("diameter of a disconnected graph");
      d = std::max(d, x);
    }
  }
  return d;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const Graph& g) {
  int nv = g.num_vertices();
  std::vector<int> color(nv, -1);
  for (int start = 0; start < nv; ++start) {
    if (color[start] >= 0) continue;
    color[start] = 0;
    std::vector<int> queue = {start};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      bool odd_cycle = false;
      g.neighbors(u).for_each([&](int v) {
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          odd_cycle = true;
        }
      });
      if (odd_cycle) return std::nullopt;
    }
  }
  std::pair<std::vector<int>, std::vector<int>> parts;
  for (int v = 0; v < nv; ++v)
    (color[v] == 0 ? parts.first : parts.second).push_back(v);
  return parts;
}

std::string FamilyTag::to_string() const {
  switch (kind) {
    case Kind::Complete:
      return "K_" + std::to_string(a);
    case Kind::CompleteBipartite:
      return "K_{" + std::to_string(a) + "," + std::to_string(a) + "}";
    case Kind::CompleteBipartiteMinusMatching:
      return "K_{" + std::to_string(a) + "," + std::to_string(a) + "} - " +
             std::to_string(a) + "K_2";
    case Kind::CompleteMultipartite:
      return "K_{" + std::to_string(a) + "[" + std::to_string(b) + "]}";
    case Kind::Cycle:
      return "C_" + std::to_string(a);
    case Kind::Other:
      return "other";
  }
  return "other";
}

FamilyTag recognize(const Graph& g) {
  int nv = g.num_vertices();
  if (nv == 0 || !is_connected_graph(g)) return {};

  bool complete = true;
  for (int v = 0; v < nv && complete; ++v) complete = g.degree(v) == nv - 1;
  if (complete && nv >= 2) return {FamilyTag::Kind::Complete, nv, 0};

  auto parts = bipartition(g);
  if (parts && parts->first.size() == parts->second.size()) {
    int h = (int)parts->first.size();
    bool all_h = true, all_h1 = true;
    for (int v = 0; v < nv; ++v) {
      all_h = all_h && g.degree(v) == h;
      all_h1 = all_h1 && g.degree(v) == h - 1;
    }
    if (all_h) return {FamilyTag::Kind::CompleteBipartite, h, 0};
    if (all_h1 && h >= 2) {
      // Each vertex must miss exactly one vertex of the other side.
      bool matching = true;
      std::vector<char> side(nv, 0);
      for (int v : parts->second) side[v] = 1;
      for (int v = 0; v < nv && matching; ++v) {
        int missing = 0;
        for (int w = 0; w < nv; ++w)
          if (w != v && side[w] != side[v] && !g.adjacent(v, w)) ++missing;
        matching = missing == 1;
      }
      if (matching) return {FamilyTag::Kind::CompleteBipartiteMinusMatching, h, 0};
    }
  }

  // Complete multipartite: the complement splits into cliques of equal size.
  {
    std::vector<int> comp(nv, -1);
    int ncomp = 0;
    bool cliques = true;
    for (int start = 0; start < nv && cliques; ++start) {
      if (comp[start] >= 0) continue;
      std::vector<int> members = {start};
      comp[start] = ncomp;
      for (size_t qi = 0; qi < members.size(); ++qi) {
        int u = members[qi];
        for (int v = 0; v < nv; ++v) {
          if (v == u || g.adjacent(u, v)) continue;
          if (comp[v] < 0) {
            comp[v] = ncomp;
            members.push_back(v);
          }
        }
      }
      for (size_t i = 0; i < members.size() && cliques; ++i)
        for (size_t j = i + 1; j < members.size() && cliques; ++j)
          cliques = !g.adjacent(members[i], members[j]);
      ++ncomp;
    }
    if (cliques && ncomp >= 3) {
      std::vector<int> sizes(ncomp, 0);
      for (int v = 0; v < nv; ++v) sizes[comp[v]] += 1;
      bool equal = std::all_of(sizes.begin(), sizes.end(),
                               [&](int s) { return s == sizes[0]; });
      if (equal && sizes[0] >= 2)
        return {FamilyTag::Kind::CompleteMultipartite, ncomp, sizes[0]};
    }
  }

  if (nv >= 3) {
    bool cyc = true;
    for (int v = 0; v < nv && cyc; ++v) cyc = g.degree(v) == 2;
    if (cyc) return {FamilyTag::Kind::Cycle, nv, 0};
  }

  return {};
}

std::vector<std::pair<int, int>> find_twins(const Graph& g) {
  int nv = g.num_vertices();
  std::vector<int> order(nv);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return g.neighbors(a) < g.neighbors(b); });
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i + 1 < nv; ++i)
    for (int j = i + 1; j < nv && g.neighbors(order[i]) == g.neighbors(order[j]); ++j)
      out.push_back({std::min(order[i], order[j]), std::max(order[i], order[j])});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dihedrant
