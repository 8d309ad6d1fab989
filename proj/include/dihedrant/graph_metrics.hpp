#ifndef DIHEDRANT_GRAPH_METRICS_HPP
#define DIHEDRANT_GRAPH_METRICS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dihedrant/graph.hpp"

namespace dihedrant {

// BFS shells around a root; shell_of[v] is the distance, shells[d] the sorted
// vertex list at distance d.
struct DistancePartition {
  int root = 0;
  std::vector<std::vector<int>> shells;
  std::vector<int> shell_of;
};

// Throws if some vertex is unreachable, naming the unreached set.
DistancePartition distance_partition(const Graph& g, int root);

bool is_connected_graph(const Graph& g);

// Length of a shortest cycle; empty for forests.
std::optional<int> girth(const Graph& g);

// Throws on disconnected input.
int diameter(const Graph& g);

// The two color classes of a connected bipartite graph (class of vertex 0
// first); empty if the graph has an odd cycle.
std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const Graph& g);

struct FamilyTag {
  enum class Kind {
    Complete,                        // K_m, param a = m
    CompleteBipartite,               // K_{h,h}, param a = h
    CompleteBipartiteMinusMatching,  // K_{h,h} minus a perfect matching, a = h
    CompleteMultipartite,            // K_{m[t]}, a = m parts, b = t
    Cycle,                           // C_len, a = len
    Other,
  };
  Kind kind = Kind::Other;
  int a = 0;
  int b = 0;

  bool operator==(const FamilyTag&) const = default;
  std::string to_string() const;
};

// Checks, in order: complete; complete bipartite with equal sides; complete
// bipartite minus a perfect matching; complete multipartite (>= 3 parts of
// equal size >= 2); cycle. Anything else is Other.
FamilyTag recognize(const Graph& g);

// Unordered pairs of distinct vertices with identical open neighborhoods
// (which forces non-adjacency), sorted.
std::vector<std::pair<int, int>> find_twins(const Graph& g);

}  // namespace dihedrant

#endif
