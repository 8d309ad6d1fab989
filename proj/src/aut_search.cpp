#include "dihedrant/aut_search.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>

#include "dihedrant/perm_group.hpp"

namespace dihedrant {

Partition::Partition(int n)
    : order_(n), pos_(n), cell_start_(n, 0), cell_size_(n, 0) {
  std::iota(order_.begin(), order_.end(), 0);
  std::iota(pos_.begin(), pos_.end(), 0);
  if (n > 0) cell_size_[0] = n;
}

bool Partition::is_discrete() const {
  for (int s = 0; s < size(); s += cell_size_[s])
    if (cell_size_[s] > 1) return false;
  return true;
}

int Partition::target_cell_start() const {
  int best = -1, best_size = size() + 1;
  for (int s = 0; s < size(); s += cell_size_[s])
    if (cell_size_[s] > 1 && cell_size_[s] < best_size) {
      best = s;
      best_size = cell_size_[s];
    }
  return best;
}

std::vector<int> Partition::cell_members(int start) const {
  return {order_.begin() + start, order_.begin() + start + cell_size_[start]};
}

int Partition::individualize(int v) {
  int s = cell_start_[pos_[v]];
  int k = cell_size_[s];
  int pv = pos_[v];
  std::swap(order_[s], order_[pv]);
  pos_[order_[pv]] = pv;
  pos_[order_[s]] = s;
  cell_size_[s] = 1;
  for (int p = s + 1; p < s + k; ++p) cell_start_[p] = s + 1;
  if (k > 1) cell_size_[s + 1] = k - 1;
  return k > 1 ? s + 1 : s;
}

std::vector<int> Partition::shape() const {
  std::vector<int> out;
  for (int s = 0; s < size(); s += cell_size_[s]) out.push_back(cell_size_[s]);
  return out;
}

bool Partition::split_cell(int start, const std::vector<int>& cnt,
                           std::vector<int>& fragment_starts) {
  int k = cell_size_[start];
  if (k == 1) return false;
  int lo = cnt[order_[start]], hi = lo;
  for (int p = start + 1; p < start + k; ++p) {
    lo = std::min(lo, cnt[order_[p]]);
    hi = std::max(hi, cnt[order_[p]]);
  }
  if (lo == hi) return false;

  // Stable counting sort of the cell by cnt ascending.
  std::vector<int> bucket(hi - lo + 2, 0);
  for (int p = start; p < start + k; ++p) ++bucket[cnt[order_[p]] - lo + 1];
  for (size_t i = 1; i < bucket.size(); ++i) bucket[i] += bucket[i - 1];
  std::vector<int> sorted(k);
  for (int p = start; p < start + k; ++p) {
    int v = order_[p];
    sorted[bucket[cnt[v] - lo]++] = v;
  }
  for (int i = 0; i < k; ++i) {
    order_[start + i] = sorted[i];
    pos_[sorted[i]] = start + i;
  }
  int frag = start;
  for (int i = 0; i < k; ++i) {
    if (i > 0 && cnt[sorted[i]] != cnt[sorted[i - 1]]) {
      cell_size_[frag] = start + i - frag;
      frag = start + i;
    }
    cell_start_[start + i] = frag;
  }
  cell_size_[frag] = start + k - frag;
  for (int s = start; s < start + k; s += cell_size_[s]) fragment_starts.push_back(s);
  return true;
}

void Partition::refine(const Graph& graph, const std::vector<int>& seed_starts) {
  int n = size();
  std::deque<int> work(seed_starts.begin(), seed_starts.end());
  std::vector<char> queued(n, 0);
  for (int s : work) queued[s] = 1;
  std::vector<int> cnt(n);
  Bitset wset(n);

  auto process = [&](int ws) {
    wset.clear();
    for (int p = ws; p < ws + cell_size_[ws]; ++p) wset.set(order_[p]);
    for (int v = 0; v < n; ++v) cnt[v] = graph.neighbors(v).count_and(wset);
    std::vector<int> fragments;
    for (int s = 0; s < n;) {
      int k = cell_size_[s];
      split_cell(s, cnt, fragments);
      s += k;
    }
    for (int f : fragments)
      if (!queued[f]) {
        queued[f] = 1;
        work.push_back(f);
      }
  };

  while (true) {
    while (!work.empty()) {
      int ws = work.front();
      work.pop_front();
      queued[ws] = 0;
      process(ws);
    }
    // Verification sweep: every cell must be equitable against every cell.
    bool clean = true;
    for (int ws = 0; ws < n && clean; ws += cell_size_[ws]) {
      wset.clear();
      for (int p = ws; p < ws + cell_size_[ws]; ++p) wset.set(order_[p]);
      for (int s = 0; s < n && clean; s += cell_size_[s]) {
        if (cell_size_[s] == 1) continue;
        int c0 = graph.neighbors(order_[s]).count_and(wset);
        for (int p = s + 1; p < s + cell_size_[s]; ++p)
          if (graph.neighbors(order_[p]).count_and(wset) != c0) {
            clean = false;
            work.push_back(ws);
            queued[ws] = 1;
          }
      }
    }
    if (clean) return;
  }
}

bool is_graph_automorphism(const Graph& graph, const Perm& p) {
  int n = graph.num_vertices();
  if ((int)p.degree() != n) return false;
  for (int v = 0; v < n; ++v) {
    Bitset mapped(n);
    graph.neighbors(v).for_each([&](int u) { mapped.set((int)p[u]); });
    if (!(mapped == graph.neighbors((int)p[v]))) return false;
  }
  return true;
}

namespace {

struct PathNode {
  Partition part;             // partition before individualizing at this level
  std::vector<int> members;   // target cell snapshot; members[0] is the base
  std::vector<int> child_shape;
};

struct OrbitUF {
  std::vector<int> parent;
  explicit OrbitUF(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

class AutSearch {
public:
  AutSearch(const Graph& graph, const Limits& limits)
      : graph_(graph), limits_(limits), uf_(graph.num_vertices()) {}

  AutSearchResult run() {
    int n = graph_.num_vertices();
    Partition root(n);
    if (n > 0) root.refine(graph_, {0});
    build_reference_path(std::move(root));

    for (size_t lvl = path_.size(); lvl-- > 0;) {
      const auto& node = path_[lvl];
      int base = node.members[0];
      std::vector<int> failed;
      for (size_t ci = 1; ci < node.members.size(); ++ci) {
        int c = node.members[ci];
        if (uf_.find(c) == uf_.find(base)) continue;
        bool skip = false;
        for (int f : failed)
          if (uf_.find(c) == uf_.find(f)) {
            skip = true;
            break;
          }
        if (skip) continue;
        Perm sigma(n);
        if (dive(node.part, c, lvl, sigma)) {
          for (int v = 0; v < n; ++v) uf_.unite(v, (int)sigma[v]);
          gens_.push_back(std::move(sigma));
        } else {
          failed.push_back(c);
        }
      }
    }

    AutSearchResult result;
    result.degree = n;
    result.generators = gens_;
    result.order = StabChain(n, gens_).order();
    result.nodes_explored = nodes_;
    return result;
  }

private:
  void count_node() {
    if (++nodes_ > limits_.node_cap)
      throw ResourceLimitError("automorphism search exceeded the node cap", limits_.node_cap);
  }

  void build_reference_path(Partition p) {
    while (!p.is_discrete()) {
      PathNode node{p, {}, {}};
      int start = p.target_cell_start();
      node.members = p.cell_members(start);
      int rem = p.individualize(node.members[0]);
      p.refine(graph_, {start, rem});
      count_node();
      node.child_shape = p.shape();
      path_.push_back(std::move(node));
    }
    leaf_ = p.size() > 0 ? std::optional<Partition>(std::move(p)) : std::nullopt;
  }

  // Searches for an automorphism fixing the first lvl base points and sending
  // the level's base to c. Exhaustive over shape-matching branches.
  bool dive(const Partition& parent, int c, size_t lvl, Perm& out) {
    Partition p = parent;
    int start = p.cell_start(p.position_of(c));
    int rem = p.individualize(c);
    p.refine(graph_, {start, rem});
    count_node();
    if (p.shape() != path_[lvl].child_shape) return false;
    return dive_rec(p, lvl + 1, out);
  }

  bool dive_rec(Partition& p, size_t depth, Perm& out) {
    if (depth == path_.size()) {
      const Partition& ref = *leaf_;
      std::vector<uint32_t> img(p.size());
      for (int i = 0; i < p.size(); ++i) img[ref.vertex_at(i)] = (uint32_t)p.vertex_at(i);
      Perm candidate(std::move(img));
      if (candidate.is_identity() || !is_graph_automorphism(graph_, candidate)) return false;
      out = std::move(candidate);
      return true;
    }
    int start = p.target_cell_start();
    for (int c : p.cell_members(start)) {
      Partition q = p;
      int rem = q.individualize(c);
      q.refine(graph_, {start, rem});
      count_node();
      if (q.shape() != path_[depth].child_shape) continue;
      if (dive_rec(q, depth + 1, out)) return true;
    }
    return false;
  }

  const Graph& graph_;
  Limits limits_;
  OrbitUF uf_;
  std::vector<PathNode> path_;
  std::optional<Partition> leaf_;
  std::vector<Perm> gens_;
  uint64_t nodes_ = 0;
};

}  // namespace

AutSearchResult automorphism_group(const Graph& graph, const Limits& limits) {
  return AutSearch(graph, limits).run();
}

}  // namespace dihedrant
