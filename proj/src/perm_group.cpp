#include "dihedrant/perm_group.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <functional>
#include <stdexcept>
#include <unordered_set>

#include "dihedrant/graph_metrics.hpp"

namespace dihedrant {

// --- StabChain ---------------------------------------------------------------

StabChain::StabChain(int degree, const std::vector<Perm>& gens,
                     const std::vector<int>& base_prefix)
    : degree_(degree) {
  for (int p : base_prefix) add_base_point(p);

  for (const auto& g : gens) {
    if ((int)g.degree() != degree)
      throw std::invalid_argument("generator degree mismatch");
    if (g.is_identity()) continue;
    size_t lev = 0;
    while (lev < levels_.size() && g[levels_[lev].beta] == (uint32_t)levels_[lev].beta) ++lev;
    if (lev == levels_.size()) add_base_point(g.lowest_moved_point());
    for (size_t i = 0; i <= lev && i < levels_.size(); ++i) levels_[i].gens.push_back(g);
  }
  if (levels_.empty()) return;

  size_t i = levels_.size() - 1;
  while (true) {
    auto dirty = process_level(i);
    if (dirty) {
      i = *dirty;
      continue;
    }
    if (i == 0) break;
    --i;
  }
}

void StabChain::add_base_point(int point) {
  Level lv;
  lv.beta = point;
  lv.orbit_slot.assign(degree_, 0);
  lv.orbit.push_back(point);
  lv.orbit_slot[point] = 1;
  lv.transversal.push_back(Perm(degree_));
  lv.transversal_inv.push_back(Perm(degree_));
  levels_.push_back(std::move(lv));
}

void StabChain::extend_orbit(Level& lv) {
  // Existing transversal entries are never rebuilt; new points get theirs on
  // first discovery. scanned/applied markers make repeated calls incremental.
  size_t applied = lv.done_orbit_gens;
  if (applied < lv.gens.size()) {
    size_t limit = lv.orbit_scanned;
    for (size_t idx = 0; idx < limit; ++idx)
      for (size_t gi = applied; gi < lv.gens.size(); ++gi) {
        int img = (int)lv.gens[gi][lv.orbit[idx]];
        if (!lv.orbit_slot[img]) {
          lv.orbit_slot[img] = (int)lv.orbit.size() + 1;
          lv.orbit.push_back(img);
          lv.transversal.push_back(lv.transversal[idx] * lv.gens[gi]);
          lv.transversal_inv.push_back(lv.transversal.back().inverse());
        }
      }
    lv.done_orbit_gens = lv.gens.size();
  }
  while (lv.orbit_scanned < lv.orbit.size()) {
    size_t idx = lv.orbit_scanned++;
    for (size_t gi = 0; gi < lv.gens.size(); ++gi) {
      int img = (int)lv.gens[gi][lv.orbit[idx]];
      if (!lv.orbit_slot[img]) {
        lv.orbit_slot[img] = (int)lv.orbit.size() + 1;
        lv.orbit.push_back(img);
        lv.transversal.push_back(lv.transversal[idx] * lv.gens[gi]);
        lv.transversal_inv.push_back(lv.transversal.back().inverse());
      }
    }
  }
}

std::optional<size_t> StabChain::process_level(size_t i) {
  while (true) {
    Level& lv = levels_[i];
    extend_orbit(lv);
    if (lv.done_points < lv.orbit.size() || lv.done_gens < lv.gens.size()) {
      size_t np = lv.orbit.size(), ng = lv.gens.size();
      for (size_t pi = 0; pi < np; ++pi)
        for (size_t gi = pi < lv.done_points ? lv.done_gens : 0; gi < ng; ++gi)
          lv.pending.emplace_back((uint32_t)pi, (uint32_t)gi);
      lv.done_points = np;
      lv.done_gens = ng;
    }
    if (lv.pending.empty()) return std::nullopt;

    auto [pi, gi] = lv.pending.front();
    lv.pending.pop_front();
    const Perm& g = lv.gens[gi];
    int slot = lv.orbit_slot[g[lv.orbit[pi]]];
    Perm schreier = lv.transversal[pi] * g * lv.transversal_inv[slot - 1];
    if (schreier.is_identity()) continue;
    auto [residue, drop] = sift(schreier, i + 1);
    if (residue.is_identity()) continue;
    // A popped pair is settled even on the residue path: the residue joins the
    // generator lists at levels i+1..drop, so its Schreier element sifts clean
    // through the updated chain.
    if (drop == levels_.size()) add_base_point(residue.lowest_moved_point());
    for (size_t t = i + 1; t <= drop; ++t) levels_[t].gens.push_back(residue);
    return drop;
  }
}

std::pair<Perm, size_t> StabChain::sift(const Perm& g, size_t from) const {
  Perm r = g;
  for (size_t t = from; t < levels_.size(); ++t) {
    const Level& lv = levels_[t];
    int p = (int)r[lv.beta];
    if (p == lv.beta) continue;
    int slot = lv.orbit_slot[p];
    if (!slot) return {std::move(r), t};
    r = r * lv.transversal_inv[slot - 1];
  }
  return {std::move(r), levels_.size()};
}

FactoredInteger StabChain::order() const { return order_from_level(0); }

FactoredInteger StabChain::order_from_level(size_t from) const {
  FactoredInteger o;
  for (size_t t = from; t < levels_.size(); ++t)
    o *= FactoredInteger::from_integer(levels_[t].orbit.size());
  return o;
}

bool StabChain::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  auto [r, drop] = sift(g, 0);
  return drop == levels_.size() && r.is_identity();
}

std::vector<Perm> StabChain::strong_gens_from_level(size_t from) const {
  std::vector<Perm> out;
  std::unordered_set<Perm, PermHash> seen;
  for (size_t t = from; t < levels_.size(); ++t)
    for (const auto& g : levels_[t].gens)
      if (seen.insert(g).second) out.push_back(g);
  return out;
}

// --- PermutationGroup ---------------------------------------------------------

PermutationGroup::PermutationGroup(int degree, std::vector<Perm> generators)
    : degree_(degree), gens_(std::move(generators)) {
  for (auto& g : gens_)
    if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
}

PermutationGroup PermutationGroup::with_base_prefix(int degree, std::vector<Perm> generators,
                                                    std::vector<int> prefix) {
  PermutationGroup g(degree, std::move(generators));
  g.base_prefix_ = std::move(prefix);
  return g;
}

const StabChain& PermutationGroup::chain() const {
  if (!chain_) chain_.emplace(degree_, gens_, base_prefix_);
  return *chain_;
}

bool PermutationGroup::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  return chain().contains(g);
}

bool PermutationGroup::is_trivial() const {
  for (auto& g : gens_)
    if (!g.is_identity()) return false;
  return true;
}

PermutationGroup PermutationGroup::point_stabilizer(int v) const {
  StabChain ch(degree_, gens_, {v});
  return PermutationGroup(degree_, ch.strong_gens_from_level(1));
}

// --- Orbits -------------------------------------------------------------------

std::vector<int> orbit_of_point(const std::vector<Perm>& gens, int point) {
  std::vector<int> orbit = {point};
  if (gens.empty()) return orbit;
  std::vector<char> seen(gens[0].degree(), 0);
  seen[point] = 1;
  for (size_t qi = 0; qi < orbit.size(); ++qi)
    for (const auto& g : gens) {
      int img = (int)g[orbit[qi]];
      if (!seen[img]) {
        seen[img] = 1;
        orbit.push_back(img);
      }
    }
  return orbit;
}

std::vector<std::vector<int>> orbit_partition(const std::vector<Perm>& gens, int degree) {
  std::vector<char> seen(degree, 0);
  std::vector<std::vector<int>> cells;
  for (int v = 0; v < degree; ++v) {
    if (seen[v]) continue;
    auto orb = orbit_of_point(gens, v);
    for (int x : orb) seen[x] = 1;
    std::sort(orb.begin(), orb.end());
    cells.push_back(std::move(orb));
  }
  return cells;
}

bool is_transitive(const std::vector<Perm>& gens, int degree) {
  if (degree <= 1) return true;
  return (int)orbit_of_point(gens, 0).size() == degree;
}

namespace {

struct TupleKeyer {
  int bits;
  bool packed;
  TupleKeyer(int degree, size_t len) {
    bits = 1;
    while ((1 << bits) < degree) ++bits;
    packed = bits * len <= 64;
  }
  uint64_t pack(const std::vector<int>& t) const {
    uint64_t k = 0;
    for (int v : t) k = (k << bits) | (uint64_t)v;
    return k;
  }
  std::string str(const std::vector<int>& t) const {
    std::string s(t.size() * sizeof(int), '\0');
    std::memcpy(s.data(), t.data(), s.size());
    return s;
  }
};

}  // namespace

std::vector<std::vector<int>> orbit_of_tuple(const std::vector<Perm>& gens,
                                             const std::vector<int>& tuple, uint64_t cap) {
  std::vector<std::vector<int>> orbit = {tuple};
  if (gens.empty()) return orbit;
  TupleKeyer keyer(gens[0].degree(), tuple.size());
  std::unordered_set<uint64_t> seen_packed;
  std::unordered_set<std::string> seen_str;
  auto insert = [&](const std::vector<int>& t) {
    return keyer.packed ? seen_packed.insert(keyer.pack(t)).second
                        : seen_str.insert(keyer.str(t)).second;
  };
  insert(tuple);
  std::vector<int> img(tuple.size());
  for (size_t qi = 0; qi < orbit.size(); ++qi) {
    auto cur = orbit[qi];  // copy: the vector may reallocate
    for (const auto& g : gens) {
      for (size_t j = 0; j < cur.size(); ++j) img[j] = (int)g[cur[j]];
      if (insert(img)) {
        if (orbit.size() >= cap)
          throw ResourceLimitError("tuple orbit exceeded the configured cap", cap);
        orbit.push_back(img);
      }
    }
  }
  return orbit;
}

bool is_normal(const std::vector<Perm>& h_gens, const PermutationGroup& g) {
  if (h_gens.empty()) return true;
  PermutationGroup h(g.degree(), h_gens);
  for (const auto& x : g.generators()) {
    Perm xi = x.inverse();
    for (const auto& hg : h_gens)
      if (!h.contains(xi * hg * x)) return false;
  }
  return true;
}

// --- Block systems -------------------------------------------------------------

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int rep(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

std::vector<std::vector<int>> cells_from_uf(UnionFind& uf, int degree) {
  std::vector<std::vector<int>> by_rep(degree);
  for (int v = 0; v < degree; ++v) by_rep[uf.rep(v)].push_back(v);
  std::vector<std::vector<int>> cells;
  for (auto& c : by_rep)
    if (!c.empty()) cells.push_back(std::move(c));
  return cells;
}

}  // namespace

std::vector<std::vector<int>> minimal_block_system_for_pair(const std::vector<Perm>& gens,
                                                            int degree, int a, int b) {
  UnionFind uf(degree);
  uf.unite(a, b);
  // Fixpoint refinement: x ~ y forces x^g ~ y^g.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < degree; ++x) {
      int r = uf.rep(x);
      if (r == x) continue;
      for (const auto& g : gens)
        changed |= uf.unite((int)g[x], (int)g[r]);
    }
  }
  return cells_from_uf(uf, degree);
}

std::vector<std::vector<std::vector<int>>> minimal_block_systems(const PermutationGroup& g) {
  if (!is_transitive(g.generators(), g.degree()))
    throw std::invalid_argument("block systems need a transitive group");
  int d = g.degree();
  std::vector<std::vector<std::vector<int>>> candidates;
  std::vector<std::vector<int>> zero_blocks;
  for (int j = 1; j < d; ++j) {
    auto cells = minimal_block_system_for_pair(g.generators(), d, 0, j);
    if ((int)cells[0].size() == d) continue;  // collapsed to one block
    if (std::find(zero_blocks.begin(), zero_blocks.end(), cells[0]) == zero_blocks.end()) {
      zero_blocks.push_back(cells[0]);
      candidates.push_back(std::move(cells));
    }
  }
  // Keep candidates whose 0-block contains no other candidate's 0-block.
  std::vector<std::vector<std::vector<int>>> out;
  for (size_t i = 0; i < candidates.size(); ++i) {
    bool minimal = true;
    for (size_t j = 0; j < candidates.size() && minimal; ++j) {
      if (i == j) continue;
      minimal = !std::includes(zero_blocks[i].begin(), zero_blocks[i].end(),
                               zero_blocks[j].begin(), zero_blocks[j].end());
    }
    if (minimal) out.push_back(candidates[i]);
  }
  return out;
}

bool is_primitive(const PermutationGroup& g) {
  return minimal_block_systems(g).empty();
}

std::vector<Perm> restrict_to_domain(const std::vector<Perm>& gens,
                                     const std::vector<int>& domain) {
  std::vector<int> pos;
  int degree = gens.empty() ? 0 : gens[0].degree();
  for (int v : domain)
    if (v >= degree) throw std::invalid_argument("domain point out of range");
  pos.assign(degree, -1);
  for (size_t i = 0; i < domain.size(); ++i) pos[domain[i]] = (int)i;
  std::vector<Perm> out;
  for (const auto& g : gens) {
    std::vector<uint32_t> img(domain.size());
    for (size_t i = 0; i < domain.size(); ++i) {
      int target = (int)g[domain[i]];
      if (pos[target] < 0)
        throw std::invalid_argument("domain is not invariant under the generators");
      img[i] = (uint32_t)pos[target];
    }
    out.push_back(Perm(std::move(img)));
  }
  return out;
}

bool is_regular_on(const PermutationGroup& g, const std::optional<std::vector<int>>& domain) {
  if (domain) {
    auto gens = restrict_to_domain(g.generators(), *domain);
    return is_regular_on(PermutationGroup((int)domain->size(), std::move(gens)));
  }
  if (!is_transitive(g.generators(), g.degree())) return false;
  return g.order().equals_integer((uint64_t)g.degree());
}

ActionDecomposition decompose_action(const PermutationGroup& g,
                                     const std::vector<int>& label_of, int num_labels) {
  int d = g.degree();
  if ((int)label_of.size() != d)
    throw std::invalid_argument("label_of must cover the whole domain");
  for (int l : label_of)
    if (l < 0 || l >= num_labels) throw std::invalid_argument("label out of range");

  std::vector<Perm> combined;
  std::vector<Perm> induced;
  for (const auto& p : g.generators()) {
    std::vector<int> lbl_img(num_labels, -1);
    for (int x = 0; x < d; ++x) {
      int from = label_of[x], to = label_of[(int)p[x]];
      if (lbl_img[from] < 0)
        lbl_img[from] = to;
      else if (lbl_img[from] != to)
        throw std::invalid_argument("labels are not permuted by the generators");
    }
    std::vector<uint32_t> comb(num_labels + d);
    std::vector<uint32_t> ind(num_labels);
    for (int l = 0; l < num_labels; ++l) {
      if (lbl_img[l] < 0) lbl_img[l] = l;  // label class empty
      comb[l] = (uint32_t)lbl_img[l];
      ind[l] = (uint32_t)lbl_img[l];
    }
    for (int x = 0; x < d; ++x) comb[num_labels + x] = (uint32_t)(num_labels + p[x]);
    combined.push_back(Perm(std::move(comb)));
    induced.push_back(Perm(std::move(ind)));
  }

  std::vector<int> prefix(num_labels);
  for (int l = 0; l < num_labels; ++l) prefix[l] = l;
  StabChain ch(num_labels + d, combined, prefix);

  ActionDecomposition out{PermutationGroup(num_labels, induced), {}, FactoredInteger{}};
  out.kernel_order = ch.order_from_level(num_labels);
  for (const auto& kg : ch.strong_gens_from_level(num_labels)) {
    std::vector<uint32_t> img(d);
    for (int x = 0; x < d; ++x) img[x] = kg[num_labels + x] - num_labels;
    out.kernel_gens.push_back(Perm(std::move(img)));
  }
  return out;
}

// --- Arc transitivity -----------------------------------------------------------

uint64_t count_s_arcs(const Graph& graph, int s) {
  int nv = graph.num_vertices();
  std::vector<std::vector<int>> adj(nv);
  std::vector<int> offset(nv + 1, 0);
  for (int v = 0; v < nv; ++v) {
    adj[v] = graph.neighbors(v).to_vector();
    offset[v + 1] = offset[v] + (int)adj[v].size();
  }
  int ne = offset[nv];
  auto edge_id = [&](int u, int v) {
    const auto& a = adj[u];
    int j = (int)(std::lower_bound(a.begin(), a.end(), v) - a.begin());
    return offset[u] + j;
  };
  std::vector<unsigned __int128> f(ne, 1);  // 1-arc counts per directed edge
  for (int step = 2; step <= s; ++step) {
    std::vector<unsigned __int128> nf(ne, 0);
    for (int v = 0; v < nv; ++v)
      for (int w : adj[v]) {
        unsigned __int128 total = 0;
        for (int u : adj[v])
          if (u != w) total += f[edge_id(u, v)];
        nf[edge_id(v, w)] = total;
      }
    f = std::move(nf);
  }
  unsigned __int128 total = 0;
  for (auto x : f) total += x;
  if (total > UINT64_MAX) return UINT64_MAX;
  return (uint64_t)total;
}

namespace {

bool first_s_arc(const Graph& graph, int s, std::vector<int>& arc) {
  int nv = graph.num_vertices();
  // Depth-first over extensions; any s-arc will do as orbit seed.
  std::vector<int> seq;
  std::function<bool(int)> extend = [&](int depth) -> bool {
    if (depth == s + 1) return true;
    int prev = seq.back();
    int banned = seq.size() >= 2 ? seq[seq.size() - 2] : -1;
    for (int w = graph.neighbors(prev).next_set(0); w >= 0;
         w = graph.neighbors(prev).next_set(w + 1)) {
      if (w == banned) continue;
      seq.push_back(w);
      if (extend(depth + 1)) return true;
      seq.pop_back();
    }
    return false;
  };
  for (int v = 0; v < nv; ++v) {
    seq = {v};
    if (extend(1)) {
      arc = seq;
      return true;
    }
  }
  return false;
}

}  // namespace

bool is_s_arc_transitive(const Graph& graph, const PermutationGroup& g, int s,
                         const Limits& limits) {
  if (s < 1) throw std::invalid_argument("s must be >= 1");
  uint64_t total = count_s_arcs(graph, s);
  if (total == 0) return true;
  if (total > limits.arc_cap)
    throw ResourceLimitError("s-arc count exceeds the configured cap", limits.arc_cap);
  std::vector<int> seed;
  if (!first_s_arc(graph, s, seed)) return true;
  auto orbit = orbit_of_tuple(g.generators(), seed, limits.arc_cap);
  return orbit.size() == total;
}

bool is_transitive_on_arcs(const Graph& graph, const PermutationGroup& g, const Limits& limits) {
  return is_s_arc_transitive(graph, g, 1, limits);
}

bool is_2_distance_transitive(const Graph& graph, const PermutationGroup& g) {
  if (!is_transitive(g.generators(), g.degree()))
    throw std::invalid_argument("2-distance-transitivity needs a vertex-transitive group");
  auto dp = distance_partition(graph, 0);
  auto stab = g.point_stabilizer(0);
  for (int dist = 1; dist <= 2; ++dist) {
    if ((int)dp.shells.size() <= dist) break;
    const auto& shell = dp.shells[dist];
    auto orb = orbit_of_point(stab.generators(), shell[0]);
    if (orb.size() != shell.size()) return false;
    std::sort(orb.begin(), orb.end());
    if (!std::equal(orb.begin(), orb.end(), shell.begin())) return false;
  }
  return true;
}

}  // namespace dihedrant
