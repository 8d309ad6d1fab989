#include "dihedrant/structure.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace dihedrant {

std::string outcome_name(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::Disconnected: return "Disconnected";
    case OutcomeKind::NotInnerAutomorphic: return "NotInnerAutomorphic";
    case OutcomeKind::CaseI: return "CaseI";
    case OutcomeKind::CaseII: return "CaseII";
    case OutcomeKind::CaseIII: return "CaseIII";
    case OutcomeKind::CaseIV: return "CaseIV";
    case OutcomeKind::CaseV: return "CaseV";
    case OutcomeKind::NotArcTransitive: return "NotArcTransitive";
  }
  return "?";
}

bool CheckList::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void CheckList::add(std::string name, bool pass, std::string detail) {
  checks.push_back({std::move(name), pass, std::move(detail)});
}

namespace {

std::vector<int> rotation_exponents(const ConnectionSet& s) {
  std::vector<int> out;
  for (const auto& e : s.elements())
    if (!e.refl) out.push_back(e.rot);
  return out;
}

std::vector<int> reflection_offsets(const ConnectionSet& s) {
  std::vector<int> out;
  for (const auto& e : s.elements())
    if (e.refl) out.push_back(e.rot);
  return out;
}

// S = G minus a rotation subgroup of order t >= 2 and index >= 3?
bool matches_multipartite(const ConnectionSet& s, int& parts, int& part_size) {
  int n = s.n();
  for (int i = 0; i < n; ++i)
    if (!s.contains(s.group().make(i, 1))) return false;
  std::vector<int> hole = {0};
  for (int i = 1; i < n; ++i)
    if (!s.contains(s.group().make(i, 0))) hole.push_back(i);
  int t = (int)hole.size();
  if (t < 2 || n % t != 0 || 2 * n / t < 3) return false;
  int d = n / t;
  for (int e : hole)
    if (e % d != 0) return false;
  parts = 2 * n / t;
  part_size = t;
  return true;
}

struct CaseVShape {
  int pi;
  std::vector<int> delta;
};

std::optional<CaseVShape> case_v_shape(const ConnectionSet& s) {
  int n = s.n();
  if (n % 2 != 0) return std::nullopt;
  int k = n / 2;
  auto refl = reflection_offsets(s);
  auto rot = rotation_exponents(s);
  if ((int)refl.size() != k || rot.empty() || (int)rot.size() > k - 2) return std::nullopt;
  int pi = refl[0] % 2;
  for (int r : refl)
    if (r % 2 != pi) return std::nullopt;
  for (int r : rot)
    if (r % 2 != 1) return std::nullopt;
  return CaseVShape{pi, rot};
}

std::string element_list(const DihedralGroup& g, const std::vector<int>& vertices,
                         size_t max_items = 8) {
  std::ostringstream os;
  for (size_t i = 0; i < vertices.size() && i < max_items; ++i) {
    if (i) os << " ";
    os << element_token(g.element_at(vertices[i]));
  }
  if (vertices.size() > max_items) os << " ...";
  return os.str();
}

std::string set_difference_detail(const DihedralGroup& g, std::vector<int> expected,
                                  std::vector<int> got) {
  std::sort(expected.begin(), expected.end());
  std::sort(got.begin(), got.end());
  std::vector<int> missing, extra;
  std::set_difference(expected.begin(), expected.end(), got.begin(), got.end(),
                      std::back_inserter(missing));
  std::set_difference(got.begin(), got.end(), expected.begin(), expected.end(),
                      std::back_inserter(extra));
  std::string out;
  if (!missing.empty()) out += "missing: " + element_list(g, missing);
  if (!extra.empty()) {
    if (!out.empty()) out += "; ";
    out += "unexpected: " + element_list(g, extra);
  }
  return out;
}

}  // namespace

ClassificationOutcome classify_shape(const ConnectionSet& s) {
  ClassificationOutcome out{};
  if (!is_connected(s)) {
    out.kind = OutcomeKind::Disconnected;
    return out;
  }
  if (!is_inner_automorphic(s)) {
    out.kind = OutcomeKind::NotInnerAutomorphic;
    return out;
  }
  int n = s.n();
  if (s.size() == 2 * n - 1) {
    out.kind = OutcomeKind::CaseIII;
    return out;
  }
  if (s.size() == n) {
    if (s == family_knn(n, 1)) {
      out.kind = OutcomeKind::CaseI;
      out.variant = 1;
      return out;
    }
    if (n % 2 == 0)
      for (int v : {2, 3})
        if (s == family_knn(n, v)) {
          out.kind = OutcomeKind::CaseI;
          out.variant = v;
          return out;
        }
  }
  if (matches_multipartite(s, out.parts, out.part_size)) {
    out.kind = OutcomeKind::CaseIV;
    return out;
  }
  out.parts = out.part_size = 0;
  if (n % 2 == 0 && (n / 2) >= 3 && (n / 2) % 2 == 1)
    for (int v : {1, 2})
      if (s == family_knn_minus_matching(n, v)) {
        out.kind = OutcomeKind::CaseII;
        out.variant = v;
        return out;
      }
  if (auto shape = case_v_shape(s)) {
    out.kind = OutcomeKind::CaseV;
    out.pi = shape->pi;
    out.delta = shape->delta;
    return out;
  }
  out.kind = OutcomeKind::NotArcTransitive;
  return out;
}

ClassificationOutcome classify(const ConnectionSet& s, const Limits& limits) {
  ClassificationOutcome out = classify_shape(s);
  if (out.kind != OutcomeKind::CaseV && out.kind != OutcomeKind::NotArcTransitive) return out;
  CayleyGraph gamma(s);
  auto aut = automorphism_group(gamma.graph(), limits);
  PermutationGroup full(aut.degree, aut.generators);
  bool arc = is_transitive_on_arcs(gamma.graph(), full, limits);
  if (out.kind == OutcomeKind::CaseV) {
    out.arc_transitive = arc;
    return out;
  }
  if (arc)
    throw std::logic_error("arc-transitive connection set escaped every case shape: n=" +
                           std::to_string(s.n()));
  return out;
}

CheckList verify_case_v(const ConnectionSet& s) {
  CheckList list;
  auto shape = case_v_shape(s);
  if (!shape || !is_connected(s) || !is_inner_automorphic(s)) {
    list.add("case_v_shape", false, "input is not a connected case-(v) connection set");
    return list;
  }
  int n = s.n(), pi = shape->pi;
  const DihedralGroup& g = s.group();
  CayleyGraph gamma(s);
  const Graph& gr = gamma.graph();

  auto gi = girth(gr);
  list.add("girth_4", gi.has_value() && *gi == 4,
           gi ? "girth " + std::to_string(*gi) : "acyclic");
  int diam = diameter(gr);
  list.add("diameter_3", diam == 3, "diameter " + std::to_string(diam));

  // Both sides of the parity bipartition; identity's side first.
  std::vector<int> even_side, odd_side;
  for (int v = 0; v < 2 * n; ++v) {
    auto e = g.element_at(v);
    int side = (e.rot + (e.refl ? 1 - pi : 0)) % 2;
    (side == 0 ? even_side : odd_side).push_back(v);
  }
  auto bip = bipartition(gr);
  bool bip_ok = bip.has_value() && bip->first == even_side && bip->second == odd_side;
  list.add("bipartition_parity_cosets", bip_ok,
           bip ? "" : "graph has an odd cycle");

  auto dp = distance_partition(gr, gamma.vertex_of(g.identity()));
  list.add("eccentricity_shells", dp.shells.size() == 4,
           std::to_string(dp.shells.size()) + " shells");

  std::vector<int> shell2_expected;
  for (int i = (1 - pi) % 2; i < n; i += 2) shell2_expected.push_back(gamma.vertex_of(g.make(i, 1)));
  for (int i = 2; i < n; i += 2) shell2_expected.push_back(gamma.vertex_of(g.make(i, 0)));
  std::sort(shell2_expected.begin(), shell2_expected.end());
  std::vector<int> shell2 = dp.shells.size() > 2 ? dp.shells[2] : std::vector<int>{};
  list.add("distance_2_shell", shell2 == shell2_expected,
           shell2 == shell2_expected ? "" : set_difference_detail(g, shell2_expected, shell2));

  std::vector<int> shell3_expected;
  for (int i = 1; i < n; i += 2) {
    auto e = g.make(i, 0);
    if (!s.contains(e)) shell3_expected.push_back(gamma.vertex_of(e));
  }
  std::sort(shell3_expected.begin(), shell3_expected.end());
  std::vector<int> shell3 = dp.shells.size() > 3 ? dp.shells[3] : std::vector<int>{};
  list.add("distance_3_shell", shell3 == shell3_expected,
           shell3 == shell3_expected ? "" : set_difference_detail(g, shell3_expected, shell3));
  return list;
}

CentralOrbitPartition central_orbit_partition(const DihedralGroup& g) {
  int n = g.n();
  if (n % 2 != 0)
    throw std::invalid_argument("central orbit partition needs an even rotation order");
  DihedralElement z = g.make(n / 2, 0);
  CentralOrbitPartition out;
  out.cell_of.assign(2 * n, -1);
  for (int v = 0; v < 2 * n; ++v) {
    if (out.cell_of[v] >= 0) continue;
    int w = g.index_of(g.mul(g.element_at(v), z));
    int idx = (int)out.cells.size();
    out.cells.push_back({v, w});
    out.cell_of[v] = out.cell_of[w] = idx;
  }
  if (n % 4 == 0)
    for (int c = 0; c < (int)out.cells.size(); ++c)
      (g.element_at(out.cells[c][0]).rot % 2 == 1 ? out.side_one : out.side_two).push_back(c);
  return out;
}

CoverCheck quotient_with_cover_check(const Graph& graph,
                                     const std::vector<std::vector<int>>& cells) {
  int nv = graph.num_vertices();
  std::vector<int> cell_of(nv, -1);
  for (size_t c = 0; c < cells.size(); ++c)
    for (int v : cells[c]) {
      if (v < 0 || v >= nv || cell_of[v] >= 0)
        throw std::invalid_argument("cells must partition the vertex set");
      cell_of[v] = (int)c;
    }
  for (int v = 0; v < nv; ++v)
    if (cell_of[v] < 0) throw std::invalid_argument("cells must cover every vertex");

  int nc = (int)cells.size();
  CoverCheck out{Graph(nc), std::nullopt, {}};
  for (int u = 0; u < nv; ++u)
    graph.neighbors(u).for_each([&](int v) {
      if (cell_of[u] != cell_of[v] && !out.quotient.adjacent(cell_of[u], cell_of[v]))
        out.quotient.add_edge(cell_of[u], cell_of[v]);
    });

  std::optional<int> r;
  bool uniform = true;
  for (int c = 0; c < nc && uniform; ++c) {
    Bitset cell_set(nv);
    for (int v : cells[c]) cell_set.set(v);
    for (int d = out.quotient.neighbors(c).next_set(0); d >= 0 && uniform;
         d = out.quotient.neighbors(c).next_set(d + 1))
      for (int u : cells[d]) {
        int count = graph.neighbors(u).count_and(cell_set);
        if (!r)
          r = count;
        else if (*r != count)
          uniform = false;
      }
  }
  if (uniform) out.multiplicity = r;
  out.tag = recognize(out.quotient);
  return out;
}

std::vector<Perm> kernel_generators(int p) {
  int n = 4 * p;
  DihedralGroup g(n);
  int degree = 2 * n;
  auto v = [&](int rot, int refl) { return g.index_of(g.make(((rot % n) + n) % n, refl)); };
  std::vector<Perm> out;
  for (int t = 1; t <= p; ++t) {
    out.push_back(Perm::transposition(degree, v(2 * t + 1, 1), v(2 * p + 2 * t + 1, 1)));
    out.push_back(Perm::transposition(degree, v(2 * t + 1, 0), v(2 * p + 2 * t + 1, 0)));
    out.push_back(Perm::transposition(degree, v(2 * t, 1), v(2 * p + 2 * t, 1)));
    out.push_back(Perm::transposition(degree, v(2 * t, 0), v(2 * p + 2 * t, 0)));
  }
  return out;
}

namespace {

// Permutation induced on partition cells by a vertex permutation; throws if
// the permutation does not respect the partition.
Perm induced_cell_perm(const Perm& q, const std::vector<int>& cell_of, int num_cells) {
  std::vector<int> img(num_cells, -1);
  for (int v = 0; v < (int)q.degree(); ++v) {
    int from = cell_of[v], to = cell_of[q[v]];
    if (img[from] < 0)
      img[from] = to;
    else if (img[from] != to)
      throw std::invalid_argument("permutation does not respect the cell partition");
  }
  return Perm(std::vector<uint32_t>(img.begin(), img.end()));
}

struct Thm14Context {
  int p;
  ConnectionSet s;
  CayleyGraph gamma;
  CentralOrbitPartition cop;
  AutSearchResult aut;
  PermutationGroup full;
};

int thm14_p_of(const ConnectionSet& s, int p) {
  if (p < 3 || s.n() != 4 * p)
    throw std::invalid_argument("expected a connection set on the order-8p dihedral group");
  return p;
}

Thm14Context make_thm14_context(const ConnectionSet& s, int p, const Limits& limits) {
  thm14_p_of(s, p);
  CayleyGraph gamma(s);
  auto cop = central_orbit_partition(s.group());
  auto aut = automorphism_group(gamma.graph(), limits);
  PermutationGroup full(aut.degree, aut.generators);
  return {p, s, std::move(gamma), std::move(cop), std::move(aut), std::move(full)};
}

void kernel_checks(CheckList& list, const Thm14Context& ctx) {
  int p = ctx.p;
  auto gens = kernel_generators(p);
  const Graph& gr = ctx.gamma.graph();

  bool all_aut = std::all_of(gens.begin(), gens.end(),
                             [&](const Perm& t) { return is_graph_automorphism(gr, t); });
  list.add("cell_swaps_are_automorphisms", all_aut);

  bool involutions = true, commuting = true;
  for (const auto& x : gens) {
    if (!(x * x).is_identity()) involutions = false;
    for (const auto& y : gens)
      if (!(x * y == y * x)) commuting = false;
  }
  StabChain span(2 * ctx.s.n(), gens);
  FactoredInteger expected = FactoredInteger::prime_power(2, 4 * (uint32_t)p);
  list.add("kernel_span_elementary_abelian", involutions && commuting && span.order() == expected,
           "order " + span.order().to_string());

  Perm product(2 * ctx.s.n());
  for (const auto& t : gens) product = product * t;
  Perm central = ctx.s.group().right_regular(ctx.s.group().make(2 * p, 0));
  list.add("ordered_product_is_central_translation", product == central);

  auto dec = decompose_action(ctx.full, ctx.cop.cell_of, (int)ctx.cop.cells.size());
  bool contained = true;
  PermutationGroup action_kernel(2 * ctx.s.n(), dec.kernel_gens);
  for (const auto& t : gens)
    if (!action_kernel.contains(t)) contained = false;
  list.add("span_equals_cell_action_kernel",
           contained && dec.kernel_order == expected && span.order() == dec.kernel_order,
           "action kernel order " + dec.kernel_order.to_string());
}

void cover_checks(CheckList& list, const Thm14Context& ctx) {
  int p = ctx.p;
  auto twins = find_twins(ctx.gamma.graph());
  std::vector<std::vector<int>> twin_cells;
  for (auto [x, y] : twins) twin_cells.push_back({x, y});
  list.add("twin_pairs_are_central_orbits", twin_cells == ctx.cop.cells,
           std::to_string(twins.size()) + " twin pairs");

  auto cover = quotient_with_cover_check(ctx.gamma.graph(), ctx.cop.cells);
  FamilyTag want{FamilyTag::Kind::CompleteBipartiteMinusMatching, 2 * p, 0};
  list.add("quotient_is_matching_complement", cover.tag == want, cover.tag.to_string());
  list.add("uniform_double_cover", cover.multiplicity.has_value() && *cover.multiplicity == 2,
           cover.multiplicity ? "r = " + std::to_string(*cover.multiplicity) : "not uniform");
}

void quotient_group_checks(CheckList& list, const Thm14Context& ctx) {
  int p = ctx.p;
  int nc = (int)ctx.cop.cells.size();
  auto dec = decompose_action(ctx.full, ctx.cop.cell_of, nc);

  FactoredInteger sym = FactoredInteger::factorial(2 * (uint32_t)p);
  FactoredInteger induced_expected = sym * FactoredInteger::from_integer(2);
  list.add("induced_action_order", dec.image.order() == induced_expected,
           dec.image.order().to_string());
  list.add("order_factors_through_cells",
           ctx.aut.order == dec.kernel_order * dec.image.order(),
           ctx.aut.order.to_string());

  std::vector<int> side_of_cell(nc, -1);
  for (int c : ctx.cop.side_one) side_of_cell[c] = 0;
  for (int c : ctx.cop.side_two) side_of_cell[c] = 1;
  auto side_dec = decompose_action(dec.image, side_of_cell, 2);
  PermutationGroup side_preserving(nc, side_dec.kernel_gens);
  list.add("side_preserving_index_2",
           side_dec.kernel_order * FactoredInteger::from_integer(2) == dec.image.order(),
           side_dec.kernel_order.to_string());

  auto on_side_one = restrict_to_domain(side_preserving.generators(), ctx.cop.side_one);
  PermutationGroup side_group(2 * p, on_side_one);
  list.add("side_group_symmetric_order", side_group.order() == sym,
           side_group.order().to_string());
  list.add("side_group_primitive", is_primitive(side_group));

  const DihedralGroup& g = ctx.s.group();
  Perm x1 = induced_cell_perm(g.right_regular(g.make(2, 0)), ctx.cop.cell_of, nc);
  Perm y1 = induced_cell_perm(g.right_regular(g.make(0, 1)), ctx.cop.cell_of, nc);
  auto pair_on_side = restrict_to_domain({x1, y1}, ctx.cop.side_one);
  PermutationGroup dihedral_image(2 * p, pair_on_side);
  const Perm& xs = pair_on_side[0];
  const Perm& ys = pair_on_side[1];
  bool presentation = (ys * ys).is_identity() && (ys * xs * ys) == xs.inverse() &&
                      !xs.is_identity();
  list.add("regular_dihedral_image",
           presentation && is_regular_on(dihedral_image) &&
               dihedral_image.order().equals_integer(2 * (uint64_t)p),
           "order " + dihedral_image.order().to_string());
}

}  // namespace

CheckList verify_kernel(const ConnectionSet& s, int p, const Limits& limits) {
  CheckList list;
  auto ctx = make_thm14_context(s, p, limits);
  kernel_checks(list, ctx);
  return list;
}

CheckList verify_quotient_group_structure(const ConnectionSet& s, int p, const Limits& limits) {
  CheckList list;
  auto ctx = make_thm14_context(s, p, limits);
  quotient_group_checks(list, ctx);
  return list;
}

CheckList verify_thm14(int p, const Limits& limits) {
  CheckList list;
  auto ctx = make_thm14_context(family_thm14(p, 1), p, limits);

  auto shape = classify_shape(ctx.s);
  list.add("classified_case_v", shape.kind == OutcomeKind::CaseV && shape.pi == 1,
           outcome_name(shape.kind));
  list.add("arc_transitive", is_transitive_on_arcs(ctx.gamma.graph(), ctx.full, limits));

  FactoredInteger expected = FactoredInteger::prime_power(2, 4 * (uint32_t)p + 1) *
                             FactoredInteger::factorial(2 * (uint32_t)p);
  list.add("aut_order", ctx.aut.order == expected,
           "computed " + ctx.aut.order.to_string() + ", expected " + expected.to_string());

  kernel_checks(list, ctx);
  cover_checks(list, ctx);
  quotient_group_checks(list, ctx);
  return list;
}

CheckList verify_lemma35(int n, const Limits&) {
  CheckList list;
  if (n % 2 != 0 || n < 6) {
    list.add("even_n", false, "case-(v) sets need even n >= 6");
    return list;
  }
  int k = n / 2;
  for (const auto& delta : enumerate_case_v_deltas(n)) {
    if ((int)delta.size() > k - 2) continue;
    for (int pi : {0, 1}) {
      auto s = family_case_v(n, pi, delta);
      auto sub = verify_case_v(s);
      std::string name = "n=" + std::to_string(n) + " pi=" + std::to_string(pi) + " delta={";
      for (size_t i = 0; i < delta.size(); ++i)
        name += (i ? "," : "") + element_token(delta[i]);
      name += "}";
      std::string failed;
      for (const auto& c : sub.checks)
        if (!c.pass) failed += (failed.empty() ? "" : "; ") + c.name + " " + c.detail;
      list.add(name, sub.all_pass(), failed);
    }
  }
  return list;
}

CheckList verify_lemma42(int p, const Limits&) {
  CheckList list;
  Thm14Context ctx{p, family_thm14(p, 1), CayleyGraph(family_thm14(p, 1)),
                   central_orbit_partition(DihedralGroup(4 * p)), {},
                   PermutationGroup(8 * p, {})};
  cover_checks(list, ctx);
  return list;
}

CheckList verify_lemma43(int p, const Limits& limits) {
  CheckList list;
  auto ctx = make_thm14_context(family_thm14(p, 1), p, limits);
  kernel_checks(list, ctx);
  return list;
}

CheckList verify_lemma45(int p, const Limits& limits) {
  CheckList list;
  auto ctx = make_thm14_context(family_thm14(p, 1), p, limits);
  int v_one = ctx.gamma.vertex_of(ctx.s.group().identity());
  int v_z = ctx.gamma.vertex_of(ctx.s.group().make(2 * p, 0));
  bool identity_cell = ctx.cop.cell_of[v_one] == ctx.cop.cell_of[v_z];
  list.add("identity_cell_is_central_pair", identity_cell);
  quotient_group_checks(list, ctx);
  return list;
}

CheckList verify_cor12(int n, const Limits& limits) {
  CheckList list;
  auto arc_levels = [&](const ConnectionSet& s, const std::string& label, int yes, int no) {
    CayleyGraph gamma(s);
    auto aut = automorphism_group(gamma.graph(), limits);
    PermutationGroup full(aut.degree, aut.generators);
    bool ok_yes = is_s_arc_transitive(gamma.graph(), full, yes, limits);
    bool ok_no = !is_s_arc_transitive(gamma.graph(), full, no, limits);
    list.add(label + "_" + std::to_string(yes) + "_arc_transitive", ok_yes);
    list.add(label + "_not_" + std::to_string(no) + "_arc_transitive", ok_no);
  };
  arc_levels(family_knn(n, 1), "complete_bipartite", 3, 4);
  arc_levels(family_complete(n), "complete", 2, 3);
  if (n % 2 == 0 && (n / 2) >= 3 && (n / 2) % 2 == 1)
    arc_levels(family_knn_minus_matching(n, 1), "matching_complement", 2, 3);
  if (n % 4 == 0) {
    int p = n / 4;
    bool prime = p >= 3 && p % 2 == 1;
    for (int d = 3; prime && d * d <= p; d += 2)
      if (p % d == 0) prime = false;
    if (prime) arc_levels(family_thm14(p, 1), "coprime_rotation_family", 1, 2);
  }
  return list;
}

CheckList verify_cor13(int n, const Limits& limits) {
  CheckList list;
  int total = 0, mismatches = 0;
  std::string first_bad;
  for (const auto& s : enumerate_class_closed_sets(n)) {
    if (!is_connected(s)) continue;
    ++total;
    auto shape = classify_shape(s);
    bool in_cases_i_iv = shape.kind == OutcomeKind::CaseI || shape.kind == OutcomeKind::CaseII ||
                         shape.kind == OutcomeKind::CaseIII || shape.kind == OutcomeKind::CaseIV;
    CayleyGraph gamma(s);
    auto aut = automorphism_group(gamma.graph(), limits);
    PermutationGroup full(aut.degree, aut.generators);
    bool two_dt = is_2_distance_transitive(gamma.graph(), full);
    if (two_dt != in_cases_i_iv) {
      ++mismatches;
      if (first_bad.empty()) {
        std::vector<int> vs;
        s.members().for_each([&](int v) { vs.push_back(v); });
        first_bad = "S = {" + element_list(s.group(), vs) + "} classed " +
                    outcome_name(shape.kind);
      }
    }
  }
  list.add("two_distance_transitive_iff_cases_i_to_iv", mismatches == 0,
           std::to_string(total) + " connected class-closed sets, " +
               std::to_string(mismatches) + " mismatches" +
               (first_bad.empty() ? "" : "; first: " + first_bad));
  return list;
}

CheckList verify_prop21(int n, bool exhaustive, int samples, uint64_t seed,
                        const Limits&) {
  CheckList list;
  DihedralGroup g(n);
  // Inverse-closed generators of the subset lattice: rotation pairs {i, n-i}
  // and individual reflections.
  std::vector<std::vector<DihedralElement>> units;
  for (int i = 1; i <= n / 2; ++i) {
    std::vector<DihedralElement> u = {g.make(i, 0)};
    if (i != (n - i) % n) u.push_back(g.make(n - i, 0));
    units.push_back(u);
  }
  for (int i = 0; i < n; ++i) units.push_back({g.make(i, 1)});

  auto run_one = [&](uint64_t mask, int& mismatches, std::string& first_bad) {
    ConnectionSet s(n);
    for (size_t u = 0; u < units.size(); ++u)
      if (mask >> u & 1)
        for (const auto& e : units[u]) s.insert_with_inverse(e);
    CayleyGraph gamma(s);
    bool class_closed = is_inner_automorphic(s);
    bool inversion = inversion_map_is_graph_automorphism(gamma);
    bool left_regular = left_regular_in_aut(gamma);
    if (class_closed != inversion || inversion != left_regular) {
      ++mismatches;
      if (first_bad.empty())
        first_bad = "mask " + std::to_string(mask) + ": bits " + std::to_string(class_closed) +
                    std::to_string(inversion) + std::to_string(left_regular);
    }
  };

  int total = 0, mismatches = 0;
  std::string first_bad;
  if (exhaustive) {
    if (units.size() > 20) throw std::invalid_argument("exhaustive range too large");
    for (uint64_t mask = 1; mask < (1ull << units.size()); ++mask) {
      ++total;
      run_one(mask, mismatches, first_bad);
    }
  } else {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < samples; ++i) {
      uint64_t mask = 0;
      while (mask == 0) mask = rng() & ((1ull << units.size()) - 1);
      ++total;
      run_one(mask, mismatches, first_bad);
    }
  }
  list.add("closure_inversion_left_regular_agree", mismatches == 0,
           std::to_string(total) + " sets, " + std::to_string(mismatches) + " mismatches" +
               (first_bad.empty() ? "" : "; " + first_bad));
  return list;
}

std::vector<ConnectionSet> enumerate_class_closed_sets(int n) {
  DihedralGroup g(n);
  std::vector<std::vector<DihedralElement>> classes;
  for (const auto& cls : g.all_conjugacy_classes())
    if (!(cls.size() == 1 && cls[0] == g.identity())) classes.push_back(cls);
  if (classes.size() > 20) throw std::invalid_argument("class union range too large");
  std::vector<ConnectionSet> out;
  for (uint64_t mask = 1; mask < (1ull << classes.size()); ++mask) {
    ConnectionSet s(n);
    for (size_t c = 0; c < classes.size(); ++c)
      if (mask >> c & 1)
        for (const auto& e : classes[c]) s.insert_with_inverse(e);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::vector<DihedralElement>> enumerate_case_v_deltas(int n) {
  if (n % 2 != 0) throw std::invalid_argument("case-(v) sets need even n");
  DihedralGroup g(n);
  std::vector<std::vector<DihedralElement>> classes;
  for (int j = 1; j <= n / 2; j += 2) {
    std::vector<DihedralElement> cls = {g.make(j, 0)};
    if (j != n - j) cls.push_back(g.make(n - j, 0));
    classes.push_back(cls);
  }
  std::vector<std::vector<DihedralElement>> out;
  for (uint64_t mask = 1; mask < (1ull << classes.size()); ++mask) {
    std::vector<DihedralElement> delta;
    for (size_t c = 0; c < classes.size(); ++c)
      if (mask >> c & 1) delta.insert(delta.end(), classes[c].begin(), classes[c].end());
    out.push_back(std::move(delta));
  }
  return out;
}

}  // namespace dihedrant
