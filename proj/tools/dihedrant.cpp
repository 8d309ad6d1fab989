#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dihedrant/aut_search.hpp"
#include "dihedrant/cayley_graph.hpp"
#include "dihedrant/connection_set.hpp"
#include "dihedrant/errors.hpp"
#include "dihedrant/graph_metrics.hpp"
#include "dihedrant/perm_group.hpp"
#include "dihedrant/scan.hpp"
#include "dihedrant/structure.hpp"

using nlohmann::json;
using namespace dihedrant;

namespace {

int g_log = 0;  // DIHEDRANT_LOG: 0 quiet, 1 info, 2 debug

int log_level_from_env() {
  const char* v = std::getenv("DIHEDRANT_LOG");
  if (!v) return 0;
  std::string s(v);
  if (s == "debug") return 2;
  if (s == "info") return 1;
  return 0;
}

struct Stopwatch {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

struct CommonOpts {
  std::string format = "text";
  std::string out;
  int jobs = 0;  // 0 = hardware concurrency
  bool no_timings = false;
  Limits limits;
};

const char* yn(bool b) { return b ? "yes" : "no"; }

json factored_json(const FactoredInteger& f) {
  json o = json::object();
  for (const auto& [p, e] : f.exponents()) o[std::to_string(p)] = e;
  return o;
}

json perm_json(const Perm& p) {
  json a = json::array();
  for (int i = 0; i < p.degree(); ++i) a.push_back(p[i]);
  return a;
}

json order_json(const FactoredInteger& f) {
  json j;
  j["factored"] = factored_json(f);
  j["string"] = f.to_string();
  auto v = f.as_uint64();
  j["value"] = v ? json(*v) : json();
  return j;
}

void write_report(const CommonOpts& opts, const json& doc, const std::string& text) {
  std::string payload = opts.format == "json" ? doc.dump(2) + "\n" : text;
  if (opts.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(opts.out);
  if (!f) throw std::invalid_argument("cannot open output file: " + opts.out);
  f << payload;
}

json input_json(const ParsedSpec& ps, const std::string& raw) {
  json j;
  j["n"] = ps.n;
  j["spec"] = raw;
  j["family"] = ps.family.empty() ? json() : json(ps.family);
  j["size"] = ps.set.size();
  j["tokens"] = ps.set.tokens();
  return j;
}

void append_input_text(std::ostringstream& os, const ParsedSpec& ps, const std::string& raw) {
  os << "n: " << ps.n << "\n";
  os << "spec: " << raw << "\n";
  if (!ps.family.empty()) os << "family: " << ps.family << "\n";
  os << "S (" << ps.set.size() << "):";
  for (const auto& t : ps.set.tokens()) os << " " << t;
  os << "\n";
}

struct Invariants {
  bool connected = false;
  bool inner = false;
  std::optional<int> girth_v;
  std::optional<int> diameter_v;
  std::optional<bool> bipartite;  // unset when disconnected
  int valency = 0;
  FamilyTag tag;
};

Invariants compute_invariants(const CayleyGraph& gamma) {
  Invariants iv;
  iv.connected = is_connected_graph(gamma.graph());
  iv.inner = is_inner_automorphic(gamma.connection_set());
  iv.girth_v = girth(gamma.graph());
  if (iv.connected) {
    iv.diameter_v = diameter(gamma.graph());
    iv.bipartite = bipartition(gamma.graph()).has_value();
  }
  iv.valency = gamma.connection_set().size();
  iv.tag = recognize(gamma.graph());
  return iv;
}

json invariants_json(const Invariants& iv) {
  json j;
  j["connected"] = iv.connected;
  j["inner_automorphic"] = iv.inner;
  j["girth"] = iv.girth_v ? json(*iv.girth_v) : json();
  j["diameter"] = iv.diameter_v ? json(*iv.diameter_v) : json();
  j["bipartite"] = iv.bipartite ? json(*iv.bipartite) : json();
  j["valency"] = iv.valency;
  j["recognized"] = iv.tag.to_string();
  return j;
}

void append_invariants_text(std::ostringstream& os, const Invariants& iv) {
  os << "connected: " << yn(iv.connected) << "\n";
  os << "inner_automorphic: " << yn(iv.inner) << "\n";
  os << "girth: " << (iv.girth_v ? std::to_string(*iv.girth_v) : "none") << "\n";
  os << "diameter: " << (iv.diameter_v ? std::to_string(*iv.diameter_v) : "n/a") << "\n";
  os << "bipartite: " << (iv.bipartite ? yn(*iv.bipartite) : "n/a") << "\n";
  os << "valency: " << iv.valency << "\n";
  os << "recognized: " << iv.tag.to_string() << "\n";
}

json classification_json(const ClassificationOutcome& oc) {
  json j;
  j["case"] = outcome_name(oc.kind);
  bool has_variant = oc.kind == OutcomeKind::CaseI || oc.kind == OutcomeKind::CaseII;
  j["variant"] = has_variant ? json(oc.variant) : json();
  j["parts"] = oc.kind == OutcomeKind::CaseIV ? json(oc.parts) : json();
  j["part_size"] = oc.kind == OutcomeKind::CaseIV ? json(oc.part_size) : json();
  if (oc.kind == OutcomeKind::CaseV) {
    j["pi"] = oc.pi;
    j["delta"] = oc.delta;
    std::vector<std::string> toks;
    for (int e : oc.delta) toks.push_back("r" + std::to_string(e));
    j["delta_tokens"] = toks;
    j["arc_transitive"] = oc.arc_transitive;
  } else {
    j["pi"] = json();
    j["delta"] = json();
    j["delta_tokens"] = json();
    j["arc_transitive"] = json();
  }
  return j;
}

void append_classification_text(std::ostringstream& os, const ClassificationOutcome& oc) {
  os << "case: " << outcome_name(oc.kind) << "\n";
  switch (oc.kind) {
    case OutcomeKind::CaseI:
    case OutcomeKind::CaseII:
      os << "  variant: " << oc.variant << "\n";
      break;
    case OutcomeKind::CaseIV:
      os << "  parts: " << oc.parts << " of size " << oc.part_size << "\n";
      break;
    case OutcomeKind::CaseV: {
      os << "  pi: " << oc.pi << "\n";
      os << "  delta:";
      for (int e : oc.delta) os << " r" << e;
      os << "\n";
      os << "  arc_transitive: " << yn(oc.arc_transitive) << "\n";
      break;
    }
    default:
      break;
  }
}

bool is_odd_prime(int p) {
  if (p < 3 || p % 2 == 0) return false;
  for (int d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

int cmd_classify(const CommonOpts& opts, const std::string& spec_text) {
  Stopwatch total;
  auto ps = parse_connection_spec(spec_text);
  Stopwatch t_build;
  CayleyGraph gamma(ps.set);
  double build_ms = t_build.ms();

  Stopwatch t_metrics;
  auto iv = compute_invariants(gamma);
  ClassificationOutcome oc = classify_shape(ps.set);
  double metrics_ms = t_metrics.ms();

  if (g_log >= 1) std::cerr << "classify: shape " << outcome_name(oc.kind) << ", starting automorphism search\n";
  Stopwatch t_aut;
  auto aut = automorphism_group(gamma.graph(), opts.limits);
  double aut_ms = t_aut.ms();
  if (g_log >= 1)
    std::cerr << "classify: |Aut| = " << aut.order.to_string() << " (" << aut.nodes_explored
              << " nodes, " << aut_ms << " ms)\n";

  Stopwatch t_trans;
  PermutationGroup full(aut.degree, aut.generators);
  bool arc = is_transitive_on_arcs(gamma.graph(), full, opts.limits);
  bool two_arc = is_s_arc_transitive(gamma.graph(), full, 2, opts.limits);
  bool three_arc = is_s_arc_transitive(gamma.graph(), full, 3, opts.limits);
  std::optional<bool> two_dist;
  if (iv.connected) two_dist = is_2_distance_transitive(gamma.graph(), full);
  double trans_ms = t_trans.ms();

  if (oc.kind == OutcomeKind::CaseV) {
    oc.arc_transitive = arc;
  } else if (oc.kind == OutcomeKind::NotArcTransitive && arc) {
    throw std::logic_error("arc-transitive connection set escaped every case shape: n=" +
                           std::to_string(ps.n));
  }

  json rep;
  rep["input"] = input_json(ps, spec_text);
  rep["invariants"] = invariants_json(iv);
  rep["classification"] = classification_json(oc);
  rep["aut"] = {{"nodes_explored", aut.nodes_explored}, {"order", order_json(aut.order)}};
  rep["transitivity"] = {{"arc", arc},
                         {"two_arc", two_arc},
                         {"three_arc", three_arc},
                         {"two_distance", two_dist ? json(*two_dist) : json()}};
  if (!opts.no_timings)
    rep["timings"] = {{"build_ms", build_ms},
                      {"metrics_ms", metrics_ms},
                      {"aut_ms", aut_ms},
                      {"transitivity_ms", trans_ms},
                      {"total_ms", total.ms()}};

  std::ostringstream os;
  append_input_text(os, ps, spec_text);
  append_invariants_text(os, iv);
  append_classification_text(os, oc);
  os << "aut_order: " << aut.order.to_string() << "\n";
  os << "aut_nodes: " << aut.nodes_explored << "\n";
  os << "transitivity: arc=" << yn(arc) << " 2-arc=" << yn(two_arc) << " 3-arc=" << yn(three_arc)
     << " 2-distance=" << (two_dist ? yn(*two_dist) : "n/a") << "\n";
  if (!opts.no_timings) os << "total_ms: " << total.ms() << "\n";
  write_report(opts, rep, os.str());
  return 0;
}

int cmd_invariants(const CommonOpts& opts, const std::string& spec_text) {
  Stopwatch total;
  auto ps = parse_connection_spec(spec_text);
  CayleyGraph gamma(ps.set);
  auto iv = compute_invariants(gamma);

  json rep;
  rep["input"] = input_json(ps, spec_text);
  rep["invariants"] = invariants_json(iv);
  if (!opts.no_timings) rep["timings"] = {{"total_ms", total.ms()}};

  std::ostringstream os;
  append_input_text(os, ps, spec_text);
  append_invariants_text(os, iv);
  if (!opts.no_timings) os << "total_ms: " << total.ms() << "\n";
  write_report(opts, rep, os.str());
  return 0;
}

int cmd_aut(const CommonOpts& opts, const std::string& spec_text) {
  Stopwatch total;
  auto ps = parse_connection_spec(spec_text);
  CayleyGraph gamma(ps.set);
  auto aut = automorphism_group(gamma.graph(), opts.limits);

  json gens = json::array();
  for (const auto& p : aut.generators) gens.push_back(perm_json(p));
  json rep;
  rep["input"] = input_json(ps, spec_text);
  rep["aut"] = {{"degree", aut.degree},
                {"generators", gens},
                {"nodes_explored", aut.nodes_explored},
                {"order", order_json(aut.order)}};
  if (!opts.no_timings) rep["timings"] = {{"total_ms", total.ms()}};

  std::ostringstream os;
  append_input_text(os, ps, spec_text);
  os << "aut_order: " << aut.order.to_string() << "\n";
  os << "aut_nodes: " << aut.nodes_explored << "\n";
  os << "generators: " << aut.generators.size() << " on " << aut.degree << " points\n";
  if (!opts.no_timings) os << "total_ms: " << total.ms() << "\n";
  write_report(opts, rep, os.str());
  return 0;
}

int cmd_quotient(const CommonOpts& opts, const std::string& spec_text) {
  Stopwatch total;
  auto ps = parse_connection_spec(spec_text);
  if (ps.n % 2 != 0)
    throw std::invalid_argument("quotient requires even n (needs the central rotation)");
  CayleyGraph gamma(ps.set);
  auto cop = central_orbit_partition(gamma.group());
  auto cover = quotient_with_cover_check(gamma.graph(), cop.cells);

  json rep;
  rep["input"] = input_json(ps, spec_text);
  rep["blocks"] = {{"cell_count", cop.cells.size()},
                   {"cells", cop.cells},
                   {"side_one", cop.side_one},
                   {"side_two", cop.side_two}};
  rep["quotient"] = {
      {"cover_multiplicity", cover.multiplicity ? json(*cover.multiplicity) : json()},
      {"num_edges", cover.quotient.num_edges()},
      {"num_vertices", cover.quotient.num_vertices()},
      {"recognized", cover.tag.to_string()}};

  std::ostringstream os;
  append_input_text(os, ps, spec_text);
  os << "blocks: " << cop.cells.size() << " central-orbit cells\n";
  if (!cop.side_one.empty())
    os << "sides: " << cop.side_one.size() << " odd cells, " << cop.side_two.size()
       << " even cells\n";
  os << "quotient: " << cover.tag.to_string() << " (" << cover.quotient.num_vertices()
     << " vertices, " << cover.quotient.num_edges() << " edges)\n";
  os << "cover_multiplicity: "
     << (cover.multiplicity ? std::to_string(*cover.multiplicity) : "not uniform") << "\n";

  int p = ps.n / 4;
  if (ps.n % 4 == 0 && is_odd_prime(p)) {
    auto gens = kernel_generators(p);
    bool all_aut = true;
    for (const auto& g : gens) all_aut = all_aut && is_graph_automorphism(gamma.graph(), g);
    Perm prod(2 * ps.n);
    for (const auto& g : gens) prod = prod * g;
    bool central = prod == gamma.group().right_regular(gamma.group().make(ps.n / 2, 0));
    FactoredInteger span = StabChain(2 * ps.n, gens).order();

    json kgens = json::array();
    for (const auto& g : gens) kgens.push_back(perm_json(g));
    rep["kernel"] = {{"all_automorphisms", all_aut},
                     {"generator_count", gens.size()},
                     {"generators", kgens},
                     {"product_is_central_translation", central},
                     {"span_order", order_json(span)}};
    os << "kernel: " << gens.size() << " cell transpositions, span order " << span.to_string()
       << "\n";
    os << "  all graph automorphisms: " << yn(all_aut) << "\n";
    os << "  ordered product is the central translation: " << yn(central) << "\n";
  } else {
    rep["kernel"] = json();
  }

  if (!opts.no_timings) {
    rep["timings"] = {{"total_ms", total.ms()}};
    os << "total_ms: " << total.ms() << "\n";
  }
  write_report(opts, rep, os.str());
  return 0;
}

int cmd_verify(const CommonOpts& opts, const std::string& suite, int p, int n, bool exhaustive,
               int samples, uint64_t seed) {
  Stopwatch total;
  auto need_p = [&] {
    if (p <= 0) throw std::invalid_argument("verify " + suite + " requires --p");
  };
  auto need_n = [&] {
    if (n <= 0) throw std::invalid_argument("verify " + suite + " requires --n");
  };
  CheckList list;
  if (suite == "thm14") {
    need_p();
    list = verify_thm14(p, opts.limits);
  } else if (suite == "lemma35") {
    need_n();
    list = verify_lemma35(n, opts.limits);
  } else if (suite == "lemma42") {
    need_p();
    list = verify_lemma42(p, opts.limits);
  } else if (suite == "lemma43") {
    need_p();
    list = verify_lemma43(p, opts.limits);
  } else if (suite == "lemma45") {
    need_p();
    list = verify_lemma45(p, opts.limits);
  } else if (suite == "cor12") {
    need_n();
    list = verify_cor12(n, opts.limits);
  } else if (suite == "cor13") {
    need_n();
    list = verify_cor13(n, opts.limits);
  } else if (suite == "prop21") {
    need_n();
    list = verify_prop21(n, exhaustive, samples, seed, opts.limits);
  } else {
    throw std::invalid_argument("unknown verification suite: " + suite);
  }

  json params = json::object();
  if (p > 0) params["p"] = p;
  if (n > 0) params["n"] = n;
  if (suite == "prop21") {
    params["exhaustive"] = exhaustive;
    params["samples"] = samples;
    params["seed"] = seed;
  }
  json checks = json::array();
  for (const auto& c : list.checks)
    checks.push_back({{"detail", c.detail}, {"name", c.name}, {"pass", c.pass}});
  json rep;
  rep["suite"] = suite;
  rep["params"] = params;
  rep["checks"] = checks;
  rep["all_pass"] = list.all_pass();
  if (!opts.no_timings) rep["timings"] = {{"total_ms", total.ms()}};

  std::ostringstream os;
  os << "suite: " << suite;
  if (p > 0) os << " p=" << p;
  if (n > 0) os << " n=" << n;
  os << "\n";
  int passed = 0;
  for (const auto& c : list.checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
    if (c.pass) ++passed;
  }
  os << passed << "/" << list.checks.size() << " checks passed\n";
  if (!opts.no_timings) os << "total_ms: " << total.ms() << "\n";
  write_report(opts, rep, os.str());
  return list.all_pass() ? 0 : 1;
}

std::string record_key(int n, int pi, const std::vector<int>& delta) {
  std::string key = std::to_string(n) + "|" + std::to_string(pi) + "|";
  for (size_t i = 0; i < delta.size(); ++i) {
    if (i) key += "+";
    key += std::to_string(delta[i]);
  }
  return key;
}

json scan_record_json(const ScanRecord& r) {
  json j;
  j["n"] = r.n;
  j["pi"] = r.pi;
  j["delta"] = r.delta;
  j["delta_tokens"] = r.delta_tokens;
  j["excluded_by_size"] = r.excluded_by_size;
  j["connected"] = r.excluded_by_size ? json() : json(r.connected);
  j["girth"] = r.girth ? json(*r.girth) : json();
  j["diameter"] = r.diameter ? json(*r.diameter) : json();
  bool analyzed = !r.excluded_by_size && r.connected && r.error.empty();
  j["arc_transitive"] = analyzed ? json(r.arc_transitive) : json();
  j["aut_order"] = analyzed ? factored_json(r.aut_order) : json();
  j["error"] = r.error.empty() ? json() : json(r.error);
  return j;
}

int cmd_scan(const CommonOpts& opts, const std::vector<int>& ns) {
  for (int n : ns)
    if (n < 2 || n % 2 != 0)
      throw std::invalid_argument("scan requires even n >= 2, got " + std::to_string(n));

  std::set<std::string> have;
  if (!opts.out.empty()) {
    std::ifstream in(opts.out);
    std::string line;
    while (in && std::getline(in, line)) {
      if (line.empty()) continue;
      json j = json::parse(line, nullptr, false);
      if (j.is_discarded() || !j.contains("n") || !j.contains("pi") || !j.contains("delta")) {
        if (g_log >= 1) std::cerr << "scan: ignoring malformed line in " << opts.out << "\n";
        continue;
      }
      have.insert(
          record_key(j["n"].get<int>(), j["pi"].get<int>(), j["delta"].get<std::vector<int>>()));
    }
  }

  std::ostream* os = &std::cout;
  std::ofstream f;
  if (!opts.out.empty()) {
    f.open(opts.out, std::ios::app);
    if (!f) throw std::invalid_argument("cannot open output file: " + opts.out);
    os = &f;
  }

  int jobs = opts.jobs <= 0 ? (int)std::thread::hardware_concurrency() : opts.jobs;
  for (int n : ns) {
    auto all = enumerate_case_v_deltas(n);
    std::vector<std::vector<DihedralElement>> todo;
    for (const auto& d : all) {
      std::vector<int> exps;
      for (const auto& e : d) exps.push_back(e.rot);
      std::sort(exps.begin(), exps.end());
      if (!have.count(record_key(n, 1, exps))) todo.push_back(d);
    }
    if (g_log >= 1)
      std::cerr << "scan n=" << n << ": " << todo.size() << " candidates to analyze, "
                << all.size() - todo.size() << " already present\n";
    if (jobs <= 1) {
      for (const auto& d : todo) {
        ScanRecord rec = analyze_case_v_candidate(n, d, opts.limits);
        *os << scan_record_json(rec).dump() << "\n";
        os->flush();
        if (g_log >= 2)
          std::cerr << "scan n=" << n << " delta=" << record_key(n, 1, rec.delta)
                    << (rec.excluded_by_size ? " excluded" : rec.arc_transitive ? " ARC-TRANSITIVE"
                                                                                : " done")
                    << "\n";
      }
    } else {
      auto recs = scan_case_v_candidates(n, todo, jobs, opts.limits);
      for (const auto& rec : recs) *os << scan_record_json(rec).dump() << "\n";
      os->flush();
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  g_log = log_level_from_env();
  CLI::App app{"Cayley graphs on dihedral groups: invariants, classification, verification"};
  app.require_subcommand(1);

  CommonOpts opts;
  app.add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--out", opts.out, "write output to this file (scan appends and resumes)");
  app.add_option("--jobs", opts.jobs, "worker threads for scan, 0 = all cores")
      ->capture_default_str();
  app.add_option("--node-cap", opts.limits.node_cap, "automorphism search node limit")
      ->capture_default_str();
  app.add_option("--arc-cap", opts.limits.arc_cap, "s-arc orbit size limit")
      ->capture_default_str();
  app.add_flag("--no-timings", opts.no_timings, "omit timing fields from reports");

  std::string spec_text;
  const char* spec_help =
      "connection set spec, e.g. \"n=12; S=classes(r1, f0)\" or \"n=12; S=family(thm14, p=3, "
      "pi=1)\"";
  auto* c_classify =
      app.add_subcommand("classify", "full report: invariants, case, automorphisms, transitivity");
  c_classify->add_option("spec", spec_text, spec_help)->required();
  c_classify->fallthrough();
  auto* c_inv = app.add_subcommand("invariants", "cheap invariants, no automorphism search");
  c_inv->add_option("spec", spec_text, spec_help)->required();
  c_inv->fallthrough();
  auto* c_aut = app.add_subcommand("aut", "automorphism group order and generators");
  c_aut->add_option("spec", spec_text, spec_help)->required();
  c_aut->fallthrough();
  auto* c_quot =
      app.add_subcommand("quotient", "central-orbit blocks, quotient graph, kernel transpositions");
  c_quot->add_option("spec", spec_text, spec_help)->required();
  c_quot->fallthrough();

  auto* c_verify = app.add_subcommand("verify", "run a named verification suite");
  std::string suite;
  int vp = 0, vn = 0, samples = 500;
  bool exhaustive = false;
  uint64_t seed = 1;
  c_verify
      ->add_option("name", suite,
                   "one of: thm14, lemma35, lemma42, lemma43, lemma45, cor12, cor13, prop21")
      ->required();
  c_verify->add_option("--p", vp, "odd prime parameter (suites on n = 4p)");
  c_verify->add_option("--n", vn, "rotation order parameter");
  c_verify->add_flag("--exhaustive", exhaustive, "prop21: enumerate every inverse-closed set");
  c_verify->add_option("--samples", samples, "prop21: random sample count")->capture_default_str();
  c_verify->add_option("--seed", seed, "prop21: RNG seed")->capture_default_str();
  c_verify->fallthrough();

  auto* c_scan =
      app.add_subcommand("scan", "sweep odd-rotation candidate sets at even n, JSONL output");
  std::vector<int> ns;
  c_scan->add_option("--n", ns, "even n to scan (repeatable)")->required();
  c_scan->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*c_classify) return cmd_classify(opts, spec_text);
    if (*c_inv) return cmd_invariants(opts, spec_text);
    if (*c_aut) return cmd_aut(opts, spec_text);
    if (*c_quot) return cmd_quotient(opts, spec_text);
    if (*c_verify) return cmd_verify(opts, suite, vp, vn, exhaustive, samples, seed);
    if (*c_scan) return cmd_scan(opts, ns);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << " (at position " << e.position() << ")\n";
    return 2;
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << " (limit " << e.limit() << ")\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
