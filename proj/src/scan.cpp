#include "dihedrant/scan.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "dihedrant/aut_search.hpp"
#include "dihedrant/cayley_graph.hpp"
#include "dihedrant/graph_metrics.hpp"
#include "dihedrant/perm_group.hpp"
#include "dihedrant/structure.hpp"

namespace dihedrant {

ScanRecord analyze_case_v_candidate(int n, const std::vector<DihedralElement>& delta,
                                    const Limits& limits) {
  ScanRecord rec;
  rec.n = n;
  for (const auto& e : delta) {
    rec.delta.push_back(e.rot);
    rec.delta_tokens.push_back(element_token(e));
  }
  std::sort(rec.delta.begin(), rec.delta.end());
  std::sort(rec.delta_tokens.begin(), rec.delta_tokens.end(),
            [](const std::string& a, const std::string& b) {
              return std::stoi(a.substr(1)) < std::stoi(b.substr(1));
            });
  if ((int)delta.size() > n / 2 - 2) {
    rec.excluded_by_size = true;
    return rec;
  }
  try {
    auto s = family_case_v(n, rec.pi, delta);
    rec.connected = is_connected(s);
    CayleyGraph gamma(s);
    rec.girth = girth(gamma.graph());
    if (rec.connected) {
      rec.diameter = diameter(gamma.graph());
      auto aut = automorphism_group(gamma.graph(), limits);
      rec.aut_order = aut.order;
      PermutationGroup full(aut.degree, aut.generators);
      rec.arc_transitive = is_transitive_on_arcs(gamma.graph(), full, limits);
    }
  } catch (const ResourceLimitError& e) {
    rec.error = e.what();
  }
  return rec;
}

std::vector<ScanRecord> scan_case_v_candidates(
    int n, const std::vector<std::vector<DihedralElement>>& deltas, int jobs,
    const Limits& limits) {
  std::vector<ScanRecord> records(deltas.size());
  if (jobs <= 0) jobs = (int)std::thread::hardware_concurrency();
  if (jobs <= 1 || deltas.size() <= 1) {
    for (size_t i = 0; i < deltas.size(); ++i)
      records[i] = analyze_case_v_candidate(n, deltas[i], limits);
    return records;
  }
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next.fetch_add(1); i < deltas.size(); i = next.fetch_add(1))
      records[i] = analyze_case_v_candidate(n, deltas[i], limits);
  };
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs && j < (int)deltas.size(); ++j) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return records;
}

std::vector<ScanRecord> scan_case_v(int n, int jobs, const Limits& limits) {
  return scan_case_v_candidates(n, enumerate_case_v_deltas(n), jobs, limits);
}

}  // namespace dihedrant
