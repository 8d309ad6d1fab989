#ifndef DIHEDRANT_SCAN_HPP
#define DIHEDRANT_SCAN_HPP

#include <optional>
#include <string>
#include <vector>

#include "dihedrant/dihedral.hpp"
#include "dihedrant/errors.hpp"
#include "dihedrant/factored_int.hpp"

namespace dihedrant {

struct ScanRecord {
  int n = 0;
  int pi = 1;
  std::vector<int> delta;  // rotation exponents, ascending
  std::vector<std::string> delta_tokens;
  bool excluded_by_size = false;  // |delta| > n/2 - 2: enumerated, not analyzed
  bool connected = false;
  bool arc_transitive = false;
  FactoredInteger aut_order;
  std::optional<int> girth;
  std::optional<int> diameter;
  std::string error;  // resource-cap message; empty on success
};

// Analyzes one candidate rotation set at even n with pi = 1. Oversize sets
// are recorded but not analyzed; resource caps land in the error field.
ScanRecord analyze_case_v_candidate(int n, const std::vector<DihedralElement>& delta,
                                    const Limits& limits = {});

// Analyzes the given candidates, preserving their order regardless of jobs.
std::vector<ScanRecord> scan_case_v_candidates(
    int n, const std::vector<std::vector<DihedralElement>>& deltas, int jobs = 1,
    const Limits& limits = {});

// Analyzes every candidate rotation set for the small-odd-rotation case at
// even n (pi = 1 only; the exponent-shift group automorphism carries the
// results to pi = 0). Records keep enumeration order regardless of jobs.
std::vector<ScanRecord> scan_case_v(int n, int jobs = 1, const Limits& limits = {});

}  // namespace dihedrant

#endif
