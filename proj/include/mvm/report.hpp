#pragma once

#include <string>
#include <vector>

#include "mvm/multiset.hpp"

namespace mvm {

// One named check of the classification and its corollaries. `flagged`
// marks a spot where the literal star-involutivity definition disagrees
// with the claimed classification of star-involutive groups (the B1
// groups); it is reported, counted separately, and not treated as a
// failure in either direction.
struct CheckResult {
  enum class Status { ok, fail, flagged };

  std::string name;
  Status status = Status::ok;
  std::string detail;
};

struct ReportOptions {
  Count n_max = 4;
  Count xn_max = 12;
  unsigned jobs = 1;
};

// Runs the whole battery: per-n census invariants, the seven single-valued
// monoids, the X_n and 4k+3 families, the non-associative residue magma,
// isomorphism machinery (diagonal invariance, self-dual swaps, the four
// cross-series conditions) and the inclusion chain with strictness
// witnesses.
std::vector<CheckResult> corollary_report(const ReportOptions& opts = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace mvm
