#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wzcheck/claims.hpp"

namespace wzcheck {

struct RunConfig {
  std::vector<std::string> claim_ids;  // empty means every registered claim
  long p_min = 5;
  long p_max = 199;
  long oracle_max = 97;      // exact oracle cross-check runs for p <= this
  long identity_n_max = 300; // identities are checked for n = 1..this
  long telescope_grid = 120; // echoed for the telescoping grid subcommand
  int worker_count = 1;
};

struct ClaimStats {
  long pass = 0;
  long fail = 0;
  long error = 0;
  double ms = 0.0;
};

struct Report {
  RunConfig config;
  std::vector<VerificationOutcome> outcomes;
  std::vector<std::pair<std::string, ClaimStats>> per_claim;  // sorted by claim id
  long pass = 0;
  long fail = 0;
  long error = 0;
  double wall_ms = 0.0;
};

// Primes in [lo, hi], ascending. lo >= 2 and lo <= hi required.
std::vector<long> primes_in(long lo, long hi);

// Runs every selected claim over its prime domain intersected with
// [p_min, p_max] (identities over n = 1..identity_n_max). For p <= oracle_max
// both evaluation paths run and must agree; beyond that the fast path runs
// alone, falling back to exact on precision exhaustion. Outcomes are sorted
// by (claim id, p, instance order) and do not depend on worker_count.
Report run_suite(const RunConfig& config);

}  // namespace wzcheck
