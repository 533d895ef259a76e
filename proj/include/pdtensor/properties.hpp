#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pdtensor/theorems.hpp"

namespace pdtensor {

struct PropertyTally {
  std::string theorem_id;
  int checked = 0;
  int hypothesis_met = 0;
  int violations = 0;
  /// Bound exceeded or inconclusive.
  int skipped = 0;
};

struct PropertySuiteResult {
  std::string ring_id;
  int pairs = 0;
  std::uint64_t seed = 0;
  std::vector<PropertyTally> tallies;
  std::vector<Verdict> violations;
  /// pd verdicts of M, N and M (x) N for every pair, for recertification.
  std::vector<std::pair<PresentedModule, PdVerdict>> pd_samples;

  int total_violations() const;
};

/// Random pairs (M, N) over a catalog ring, each run through thm-1.4i,
/// thm-1.4ii, cor-1.5, fact-A.1, thm-1.6 with L = Omega^d M (d = dim R), and
/// fact-3.6 with Omega^d M against N and against a cyclic module cut by
/// nonzerodivisor linear forms.
PropertySuiteResult run_property_suite(const std::string& ring_id, int pairs, std::uint64_t seed, int threads = 1);

/// Recomputes a pd verdict from a fresh copy of the presentation: Finite(p)
/// needs beta_{p+1} = 0 and beta_p != 0, Infinite needs Omega^{depth R} M not
/// free and the certificate Betti number reproduced, -inf needs M = 0.
bool recertify(const PresentedModule& m, const PdVerdict& v);

}  // namespace pdtensor
