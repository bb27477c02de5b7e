#pragma once

#include <string>
#include <vector>

namespace hecke {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// The ten library-level checks behind the acceptance gate, with their full
// pinned parameter sets and tolerances.  Never throws: a check that errors
// out is reported as failing with the message in `detail`.
std::vector<CheckResult> run_acceptance();

// The same checks restricted to one (n, p): the exact-identity checks run at
// the requested parameters, the pinned construction checks (amplifier,
// diophantine window, decay probe) run at their fixed configuration.  At
// (2, 2) this is the complete suite.  Desk-scale guard: n in {2, 3}, p <= 13
// for n=2 and p <= 3 for n=3; otherwise throws InvalidArgument.
std::vector<CheckResult> run_selftest(int n, long p);

}  // namespace hecke
