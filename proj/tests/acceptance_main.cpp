// Gate binary: runs the ten library-level checks end to end and prints one
// verdict line each.  Exit status is the number of failing checks.

#include <cstdio>

#include "hecke/selfcheck.hpp"

int main() {
  std::vector<hecke::CheckResult> results = hecke::run_acceptance();
  int failed = 0;
  for (const hecke::CheckResult& r : results) {
    std::printf("%s %-24s %s [%.1fs]\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                r.detail.c_str(), r.seconds);
    std::fflush(stdout);
    if (!r.pass) ++failed;
  }
  std::printf("%d/%zu checks passed\n", static_cast<int>(results.size()) - failed,
              results.size());
  return failed;
}
