// Acceptance gate: runs the full-scale check suite and prints one line per
// criterion. Exit status is nonzero when any criterion fails.
#include <chrono>
#include <cstdio>

#include "gridsight/verify.hpp"

int main() {
  gridsight::VerifySettings s;
  s.full = true;
  s.rays = 64;
  s.seed = 8675309;

  bool all = true;
  int idx = 0;
  for (const auto& r : gridsight::run_all_checks(s)) {
    ++idx;
    std::printf("[%s] %2d. %s — %s\n", r.pass ? "PASS" : "FAIL", idx, r.name.c_str(),
                r.detail.c_str());
    std::fflush(stdout);
    all = all && r.pass;
  }
  std::printf("%s\n", all ? "ACCEPTANCE: all criteria passed"
                          : "ACCEPTANCE: criteria FAILED");
  return all ? 0 : 1;
}
