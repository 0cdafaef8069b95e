// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <cstdio>

#include "latcut/verify.hpp"

int main() {
  auto results = latcut::run_verification_suite();
  for (const auto& r : results)
    std::printf("[%s] %-38s %6.2fs  %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                r.detail.c_str());
  bool ok = latcut::all_passed(results);
  std::printf("%s\n", ok ? "acceptance: all criteria passed" : "acceptance: FAILURES present");
  return ok ? 0 : 1;
}
