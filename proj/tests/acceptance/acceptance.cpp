// Acceptance run: one line per criterion, exit status 0 only if all pass.
#include <cstdio>

#include "adsgeo/verify.hpp"

int main() {
  ads::VerifyOptions opt;
  opt.cfg = ads::ToleranceConfig::from_env();
  int failed = 0;
  ads::run_verify(opt, [&](const ads::SuiteResult& r) {
    std::printf("criterion %2d %-18s %s  (%ld/%ld checks, %.1fs)\n", r.id, r.name.c_str(),
                r.pass ? "PASS" : "FAIL", r.checks - r.failures, r.checks, r.seconds);
    std::printf("    %s\n", r.detail.c_str());
    std::fflush(stdout);
    if (!r.pass) ++failed;
  });
  std::printf("%d/%d criteria passed\n", ads::suite_count() - failed, ads::suite_count());
  return failed == 0 ? 0 : 1;
}
