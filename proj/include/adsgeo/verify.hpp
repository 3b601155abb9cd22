#pragma once
#include <functional>
#include <string>
#include <vector>

#include "adsgeo/semi_euclidean.hpp"

namespace ads {

struct SuiteResult {
  int id = 0;
  std::string name;
  bool pass = false;
  long checks = 0;
  long failures = 0;
  double worst = 0;  // worst normalized residual seen by the suite
  std::string detail;
  double seconds = 0;
};

struct VerifyOptions {
  unsigned seed = 1;
  ToleranceConfig cfg;
};

int suite_count();
std::string suite_name(int id);  // 1-based
SuiteResult run_suite(int id, const VerifyOptions& opt = {});
// runs suites in order; `progress` sees each result as it finishes
std::vector<SuiteResult> run_verify(const VerifyOptions& opt = {},
                                    const std::function<void(const SuiteResult&)>& progress = {});

std::string format_suite_line(const SuiteResult& r);

}  // namespace ads
