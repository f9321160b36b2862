#pragma once

#include <string>
#include <vector>

namespace qgevrey {

struct CheckResult {
  std::string name;
  double error = 0.0;      // measured
  double threshold = 0.0;  // criterion
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool all_pass() const {
    for (const CheckResult& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Identity suites at the spec'd desk-scale tolerances.
//   qcore:   q-factorial identity grid + the q > 1 factorial limit
//   theta:   series/product agreement, functional equation, zero confinement,
//            empirical spiral lower bound
//   laplace: moment-identity grid
SuiteReport verify_suite(const std::string& name, bool parallel = true);

std::vector<std::string> verify_suite_names();

}  // namespace qgevrey
