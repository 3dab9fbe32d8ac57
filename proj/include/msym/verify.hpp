#pragma once

#include <string>
#include <vector>

#include "msym/smallcases.hpp"

namespace msym::verify {

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Runs one numbered reproduction block (1..12).
std::vector<CheckResult> run_criterion(int number, double tol = kDefaultTol);

/// Named suites exposed on the command line; each bundles criteria:
///   n4 {1}  n5 {2}  n6 {3}  orbits {4,5,10}  characters {6,12}
///   multvec-tables {7,8}  corollaries {9,11}
std::vector<std::string> suite_names();
std::vector<CheckResult> run_suite(const std::string& suite,
                                   double tol = kDefaultTol);

}  // namespace msym::verify
