// Acceptance suite: runs every reproduction criterion and prints one
// pass/fail line per criterion.
#include <chrono>
#include <cstdio>

#include "msym/verify.hpp"

namespace {

const char* kDescriptions[] = {
    "n=4 cross-ratio table",
    "five-point rows",
    "six-point rows",
    "orbit censuses",
    "orbit decomposition identities",
    "character dual pipeline (>=200 elements)",
    "multiplicity tables vs closed forms",
    "conjugation invariance",
    "combining corollaries",
    "per-family witness configurations",
    "coordinate action laws and closed-form oracles",
    "restricted-trace sparsity",
};

}  // namespace

int main() {
  int failures = 0;
  for (int k = 1; k <= 12; ++k) {
    auto start = std::chrono::steady_clock::now();
    auto results = msym::verify::run_criterion(k);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    bool pass = true;
    for (const auto& r : results) pass = pass && r.pass;
    std::printf("criterion %2d [%s]: %s (%zu checks, %lld ms)\n", k,
                kDescriptions[k - 1], pass ? "PASS" : "FAIL", results.size(),
                static_cast<long long>(ms));
    if (!pass) {
      ++failures;
      for (const auto& r : results)
        if (!r.pass)
          std::printf("    FAILED %s: %s\n", r.name.c_str(),
                      r.detail.c_str());
    }
  }
  if (failures) std::printf("%d criteria FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
