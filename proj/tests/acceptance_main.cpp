// Runs every verification criterion and prints one pass/fail line per
// criterion; the exit code reflects the aggregate.

#include <cstdio>

#include "gmlab/acceptance.hpp"

int main() {
  const auto results = gmlab::run_acceptance();
  bool all_pass = true;
  for (const auto& r : results) {
    std::printf("[%s] criterion %2d: %s — %s\n", r.pass ? "PASS" : "FAIL", r.id,
                r.title.c_str(), r.detail.c_str());
    all_pass &= r.pass;
  }
  std::printf("%s: %zu criteria\n", all_pass ? "ALL PASS" : "FAILURES PRESENT",
              results.size());
  return all_pass ? 0 : 1;
}
