// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>

#include "dp1/verify.hpp"

int main() {
  auto start = std::chrono::steady_clock::now();
  std::vector<dp1::CriterionResult> results;
  try {
    results = dp1::run_acceptance("all");
  } catch (const std::exception& e) {
    std::fprintf(stderr, "FATAL: %s\n", e.what());
    return 1;
  }
  int failed = 0;
  for (const auto& r : results) {
    std::printf("[%s] %2d %-55s %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.detail.c_str());
    if (!r.pass) ++failed;
  }
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d/%zu criteria passed in %.2fs\n",
              static_cast<int>(results.size()) - failed, results.size(), secs);
  return failed == 0 ? 0 : 1;
}
