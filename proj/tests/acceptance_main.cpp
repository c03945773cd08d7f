// Acceptance gate: runs the full verification catalogue and prints one
// PASS/FAIL line per criterion.  Exit code 0 only when every criterion holds.
#include "gw/catalog.hpp"

#include <cstdio>

int main() {
  std::vector<gw::CriterionResult> results = gw::run_catalog();
  std::int64_t total = 0;
  for (const gw::CriterionResult& r : results) {
    std::puts(gw::format_result_line(r).c_str());
    total += r.millis;
  }
  std::printf("total: %lld ms, %zu/%zu criteria passed\n", static_cast<long long>(total),
              static_cast<std::size_t>(std::count_if(results.begin(), results.end(),
                                                     [](const auto& r) { return r.passed; })),
              results.size());
  return gw::all_passed(results) ? 0 : 2;
}
