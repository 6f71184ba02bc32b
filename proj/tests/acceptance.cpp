// Runs every acceptance criterion and prints one PASS/FAIL line for each.
// Usage: acceptance [seed]

#include <cstdlib>
#include <iostream>

#include "semicoh/suites.hpp"

int main(int argc, char** argv) {
  semicoh::SuiteOptions opts;
  if (argc > 1) {
    opts.seed = std::strtoull(argv[1], nullptr, 10);
  }
  int failed = 0;
  for (auto const& r : semicoh::run_suite("all", opts)) {
    std::cout << semicoh::format_result(r) << std::endl;
    failed += !r.passed();
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << "\n";
  return failed == 0 ? 0 : 1;
}
