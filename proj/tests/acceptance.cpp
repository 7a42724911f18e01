// Runs the ten acceptance criteria and prints one PASS/FAIL line each.
// Usage: epcont_acceptance [criterion-number] [figure-dir]

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "epcont/verify.hpp"

int main(int argc, char** argv) {
  epcont::SuiteOptions options;
  std::optional<int> only;
  if (argc > 1 && std::string(argv[1]) != "all") only = std::atoi(argv[1]);
  if (argc > 2) options.figure_dir = argv[2];
  const auto results = epcont::run_acceptance(options, only);
  epcont::print_results(std::cout, results);
  for (const auto& r : results) {
    if (!r.pass) return 1;
  }
  return 0;
}
