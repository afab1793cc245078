// One line per acceptance criterion; exit status 1 if any fails.
#include <cstdlib>
#include <iostream>
#include <string>

#include "blocklie/acceptance.hpp"

int main(int argc, char** argv) {
  blocklie::acceptance::Config config;
  if (argc > 1) config.seed = std::stoull(argv[1]);
  const auto results = blocklie::acceptance::run_suite(config);
  std::cout << blocklie::acceptance::render_table(results);
  for (const auto& r : results)
    if (!r.passed) return EXIT_FAILURE;
  return EXIT_SUCCESS;
}
