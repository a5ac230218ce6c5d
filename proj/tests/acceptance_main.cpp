// Prints one PASS/FAIL line per acceptance criterion and fails on any FAIL.

#include "gmt/acceptance.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria 1 to 11"};
  std::uint64_t seed = 0;
  std::vector<int> only;
  app.add_option("--seed", seed)->capture_default_str();
  app.add_option("--only", only)->check(CLI::Range(1, 11));
  CLI11_PARSE(app, argc, argv);

  const auto results = gmt::run_acceptance(seed, only);
  gmt::print_report(std::cout, results);
  for (const auto& r : results) {
    if (!r.pass) return 1;
  }
  return 0;
}
