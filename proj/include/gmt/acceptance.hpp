#pragma once

// The acceptance suite: criteria 1 to 11, each reduced to a PASS/FAIL line.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace gmt {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;          // one line, fixed precision
  std::vector<double> digest;  // raw numbers, compared bitwise by the determinism check
};

/// Throws InvalidInput for ids outside 1..10 (11 needs the others, see below).
CriterionResult run_criterion(int id, std::uint64_t seed);

/// Runs the selected criteria (all when empty). Criterion 11 reruns every
/// other selected criterion and compares lines and digests bit for bit.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed, const std::vector<int>& only = {});

/// "PASS  3 coning: ..." or "FAIL  3 coning: ..."
std::string format_line(const CriterionResult& r);

void print_report(std::ostream& out, const std::vector<CriterionResult>& results);

}  // namespace gmt
