#pragma once

// Dense tableau simplex method for  min c.x  s.t.  A x = b, x >= 0,
// started from a caller-supplied basis of signed unit columns.

#include "gmt/geometry.hpp"

#include <vector>

namespace gmt {

struct LpOptions {
  double tolerance = 1e-9;
  /// Consecutive degenerate pivots after which pricing switches from Dantzig
  /// to Bland's rule for the rest of the solve.
  int degenerate_switch = 50;
  std::size_t max_entries = 16'000'000;
  bool serial = false;  // use the serial pivot kernel
};

struct LpResult {
  double value = 0.0;
  Vec x;
  std::vector<int> basis;
  int pivots = 0;
  bool bland = false;  // Bland's rule was engaged
};

/// basis[i] names a column of A that is +-e_i. Throws SizeCapExceeded when
/// the tableau would exceed max_entries, NonConvergence on an unbounded
/// objective or when the pivot limit is hit.
LpResult solve_lp(const Mat& a, const Vec& b, const Vec& c, const std::vector<int>& basis,
                  const LpOptions& options = {});

}  // namespace gmt
