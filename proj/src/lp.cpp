#include "gmt/lp.hpp"

#include "gmt/error.hpp"
#include "gmt/kernels.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace gmt {

LpResult solve_lp(const Mat& a, const Vec& b, const Vec& c, const std::vector<int>& basis,
                  const LpOptions& options) {
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();
  if (b.size() != m || c.size() != n || static_cast<Eigen::Index>(basis.size()) != m) {
    throw Error(ErrorCode::DimensionMismatch, "solve_lp: inconsistent sizes");
  }
  const auto entries = static_cast<std::size_t>(m + 1) * static_cast<std::size_t>(n + 1);
  if (entries > options.max_entries) {
    throw Error(ErrorCode::SizeCapExceeded,
                "LP tableau of " + std::to_string(entries) + " entries exceeds the cap");
  }
  const double tol = options.tolerance;

  // last row: reduced costs, last column: right-hand side
  Tableau tab = Tableau::Zero(m + 1, n + 1);
  tab.topLeftCorner(m, n) = a;
  tab.topRightCorner(m, 1) = b;
  std::vector<int> basic = basis;
  for (Eigen::Index i = 0; i < m; ++i) {
    const int j = basic[static_cast<std::size_t>(i)];
    if (j < 0 || j >= n) throw Error(ErrorCode::InvalidInput, "solve_lp: basis column out of range");
    const double p = tab(i, j);
    if (std::abs(std::abs(p) - 1.0) > tol || tab.col(j).head(m).cwiseAbs().sum() > 1.0 + tol) {
      throw Error(ErrorCode::InvalidInput, "solve_lp: basis column is not a signed unit vector");
    }
    if (p < 0) tab.row(i) = -tab.row(i);
    if (tab(i, n) < -tol) throw Error(ErrorCode::InvalidInput, "solve_lp: initial basis infeasible");
  }
  tab.row(m).head(n) = c.transpose();
  for (Eigen::Index i = 0; i < m; ++i) {
    const int j = basic[static_cast<std::size_t>(i)];
    tab.row(m) -= c(j) * tab.row(i);
  }

  LpResult res;
  int degenerate_run = 0;
  const long limit = 50 * static_cast<long>(m + n) + 1000;
  while (true) {
    Eigen::Index enter = -1;
    if (res.bland) {
      for (Eigen::Index j = 0; j < n; ++j)
        if (tab(m, j) < -tol) {
          enter = j;
          break;
        }
    } else {
      double best = -tol;
      for (Eigen::Index j = 0; j < n; ++j)
        if (tab(m, j) < best) {
          best = tab(m, j);
          enter = j;
        }
    }
    if (enter < 0) break;

    Eigen::Index leave = -1;
    double ratio = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < m; ++i) {
      const double d = tab(i, enter);
      if (d <= tol) continue;
      const double r = tab(i, n) / d;
      if (r < ratio - tol ||
          (r <= ratio + tol && leave >= 0 &&
           basic[static_cast<std::size_t>(i)] < basic[static_cast<std::size_t>(leave)])) {
        ratio = std::min(ratio, r);
        leave = i;
      }
    }
    if (leave < 0) throw Error(ErrorCode::NonConvergence, "solve_lp: objective unbounded below");

    degenerate_run = ratio <= tol ? degenerate_run + 1 : 0;
    if (degenerate_run >= options.degenerate_switch) res.bland = true;
    if (options.serial) {
      pivot_tableau_serial(tab, leave, enter);
    } else {
      pivot_tableau(tab, leave, enter);
    }
    basic[static_cast<std::size_t>(leave)] = static_cast<int>(enter);
    if (++res.pivots > limit) throw Error(ErrorCode::NonConvergence, "solve_lp: pivot limit reached");
  }

  res.x = Vec::Zero(n);
  for (Eigen::Index i = 0; i < m; ++i) res.x(basic[static_cast<std::size_t>(i)]) = tab(i, n);
  res.value = c.dot(res.x);
  res.basis = std::move(basic);
  return res;
}

}  // namespace gmt
