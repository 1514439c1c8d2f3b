#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "planecensus/errors.hpp"

namespace planecensus {

/// Small dense simplex over exact rationals.
///
/// Solves  min c^T x  subject to  A x <= b,  x >= 0  by the two-phase
/// tableau method. Bland's rule (lowest eligible index) everywhere, so the
/// pivot sequence, and hence the reported optimum vertex, is deterministic
/// and cycling is impossible. Intended for tiny problems (tens of rows).
class SimplexSolver {
 public:
  using Rat = boost::multiprecision::cpp_rational;

  struct Solution {
    std::vector<Rat> x;
    Rat objective;
  };

  SimplexSolver(std::vector<std::vector<Rat>> a, std::vector<Rat> b,
                std::vector<Rat> c)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}

  Solution solve() const {
    const int m = static_cast<int>(a_.size());
    const int n = static_cast<int>(c_.size());
    // columns: n structural + m slack + m artificial + rhs
    const int cols = n + 2 * m + 1;
    std::vector<std::vector<Rat>> t(m + 1, std::vector<Rat>(cols, 0));
    std::vector<int> basis(m);
    int artificials = 0;
    for (int i = 0; i < m; ++i) {
      Rat sign = b_[i] < 0 ? Rat(-1) : Rat(1);
      for (int j = 0; j < n; ++j) t[i][j] = sign * a_[i][j];
      t[i][n + i] = sign;  // slack
      t[i][cols - 1] = sign * b_[i];
      if (b_[i] < 0) {
        t[i][n + m + i] = 1;  // artificial
        basis[i] = n + m + i;
        ++artificials;
      } else {
        basis[i] = n + i;
      }
    }

    if (artificials > 0) {
      // phase 1: minimize the sum of artificials
      auto& obj = t[m];
      for (int j = 0; j < cols; ++j) obj[j] = 0;
      for (int i = 0; i < m; ++i)
        if (basis[i] >= n + m)
          for (int j = 0; j < cols; ++j) obj[j] -= t[i][j];
      run(t, basis, cols);
      if (t[m][cols - 1] != 0) throw InfeasibleModelError("LP is infeasible");
      // drive any artificial still in the basis out on a nonzero column
      for (int i = 0; i < m; ++i) {
        if (basis[i] < n + m) continue;
        for (int j = 0; j < n + m; ++j)
          if (t[i][j] != 0) {
            pivot(t, basis, i, j, cols);
            break;
          }
      }
    }

    // phase 2 objective, priced out over the current basis
    auto& obj = t[m];
    for (int j = 0; j < cols; ++j) obj[j] = 0;
    for (int j = 0; j < n; ++j) obj[j] = c_[j];
    for (int i = 0; i < m; ++i) {
      if (basis[i] < n && c_[basis[i]] != 0) {
        Rat f = c_[basis[i]];
        for (int j = 0; j < cols; ++j) obj[j] -= f * t[i][j];
      }
    }
    run(t, basis, cols, /*forbid_artificials=*/true);

    Solution sol;
    sol.x.assign(n, 0);
    for (int i = 0; i < m; ++i)
      if (basis[i] < n) sol.x[basis[i]] = t[i][cols - 1];
    sol.objective = -t[m][cols - 1];
    return sol;
  }

 private:
  static void pivot(std::vector<std::vector<Rat>>& t, std::vector<int>& basis,
                    int row, int col, int cols) {
    Rat p = t[row][col];
    for (int j = 0; j < cols; ++j) t[row][j] /= p;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (static_cast<int>(i) == row) continue;
      Rat f = t[i][col];
      if (f == 0) continue;
      for (int j = 0; j < cols; ++j) t[i][j] -= f * t[row][j];
    }
    basis[row] = col;
  }

  void run(std::vector<std::vector<Rat>>& t, std::vector<int>& basis, int cols,
           bool forbid_artificials = false) const {
    const int m = static_cast<int>(a_.size());
    const int n = static_cast<int>(c_.size());
    const int limit = forbid_artificials ? n + m : cols - 1;
    for (;;) {
      int col = -1;
      for (int j = 0; j < limit; ++j)
        if (t[m][j] < 0) {
          col = j;
          break;
        }
      if (col < 0) return;  // optimal
      int row = -1;
      Rat best;
      for (int i = 0; i < m; ++i) {
        if (t[i][col] <= 0) continue;
        Rat ratio = t[i][cols - 1] / t[i][col];
        if (row < 0 || ratio < best ||
            (ratio == best && basis[i] < basis[row])) {
          row = i;
          best = ratio;
        }
      }
      if (row < 0) throw InfeasibleModelError("LP is unbounded");
      pivot(t, basis, row, col, cols);
    }
  }

  std::vector<std::vector<Rat>> a_;
  std::vector<Rat> b_;
  std::vector<Rat> c_;
};

}  // namespace planecensus
