#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "levelable/rational.hpp"

namespace levelable {

struct LpIterationCapExceeded : std::runtime_error {
  explicit LpIterationCapExceeded(long long cap_)
      : std::runtime_error("simplex pivot cap of " + std::to_string(cap_) + " exceeded"), cap(cap_) {}
  long long cap;
};

// Outcome of the feasibility question {M x = b, x >= 0}. Exactly one of
// `point` / `dual` is meaningful. The dual y certifies infeasibility:
// yT M <= 0 componentwise while yT b > 0.
struct FeasibilityResult {
  bool feasible = false;
  RationalVector point;
  RationalVector dual;
};

// Phase-one simplex with Bland's rule, fully exact. Sizes here are tiny
// (rows <= n after reduction), so a dense tableau is fine.
inline FeasibilityResult phase_one_feasibility(const RationalMatrix& m_in, const RationalVector& b_in,
                                               long long max_pivots = 200000) {
  const int rows = static_cast<int>(m_in.size());
  const int cols = rows ? static_cast<int>(m_in[0].size()) : 0;
  if (static_cast<int>(b_in.size()) != rows) throw std::invalid_argument("phase_one_feasibility: size mismatch");

  FeasibilityResult res;
  if (rows == 0) {
    res.feasible = true;
    res.point.assign(cols, Rational(0));
    return res;
  }

  // Flip rows so the right-hand side is nonnegative; remember the signs to
  // restore the dual at the end.
  std::vector<int> sign(rows, 1);
  // Tableau: rows x (cols + rows + 1); artificial variables form the initial
  // basis. Row 0 below is kept separately as the reduced-cost row.
  RationalMatrix t(rows, RationalVector(cols + rows + 1, Rational(0)));
  for (int i = 0; i < rows; ++i) {
    sign[i] = b_in[i] < 0 ? -1 : 1;
    for (int j = 0; j < cols; ++j) t[i][j] = sign[i] * m_in[i][j];
    t[i][cols + i] = 1;
    t[i][cols + rows] = sign[i] * b_in[i];
  }
  std::vector<int> basis(rows);
  for (int i = 0; i < rows; ++i) basis[i] = cols + i;

  // Reduced costs for minimize sum(artificials): rc_j = c_j - sum_i t[i][j].
  RationalVector rc(cols + rows + 1, Rational(0));
  for (int j = 0; j <= cols + rows; ++j) {
    Rational colsum(0);
    for (int i = 0; i < rows; ++i) colsum += t[i][j];
    rc[j] = (j >= cols && j < cols + rows ? Rational(1) : Rational(0)) - colsum;
  }

  long long pivots = 0;
  for (;;) {
    // Bland: smallest improving column.
    int enter = -1;
    for (int j = 0; j < cols + rows; ++j)
      if (rc[j] < 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;

    int leave = -1;
    Rational best_ratio;
    for (int i = 0; i < rows; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][cols + rows] / t[i][enter];
      if (leave < 0 || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0) throw std::logic_error("phase-one simplex unbounded");

    if (++pivots > max_pivots) throw LpIterationCapExceeded(max_pivots);

    const Rational pivot = t[leave][enter];
    for (auto& x : t[leave]) x /= pivot;
    for (int i = 0; i < rows; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (int j = 0; j <= cols + rows; ++j) t[i][j] -= f * t[leave][j];
    }
    if (rc[enter] != 0) {
      const Rational f = rc[enter];
      for (int j = 0; j <= cols + rows; ++j) rc[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  // Objective value = -rc[rhs].
  if (rc[cols + rows] == 0) {
    res.feasible = true;
    res.point.assign(cols, Rational(0));
    for (int i = 0; i < rows; ++i)
      if (basis[i] < cols) res.point[basis[i]] = t[i][cols + rows];
  } else {
    res.feasible = false;
    res.dual.assign(rows, Rational(0));
    for (int i = 0; i < rows; ++i) res.dual[i] = sign[i] * (Rational(1) - rc[cols + i]);
  }
  return res;
}

}  // namespace levelable
