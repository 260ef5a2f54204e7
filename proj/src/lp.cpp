#include "tropsvm/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tropsvm {

namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kFeasTol = 1e-7;

// Full-tableau simplex state for maximization over nonnegative variables.
// Column layout: [0, n_struct) split structural vars, [n_struct, n_struct+r)
// slacks, then artificials, last column the right-hand side.
struct Tableau {
  std::vector<std::vector<double>> t;  // r constraint rows
  std::vector<double> obj;             // phase-2 objective row (z_j - c_j form)
  std::vector<double> aux;             // phase-1 objective row
  std::vector<int> basis;              // basic column per row
  std::size_t cols = 0;
  std::size_t price_limit = 0;         // columns eligible to enter
  double objective_value = 0.0;
  double aux_value = 0.0;

  void pivot(std::size_t prow, std::size_t pcol) {
    std::vector<double>& pr = t[prow];
    const double piv = pr[pcol];
    for (double& v : pr) v /= piv;
    pr[pcol] = 1.0;  // kill round-off on the pivot itself
    auto eliminate = [&](std::vector<double>& row, double& rhs_acc) {
      const double f = row[pcol];
      if (f == 0.0) return;
      for (std::size_t j = 0; j < cols; ++j) row[j] -= f * pr[j];
      row[pcol] = 0.0;
      rhs_acc -= f * pr[cols];
    };
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i == prow) continue;
      const double f = t[i][pcol];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= f * pr[j];
      t[i][pcol] = 0.0;
    }
    eliminate(obj, objective_value);
    eliminate(aux, aux_value);
    basis[prow] = static_cast<int>(pcol);
  }

  // Lowest-ratio row for an entering column; ties resolved on the smallest
  // basic column index (Bland) for determinism and anti-cycling.
  int ratio_row(std::size_t pcol) const {
    int best = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < t.size(); ++i) {
      const double a = t[i][pcol];
      if (a <= kPivotTol) continue;
      const double ratio = t[i][cols] / a;
      if (ratio < best_ratio - 1e-12 ||
          (ratio < best_ratio + 1e-12 && (best < 0 || basis[i] < basis[best]))) {
        best_ratio = ratio;
        best = static_cast<int>(i);
      }
    }
    return best;
  }
};

enum class PhaseResult { Done, Unbounded, Stuck };

// Runs simplex on `row` (obj or aux) until no improving column remains.
PhaseResult run_phase(Tableau& tb, std::vector<double>& price, double& value) {
  const std::size_t cap = 10000 + 200 * (tb.t.size() + tb.cols);
  std::size_t iters = 0;
  std::size_t stall = 0;
  bool bland = false;
  while (true) {
    if (++iters > cap) return PhaseResult::Stuck;
    int enter = -1;
    if (bland) {
      for (std::size_t j = 0; j < tb.price_limit; ++j)
        if (price[j] < -kPivotTol) {
          enter = static_cast<int>(j);
          break;
        }
    } else {
      double best = -kPivotTol;
      for (std::size_t j = 0; j < tb.price_limit; ++j)
        if (price[j] < best) {
          best = price[j];
          enter = static_cast<int>(j);
        }
    }
    if (enter < 0) return PhaseResult::Done;
    const int leave = tb.ratio_row(static_cast<std::size_t>(enter));
    if (leave < 0) return PhaseResult::Unbounded;
    const double before = value;
    tb.pivot(static_cast<std::size_t>(leave), static_cast<std::size_t>(enter));
    if (value > before + 1e-12) {
      stall = 0;
      bland = false;
    } else if (++stall > 64) {
      bland = true;  // Bland's rule breaks any degenerate cycle
    }
  }
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
  const std::size_t r = lp.rows();
  const std::size_t m = lp.vars();
  if (m == 0) throw std::invalid_argument("lp needs at least one variable");
  if (lp.b.size() != r) throw std::invalid_argument("lp rhs size mismatch");
  for (const auto& row : lp.A)
    if (row.size() != m) throw std::invalid_argument("lp row size mismatch");

  double bscale = 1.0;
  for (double v : lp.b) bscale = std::max(bscale, std::fabs(v));
  const double feas_tol = kFeasTol * bscale;

  const std::size_t n_struct = 2 * m;  // u = u+ - u-
  std::size_t n_art = 0;
  for (double v : lp.b)
    if (v < 0.0) ++n_art;

  Tableau tb;
  tb.cols = n_struct + r + n_art;
  tb.price_limit = n_struct + r;  // artificials never re-enter
  tb.t.assign(r, std::vector<double>(tb.cols + 1, 0.0));
  tb.basis.assign(r, -1);
  tb.obj.assign(tb.cols + 1, 0.0);
  tb.aux.assign(tb.cols + 1, 0.0);

  std::size_t art = n_struct + r;
  for (std::size_t i = 0; i < r; ++i) {
    const double sign = lp.b[i] < 0.0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < m; ++j) {
      tb.t[i][2 * j] = sign * lp.A[i][j];
      tb.t[i][2 * j + 1] = -sign * lp.A[i][j];
    }
    tb.t[i][n_struct + i] = sign;  // slack
    tb.t[i][tb.cols] = sign * lp.b[i];
    if (sign < 0.0) {
      tb.t[i][art] = 1.0;
      tb.basis[i] = static_cast<int>(art);
      ++art;
    } else {
      tb.basis[i] = static_cast<int>(n_struct + i);
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    tb.obj[2 * j] = -lp.c[j];
    tb.obj[2 * j + 1] = lp.c[j];
  }

  if (n_art > 0) {
    // Phase 1: maximize -(sum of artificials); price out the basic ones.
    for (std::size_t j = n_struct + r; j < tb.cols; ++j) tb.aux[j] = 1.0;
    for (std::size_t i = 0; i < r; ++i) {
      if (tb.basis[i] < static_cast<int>(n_struct + r)) continue;
      for (std::size_t j = 0; j <= tb.cols; ++j) tb.aux[j] -= tb.t[i][j];
    }
    tb.aux_value = tb.aux[tb.cols];
    const PhaseResult res = run_phase(tb, tb.aux, tb.aux_value);
    if (res == PhaseResult::Stuck) throw NumericalError("simplex phase 1 exceeded iteration cap");
    if (res == PhaseResult::Unbounded) throw NumericalError("simplex phase 1 unbounded");
    double infeasibility = 0.0;
    for (std::size_t i = 0; i < r; ++i)
      if (tb.basis[i] >= static_cast<int>(n_struct + r)) infeasibility += tb.t[i][tb.cols];
    if (infeasibility > feas_tol) return {LpStatus::Infeasible, 0.0, {}};
    // Drive basic artificials out where possible; an all-zero row is a
    // redundant constraint and can keep its zero-valued artificial.
    for (std::size_t i = 0; i < r; ++i) {
      if (tb.basis[i] < static_cast<int>(n_struct + r)) continue;
      for (std::size_t j = 0; j < n_struct + r; ++j) {
        if (std::fabs(tb.t[i][j]) > kPivotTol) {
          tb.pivot(i, j);
          break;
        }
      }
    }
  }

  const PhaseResult res = run_phase(tb, tb.obj, tb.objective_value);
  if (res == PhaseResult::Stuck) throw NumericalError("simplex phase 2 exceeded iteration cap");
  if (res == PhaseResult::Unbounded) return {LpStatus::Unbounded, 0.0, {}};

  std::vector<double> split(n_struct, 0.0);
  for (std::size_t i = 0; i < r; ++i)
    if (tb.basis[i] >= 0 && tb.basis[i] < static_cast<int>(n_struct))
      split[static_cast<std::size_t>(tb.basis[i])] = tb.t[i][tb.cols];

  LpSolution sol;
  sol.status = LpStatus::Optimal;
  sol.point.resize(m);
  for (std::size_t j = 0; j < m; ++j) sol.point[j] = split[2 * j] - split[2 * j + 1];
  sol.value = 0.0;
  for (std::size_t j = 0; j < m; ++j) sol.value += lp.c[j] * sol.point[j];

  // Never report an infeasible point as Optimal.
  for (std::size_t i = 0; i < r; ++i) {
    double lhs = 0.0;
    for (std::size_t j = 0; j < m; ++j) lhs += lp.A[i][j] * sol.point[j];
    if (lhs > lp.b[i] + feas_tol) throw NumericalError("simplex returned an infeasible point");
  }
  return sol;
}

}  // namespace tropsvm
