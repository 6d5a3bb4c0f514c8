// SPDX-License-Identifier: Apache-2.0
#include "mobb/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mobb/errors.hpp"
#include "mobb/tolerances.hpp"

namespace mobb {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kReducedCostTol = 1e-9;

void validate(const LpProblem& p) {
  const int n = p.num_variables();
  const int m = p.num_rows();
  if (static_cast<int>(p.lower.size()) != n || static_cast<int>(p.upper.size()) != n)
    throw std::invalid_argument("lp: bound vectors must match variable count");
  if (static_cast<int>(p.rhs.size()) != m || static_cast<int>(p.senses.size()) != m)
    throw std::invalid_argument("lp: rhs/senses must match row count");
  for (int r = 0; r < m; ++r) {
    if (static_cast<int>(p.rows[r].size()) != n)
      throw std::invalid_argument("lp: row " + std::to_string(r) + " has wrong length");
    if (!std::isfinite(p.rhs[r])) throw std::invalid_argument("lp: rhs must be finite");
  }
  for (int j = 0; j < n; ++j) {
    if (p.lower[j] > p.upper[j]) throw std::invalid_argument("lp: empty bound interval");
    if (p.lower[j] == -kInf && p.upper[j] == kInf)
      throw std::invalid_argument("lp: every variable needs a finite bound");
  }
}

}  // namespace

double SimplexSolver::column_entry(int row, int col) const {
  const int n = problem_->num_variables();
  const int m = rows_;
  if (col < n) return problem_->rows[row][col];
  if (col < n + m) return col - n == row ? 1.0 : 0.0;
  return col - (n + m) == row ? art_sign_[col - (n + m)] : 0.0;
}

void SimplexSolver::factorize() {
  const int m = rows_;
  lu_.assign(static_cast<std::size_t>(m) * m, 0.0);
  perm_.resize(m);
  for (int i = 0; i < m; ++i) {
    perm_[i] = i;
    for (int j = 0; j < m; ++j) lu_[static_cast<std::size_t>(i) * m + j] = column_entry(i, basis_[j]);
  }
  for (int k = 0; k < m; ++k) {
    int pivot_row = k;
    double best = std::abs(lu_[static_cast<std::size_t>(k) * m + k]);
    for (int i = k + 1; i < m; ++i) {
      const double cand = std::abs(lu_[static_cast<std::size_t>(i) * m + k]);
      if (cand > best) {
        best = cand;
        pivot_row = i;
      }
    }
    if (best < kZeroPivotTol) throw NumericalError("simplex: singular basis matrix");
    if (pivot_row != k) {
      for (int j = 0; j < m; ++j)
        std::swap(lu_[static_cast<std::size_t>(k) * m + j], lu_[static_cast<std::size_t>(pivot_row) * m + j]);
      std::swap(perm_[k], perm_[pivot_row]);
    }
    const double pivot = lu_[static_cast<std::size_t>(k) * m + k];
    for (int i = k + 1; i < m; ++i) {
      const double factor = lu_[static_cast<std::size_t>(i) * m + k] / pivot;
      lu_[static_cast<std::size_t>(i) * m + k] = factor;
      for (int j = k + 1; j < m; ++j)
        lu_[static_cast<std::size_t>(i) * m + j] -= factor * lu_[static_cast<std::size_t>(k) * m + j];
    }
  }
}

// Solve B x = rhs with the current factors (PB = LU).
void SimplexSolver::solve_lower_upper(std::vector<double>& x) const {
  const int m = rows_;
  std::vector<double> t(m);
  for (int i = 0; i < m; ++i) t[i] = x[perm_[i]];
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < i; ++j) t[i] -= lu_[static_cast<std::size_t>(i) * m + j] * t[j];
  }
  for (int i = m - 1; i >= 0; --i) {
    for (int j = i + 1; j < m; ++j) t[i] -= lu_[static_cast<std::size_t>(i) * m + j] * t[j];
    t[i] /= lu_[static_cast<std::size_t>(i) * m + i];
  }
  x = t;
}

// Solve B^T x = rhs:  B^T = U^T L^T P, so forward through U^T, back through
// L^T, then undo the row permutation.
void SimplexSolver::solve_transposed(std::vector<double>& x) const {
  const int m = rows_;
  std::vector<double> z(m);
  for (int i = 0; i < m; ++i) {
    z[i] = x[i];
    for (int j = 0; j < i; ++j) z[i] -= lu_[static_cast<std::size_t>(j) * m + i] * z[j];
    z[i] /= lu_[static_cast<std::size_t>(i) * m + i];
  }
  for (int i = m - 1; i >= 0; --i) {
    for (int j = i + 1; j < m; ++j) z[i] -= lu_[static_cast<std::size_t>(j) * m + i] * z[j];
  }
  for (int i = 0; i < m; ++i) x[perm_[i]] = z[i];
}

void SimplexSolver::compute_basic_values() {
  const int m = rows_;
  std::vector<double> residual(m);
  for (int r = 0; r < m; ++r) {
    double acc = problem_->rhs[r];
    for (int j = 0; j < total_cols_; ++j) {
      if (!in_basis_[j] && value_[j] != 0.0) acc -= column_entry(r, j) * value_[j];
    }
    residual[r] = acc;
  }
  if (m > 0) solve_lower_upper(residual);
  for (int r = 0; r < m; ++r) value_[basis_[r]] = residual[r];
}

void SimplexSolver::compute_duals(std::vector<double>& pi) const {
  pi.resize(rows_);
  for (int r = 0; r < rows_; ++r) pi[r] = cost_[basis_[r]];
  if (rows_ > 0) solve_transposed(pi);
}

bool SimplexSolver::price(const std::vector<double>& pi, bool bland, int& entering, double& direction) const {
  entering = -1;
  direction = 0.0;
  double best = kReducedCostTol;
  for (int j = 0; j < total_cols_; ++j) {
    if (in_basis_[j] || col_lower_[j] == col_upper_[j]) continue;
    double d = cost_[j];
    for (int r = 0; r < rows_; ++r) {
      const double a = column_entry(r, j);
      if (a != 0.0) d -= pi[r] * a;
    }
    double dir;
    if (!at_upper_[j] && d < -kReducedCostTol)
      dir = 1.0;
    else if (at_upper_[j] && d > kReducedCostTol)
      dir = -1.0;
    else
      continue;
    if (bland) {
      entering = j;
      direction = dir;
      return true;
    }
    if (std::abs(d) > best) {
      best = std::abs(d);
      entering = j;
      direction = dir;
    }
  }
  return entering >= 0;
}

bool SimplexSolver::run_phase(bool phase_one) {
  const int iteration_limit = 2000 + 200 * total_cols_;
  int degenerate_streak = 0;
  bool bland = false;
  std::vector<double> pi;
  std::vector<double> w;

  for (int iter = 0; iter < iteration_limit; ++iter) {
    factorize();
    compute_basic_values();
    compute_duals(pi);

    int entering;
    double sigma;
    if (!price(pi, bland, entering, sigma)) return true;

    w.resize(rows_);
    for (int r = 0; r < rows_; ++r) w[r] = column_entry(r, entering);
    if (rows_ > 0) solve_lower_upper(w);

    // Ratio test: how far the entering variable can move before it flips to
    // its opposite bound or some basic variable hits one of its own.
    double t_best = col_upper_[entering] - col_lower_[entering];
    int leaving = -1;
    bool leaving_to_upper = false;
    double leaving_pivot = 0.0;
    for (int r = 0; r < rows_; ++r) {
      const double a = sigma * w[r];
      const int b = basis_[r];
      double t;
      bool to_upper;
      if (a > kZeroPivotTol) {
        if (col_lower_[b] == -kInf) continue;
        t = (value_[b] - col_lower_[b]) / a;
        to_upper = false;
      } else if (a < -kZeroPivotTol) {
        if (col_upper_[b] == kInf) continue;
        t = (col_upper_[b] - value_[b]) / (-a);
        to_upper = true;
      } else {
        continue;
      }
      t = std::max(t, 0.0);
      const bool strictly_smaller = t < t_best - 1e-12;
      const bool tie = !strictly_smaller && t <= t_best + 1e-12 && leaving >= 0;
      const bool wins_tie =
          tie && (bland ? basis_[r] < basis_[leaving] : std::abs(w[r]) > std::abs(leaving_pivot));
      if (strictly_smaller || (t <= t_best + 1e-12 && leaving < 0 && t < t_best) || wins_tie) {
        t_best = t;
        leaving = r;
        leaving_to_upper = to_upper;
        leaving_pivot = w[r];
      }
    }

    if (t_best == kInf) {
      if (phase_one) throw NumericalError("simplex: phase one unbounded");
      return false;
    }

    if (t_best <= 1e-9) {
      if (++degenerate_streak > 2 * (problem_->num_variables() + rows_)) bland = true;
    } else {
      degenerate_streak = 0;
    }

    if (leaving < 0) {
      // Bound flip: the entering variable crosses to its other bound.
      at_upper_[entering] = !at_upper_[entering];
      value_[entering] = at_upper_[entering] ? col_upper_[entering] : col_lower_[entering];
      continue;
    }

    const int leaving_col = basis_[leaving];
    in_basis_[leaving_col] = 0;
    at_upper_[leaving_col] = leaving_to_upper;
    value_[leaving_col] = leaving_to_upper ? col_upper_[leaving_col] : col_lower_[leaving_col];
    value_[entering] += sigma * t_best;
    in_basis_[entering] = 1;
    basis_[leaving] = entering;
  }
  throw IterationLimitError("simplex: iteration limit reached");
}

LpResult SimplexSolver::solve(const LpProblem& problem) {
  validate(problem);
  problem_ = &problem;
  const int n = problem.num_variables();
  const int m = problem.num_rows();
  rows_ = m;
  total_cols_ = n + 2 * m;

  value_.assign(total_cols_, 0.0);
  cost_.assign(total_cols_, 0.0);
  col_lower_.assign(total_cols_, 0.0);
  col_upper_.assign(total_cols_, 0.0);
  at_upper_.assign(total_cols_, 0);
  in_basis_.assign(total_cols_, 0);
  basis_.resize(m);
  art_sign_.assign(m, 1.0);

  for (int j = 0; j < n; ++j) {
    col_lower_[j] = problem.lower[j];
    col_upper_[j] = problem.upper[j];
    at_upper_[j] = problem.lower[j] == -kInf ? 1 : 0;
    value_[j] = at_upper_[j] ? col_upper_[j] : col_lower_[j];
  }
  double rhs_scale = 0.0;
  for (int r = 0; r < m; ++r) {
    const int slack = n + r;
    col_lower_[slack] = 0.0;
    col_upper_[slack] = problem.senses[r] == RowSense::LessEqual ? kInf : 0.0;
    value_[slack] = 0.0;
    rhs_scale = std::max(rhs_scale, std::abs(problem.rhs[r]));
  }
  for (int r = 0; r < m; ++r) {
    double residual = problem.rhs[r];
    for (int j = 0; j < n; ++j) residual -= problem.rows[r][j] * value_[j];
    art_sign_[r] = residual < 0.0 ? -1.0 : 1.0;
    const int art = n + m + r;
    col_lower_[art] = 0.0;
    col_upper_[art] = kInf;
    value_[art] = std::abs(residual);
    basis_[r] = art;
    in_basis_[art] = 1;
    cost_[art] = 1.0;
  }

  LpResult result;
  if (m > 0) {
    run_phase(true);
    double infeasibility = 0.0;
    for (int r = 0; r < m; ++r) infeasibility += value_[n + m + r];
    if (infeasibility > kFeasibilityTol * (1.0 + rhs_scale)) {
      result.status = LpStatus::Infeasible;
      return result;
    }
    // Pin the artificials at zero for phase two; any still basic stay
    // degenerate at zero and simply never move again.
    for (int r = 0; r < m; ++r) {
      const int art = n + m + r;
      col_upper_[art] = 0.0;
      value_[art] = std::max(0.0, std::min(value_[art], 0.0));
    }
  }

  std::fill(cost_.begin(), cost_.end(), 0.0);
  for (int j = 0; j < n; ++j) cost_[j] = problem.objective[j];
  if (!run_phase(false)) {
    result.status = LpStatus::Unbounded;
    return result;
  }

  result.status = LpStatus::Optimal;
  result.x.assign(value_.begin(), value_.begin() + n);
  result.objective_value = 0.0;
  for (int j = 0; j < n; ++j) result.objective_value += problem.objective[j] * result.x[j];
  if (m > 0) {
    factorize();
    compute_duals(result.row_duals);
  }
  return result;
}

LpProblem lp_relaxation(const MoilpInstance& instance, const Subproblem& sub) {
  LpProblem lp;
  const int n = instance.num_variables;
  const int m = instance.num_constraints();
  lp.objective.assign(n, 0.0);
  lp.rows.assign(m, std::vector<double>(n));
  lp.rhs.resize(m);
  lp.senses = instance.senses;
  lp.lower.resize(n);
  lp.upper.resize(n);
  for (int r = 0; r < m; ++r) {
    for (int j = 0; j < n; ++j) lp.rows[r][j] = instance.constraint[r][j].to_double();
    lp.rhs[r] = instance.rhs[r].to_double();
  }
  for (int j = 0; j < n; ++j) {
    lp.lower[j] = static_cast<double>(sub.lower[j]);
    lp.upper[j] = static_cast<double>(sub.upper[j]);
  }
  return lp;
}

LpResult solve_weighted_sum(SimplexSolver& solver, const MoilpInstance& instance, const Subproblem& sub,
                            const std::vector<double>& weights) {
  if (static_cast<int>(weights.size()) != instance.num_objectives)
    throw std::invalid_argument("weighted sum: weight count must match objectives");
  LpProblem lp = lp_relaxation(instance, sub);
  for (int j = 0; j < instance.num_variables; ++j) {
    double c = 0.0;
    for (int k = 0; k < instance.num_objectives; ++k)
      c += weights[k] * static_cast<double>(instance.objective[k][j]);
    lp.objective[j] = c;
  }
  return solver.solve(lp);
}

}  // namespace mobb
