// SPDX-License-Identifier: Apache-2.0
#ifndef MOBB_SIMPLEX_HPP
#define MOBB_SIMPLEX_HPP

#include <cstdint>
#include <vector>

#include "mobb/model.hpp"

namespace mobb {

/// A linear program in minimization form over bounded variables:
///   min c^T x  s.t.  row_r x {<=,=} rhs_r,  lower <= x <= upper.
/// Bounds may be +-infinity, but every variable needs at least one finite
/// bound so it has a place to rest while nonbasic.
struct LpProblem {
  std::vector<double> objective;
  std::vector<std::vector<double>> rows;
  std::vector<double> rhs;
  std::vector<RowSense> senses;
  std::vector<double> lower;
  std::vector<double> upper;

  [[nodiscard]] int num_variables() const { return static_cast<int>(objective.size()); }
  [[nodiscard]] int num_rows() const { return static_cast<int>(rows.size()); }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

/// Outcome of a solve. `x` is always a basic solution, i.e. a vertex of the
/// feasible region. `row_duals[r]` is d(objective)/d(rhs_r); with the
/// minimization convention used here the dual of a binding <= row is <= 0.
struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  std::vector<double> x;
  double objective_value = 0.0;
  std::vector<double> row_duals;
};

/// Two-phase primal simplex over bounded variables with dense LU
/// refactorization each iteration. Dantzig pricing, falling back to Bland's
/// rule after a stretch of degenerate pivots so cycling cannot occur.
/// Instances here are small (tens of columns, around ten rows), so the
/// dense per-iteration factorization is the simplest robust choice.
class SimplexSolver {
 public:
  LpResult solve(const LpProblem& problem);

 private:
  // Working arrays, reused across solves to avoid churn.
  std::vector<double> value_;      // current value per column
  std::vector<double> cost_;       // phase objective per column
  std::vector<double> col_lower_;  // bounds per column (structural+slack+artificial)
  std::vector<double> col_upper_;
  std::vector<int> basis_;         // basic column per row
  std::vector<char> at_upper_;     // nonbasic rest position per column
  std::vector<char> in_basis_;
  std::vector<double> art_sign_;   // +-1 entry of each artificial column
  std::vector<double> lu_;         // dense LU factors, row-major
  std::vector<int> perm_;
  std::vector<double> work_row_;   // duals / BTRAN result
  std::vector<double> work_col_;   // FTRAN result

  int rows_ = 0;
  int total_cols_ = 0;
  const LpProblem* problem_ = nullptr;

  double column_entry(int row, int col) const;
  void factorize();
  void solve_lower_upper(std::vector<double>& x) const;
  void solve_transposed(std::vector<double>& x) const;
  void compute_basic_values();
  void compute_duals(std::vector<double>& pi) const;
  bool price(const std::vector<double>& pi, bool bland, int& entering, double& direction) const;
  bool run_phase(bool phase_one);
};

/// LP relaxation of a subproblem: the instance rows with the node's variable
/// bounds and an all-zero objective, ready for a caller-supplied objective.
LpProblem lp_relaxation(const MoilpInstance& instance, const Subproblem& sub);

/// Minimize the weighted sum  sum_k weights[k] * (Cx)_k  over the relaxation.
LpResult solve_weighted_sum(SimplexSolver& solver, const MoilpInstance& instance, const Subproblem& sub,
                            const std::vector<double>& weights);

}  // namespace mobb

#endif  // MOBB_SIMPLEX_HPP
