// SPDX-License-Identifier: Apache-2.0
#ifndef MOBB_MODEL_HPP
#define MOBB_MODEL_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mobb/rational.hpp"

namespace mobb {

class LowerBoundSet;

enum class RowSense { LessEqual, Equal };

/// Raw data of a multi-objective knapsack instance (maximization form).
struct KnapsackData {
  int p = 0;
  int n = 0;
  std::int64_t capacity = 0;
  std::vector<std::int64_t> weights;                // n
  std::vector<std::vector<std::int64_t>> profits;   // p x n
};

/// Raw data of a multi-objective generalized assignment instance
/// (minimization form; machines x jobs grid).
struct GapData {
  int p = 0;
  int machines = 0;
  int jobs = 0;
  std::vector<std::int64_t> capacities;                          // machines
  std::vector<std::vector<std::int64_t>> resources;              // machines x jobs
  std::vector<std::vector<std::vector<std::int64_t>>> costs;     // p x machines x jobs
};

/// A multi-objective integer linear program in internal minimization form:
///   min Cx  s.t.  Ax {<=,=} b,  l <= x <= u,  x integer.
/// Objective coefficients are integer so images of integer points are exact;
/// constraint data is rational so feasibility checks are exact too.
struct MoilpInstance {
  int num_objectives = 0;  // p, 2 or 3
  int num_variables = 0;   // n

  std::vector<std::vector<std::int64_t>> objective;  // p x n, minimization sense
  std::vector<std::vector<Rational>> constraint;     // m x n
  std::vector<Rational> rhs;                         // m
  std::vector<RowSense> senses;                      // m
  std::vector<std::int64_t> lower;                   // n
  std::vector<std::int64_t> upper;                   // n

  /// True when the user-facing problem maximizes; display images negate Cx.
  bool display_maximize = false;
  std::string family;

  /// Per-variable data consumed by the static branching rules: objective
  /// coefficients in the user's sense and the "weight" of the variable in
  /// its packing/capacity constraint.
  std::vector<std::vector<std::int64_t>> display_costs;  // p x n
  std::vector<std::int64_t> variable_weights;            // n

  std::optional<KnapsackData> knapsack;
  std::optional<GapData> gap;

  [[nodiscard]] int num_constraints() const { return static_cast<int>(constraint.size()); }

  /// Image Cx of an integer point, minimization sense.
  [[nodiscard]] std::vector<std::int64_t> image(const std::vector<std::int64_t>& x) const;
  /// Image in the user's sense (negated when the instance maximizes).
  [[nodiscard]] std::vector<std::int64_t> display_image(const std::vector<std::int64_t>& x) const;

  /// Exact feasibility of an integer point against bounds and all rows.
  [[nodiscard]] bool is_feasible(const std::vector<std::int64_t>& x) const;
};

MoilpInstance from_knapsack(const KnapsackData& data);
MoilpInstance from_gap(const GapData& data);

/// An efficient solution together with its image, both stored exactly.
struct SolutionPoint {
  std::vector<std::int64_t> x;
  std::vector<std::int64_t> y;          // minimization sense
  std::vector<std::int64_t> display_y;  // user's sense
};

/// A node of the branch-and-bound tree: the instance with tightened
/// variable bounds, plus bookkeeping used by queuing and scoring.
struct Subproblem {
  std::vector<std::int64_t> lower;
  std::vector<std::int64_t> upper;
  int depth = 0;
  std::uint64_t node_id = 0;
  double score = 0.0;
  /// Bound set of the parent node; used to score children before their own
  /// relaxation has been solved.
  std::shared_ptr<const LowerBoundSet> parent_bound;
};

/// The root node, spanning the full variable bounds of the instance.
Subproblem root_subproblem(const MoilpInstance& instance);

}  // namespace mobb

#endif  // MOBB_MODEL_HPP
