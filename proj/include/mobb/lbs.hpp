// SPDX-License-Identifier: Apache-2.0
#ifndef MOBB_LBS_HPP
#define MOBB_LBS_HPP

#include <vector>

#include "mobb/model.hpp"
#include "mobb/simplex.hpp"

namespace mobb {

/// Supporting halfspace of the relaxation's image: normal >= 0 with entries
/// summing to one, and normal . y >= offset for every attainable image y.
struct Facet {
  std::vector<double> normal;
  double offset = 0.0;
};

/// A point of the relaxation's nondominated image together with a preimage.
struct ExtremePoint {
  std::vector<double> y;
  std::vector<double> x;
};

/// Lower bound set of a subproblem: the nondominated frontier of the LP
/// relaxation's image, described both by its extreme points and by the
/// supporting facets of the upward-closed region they span. The facet
/// description is what fathoming tests evaluate; since all normals are
/// nonnegative the region {y : normal . y >= offset for all facets} is
/// upward closed and contains every attainable image.
class LowerBoundSet {
 public:
  bool infeasible = false;
  /// Set when an iteration budget stopped refinement early; the facets are
  /// still valid supports, but the extreme point list may be incomplete.
  bool truncated = false;
  std::vector<double> ideal;
  std::vector<ExtremePoint> extreme_points;
  std::vector<Facet> facets;

  [[nodiscard]] bool empty() const { return infeasible; }
  [[nodiscard]] int dimension() const { return static_cast<int>(ideal.size()); }
};

/// Bound set for a biobjective subproblem via dichotomic search: recursively
/// solves weighted-sum LPs between lexicographic endpoints until no weighted
/// solve improves on its segment.
LowerBoundSet dichotomic_bound_set(SimplexSolver& solver, const MoilpInstance& instance, const Subproblem& sub);

/// Bound set via outer approximation: starts from the per-objective and
/// equal-weight supports, then repeatedly checks a vertex of the current
/// outer polyhedron for attainability and either accepts it as an extreme
/// point or adds the separating supporting facet found by the check.
LowerBoundSet outer_approximation_bound_set(SimplexSolver& solver, const MoilpInstance& instance,
                                            const Subproblem& sub);

/// Dispatch: dichotomic search for two objectives, outer approximation for
/// three.
LowerBoundSet compute_lower_bound_set(SimplexSolver& solver, const MoilpInstance& instance,
                                      const Subproblem& sub);

/// Vertices of {y : normal . y >= offset for all facets}, found by solving
/// every p-subset of facet equalities and keeping solutions that satisfy the
/// rest. Exposed for tests.
std::vector<std::vector<double>> facet_vertices(const std::vector<Facet>& facets, int p);

/// Extreme points whose preimages round to integer vectors that are exactly
/// feasible; these become incumbent candidates.
std::vector<SolutionPoint> integer_feasible_extremes(const MoilpInstance& instance, const LowerBoundSet& lbs);

}  // namespace mobb

#endif  // MOBB_LBS_HPP
