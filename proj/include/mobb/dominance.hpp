// SPDX-License-Identifier: Apache-2.0
#ifndef MOBB_DOMINANCE_HPP
#define MOBB_DOMINANCE_HPP

#include <cstdint>
#include <vector>

#include "mobb/lbs.hpp"
#include "mobb/model.hpp"
#include "mobb/tolerances.hpp"

namespace mobb {

/// Mutually nondominated integer-feasible images found so far, one preimage
/// each: the global upper bound set.
class IncumbentList {
 public:
  struct InsertResult {
    bool accepted = false;
    std::vector<SolutionPoint> removed;  // entries evicted by the candidate
  };

  /// Accepts the candidate iff no stored image weakly dominates its image
  /// (equality counts as dominated); on acceptance evicts the entries the
  /// candidate dominates and reports them.
  InsertResult try_insert(SolutionPoint candidate);

  [[nodiscard]] const std::vector<SolutionPoint>& points() const { return points_; }
  [[nodiscard]] bool empty() const { return points_.empty(); }
  [[nodiscard]] std::size_t size() const { return points_.size(); }

 private:
  std::vector<SolutionPoint> points_;
};

/// The corner points of the search region induced by the incumbent list,
/// maintained incrementally: a point can still be nondominated iff it lies
/// strictly below one of these local upper bounds.
class LocalUpperBoundSet {
 public:
  /// Starts from the single corner `initial` (strictly above every
  /// attainable image; see reference_corner).
  explicit LocalUpperBoundSet(std::vector<std::int64_t> initial);

  /// Update for a newly accepted incumbent image: every bound strictly above
  /// the point splits into up to p children, then non-maximal bounds are
  /// dropped.
  void insert(const std::vector<std::int64_t>& point);

  [[nodiscard]] const std::vector<std::vector<std::int64_t>>& bounds() const { return bounds_; }
  /// True until the first insert, i.e. while the incumbent list is empty.
  [[nodiscard]] bool is_initial() const { return !touched_; }

 private:
  std::size_t p_;
  std::vector<std::vector<std::int64_t>> bounds_;
  bool touched_ = false;
};

/// Strict upper bound on every attainable image coordinate:
/// M_k = sum_i max(C_ki * l_i, C_ki * u_i) + 1.
std::vector<std::int64_t> reference_corner(const MoilpInstance& instance);

/// Whether the open search zone below `u` can still hold attainable images:
/// feasibility of {y <= u - eps, normal . y >= offset for all facets}. Since
/// the facet region is upward closed this reduces to checking the corner
/// u - eps itself against every facet.
bool zone_intersects_bound_set(const std::vector<std::int64_t>& u, const LowerBoundSet& lbs,
                               double eps = kDominanceEps);

enum class FathomOutcome { Open, Infeasible, Optimal, Dominated };

enum class DominanceTest {
  /// Per-bound feasibility against the full facet description (exact for
  /// polyhedral bound sets).
  Exact,
  /// Weaker point-wise test: fathom when every extreme point of the bound
  /// set is weakly dominated by an incumbent image.
  ExtremePointsOnly,
};

/// The three fathoming tests, in order: infeasibility, optimality (single
/// integral extreme point already incumbent), dominance (no local upper
/// bound's zone intersects the bound set).
FathomOutcome fathom_check(const LowerBoundSet& lbs, const IncumbentList& incumbents,
                           const LocalUpperBoundSet& lubs, DominanceTest test = DominanceTest::Exact,
                           double eps = kDominanceEps);

}  // namespace mobb

#endif  // MOBB_DOMINANCE_HPP
