// SPDX-License-Identifier: Apache-2.0
#ifndef MOBB_GAP_MEASURES_HPP
#define MOBB_GAP_MEASURES_HPP

#include <cstdint>
#include <vector>

#include "mobb/dominance.hpp"
#include "mobb/lbs.hpp"

namespace mobb {

enum class SelectionStrategy {
  DepthFirst,
  BreadthFirst,
  HypervolumeGap,
  HypervolumeBox,
  Hausdorff,
  WidthOfEnclosure,
};

/// A node's selection priority: larger means popped earlier. +infinity while
/// the incumbent list is empty (every gap is unbounded then).
struct GapScore {
  double value = 0.0;
  SelectionStrategy strategy = SelectionStrategy::DepthFirst;
};

/// Volume of the simplex spanned by the local upper bound u and the points
/// where the rays u - t*e_i leave the facet region, each ray clamped at the
/// ideal-point box: (1/p!) * prod t_i. Per-bound term of score_hvg.
double hvg_simplex_volume(const std::vector<std::int64_t>& u, const LowerBoundSet& lbs);

/// Volume of the search-zone box between the local upper bound and the ideal
/// point: prod max(0, u_i - ideal_i). Per-bound term of score_hvb.
double hvb_box_volume(const std::vector<std::int64_t>& u, const LowerBoundSet& lbs);

/// Largest s with u - s*1 still inside the facet region (0 when u lies on a
/// facet): the per-bound width-of-enclosure term. With normals normalized to
/// sum one this is min over facets of (normal . u - offset), clamped at 0.
double woe_min_gap(const std::vector<std::int64_t>& u, const LowerBoundSet& lbs);

/// Max of hvg_simplex_volume over the relevant local upper bounds (those
/// whose zone still intersects the bound set); 0 when none are relevant,
/// +infinity when there are no incumbents yet.
GapScore score_hvg(const LowerBoundSet& lbs, const LocalUpperBoundSet& lubs);

/// Max of hvb_box_volume over the relevant local upper bounds.
GapScore score_hvb(const LowerBoundSet& lbs, const LocalUpperBoundSet& lubs);

/// Symmetric Euclidean Hausdorff distance between the extreme points of the
/// bound set and the incumbent images.
GapScore score_hd(const LowerBoundSet& lbs, const IncumbentList& incumbents);

/// Max of woe_min_gap over the relevant local upper bounds.
GapScore score_woe(const LowerBoundSet& lbs, const LocalUpperBoundSet& lubs);

/// Dispatch on the strategy; depth/breadth-first nodes score 0 (their queues
/// ignore the value).
GapScore score_node(SelectionStrategy strategy, const LowerBoundSet& lbs, const IncumbentList& incumbents,
                    const LocalUpperBoundSet& lubs);

}  // namespace mobb

#endif  // MOBB_GAP_MEASURES_HPP
