// SPDX-License-Identifier: Apache-2.0
#ifndef MOBB_TOLERANCES_HPP
#define MOBB_TOLERANCES_HPP

namespace mobb {

// Central numeric tolerances. All absolute; instance data is small integers.
inline constexpr double kFeasibilityTol = 1e-7;   // LP row/bound feasibility
inline constexpr double kIntegralityTol = 1e-6;   // fractionality / rounding test
inline constexpr double kZeroPivotTol = 1e-10;    // simplex pivot rejection
inline constexpr double kVertexDedupTol = 1e-6;   // bound-set point dedup (objective space)
inline constexpr double kFacetEqualityTol = 1e-6; // facet attainment check
inline constexpr double kDominanceEps = 1e-6;     // strictness margin of the dominance test

}  // namespace mobb

#endif  // MOBB_TOLERANCES_HPP
