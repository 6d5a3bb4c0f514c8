// SPDX-License-Identifier: Apache-2.0
#ifndef MOBB_ORACLE_HPP
#define MOBB_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "mobb/model.hpp"

namespace mobb {

/// The exact nondominated set of an instance: distinct minimization-sense
/// images, pairwise nondominated, sorted lexicographically.
struct ParetoFront {
  std::vector<std::vector<std::int64_t>> images;
};

/// Number of integer points in the box spanned by the subproblem bounds.
std::uint64_t enumeration_size(const Subproblem& sub);

/// Exhaustive enumeration of the nondominated set. Feasibility is checked in
/// exact rational arithmetic, so the result is a ground-truth reference.
/// Throws BudgetExceededError when the bound box holds more than 2^25 points.
/// The unqualified version splits the enumeration across OpenMP threads; the
/// _serial variant is the single-threaded reference implementation.
ParetoFront brute_force_front(const MoilpInstance& instance);
ParetoFront brute_force_front(const MoilpInstance& instance, const Subproblem& sub);
ParetoFront brute_force_front_serial(const MoilpInstance& instance);
ParetoFront brute_force_front_serial(const MoilpInstance& instance, const Subproblem& sub);

/// Every feasible image in the subproblem, deduplicated and sorted. Same
/// 2^25 budget as the front enumeration.
std::vector<std::vector<std::int64_t>> enumerate_feasible_images(const MoilpInstance& instance,
                                                                 const Subproblem& sub);

/// Exact hypervolume (minimization sense) of the region dominated by
/// `points` within the box below `reference`: vol of union of [y, reference].
/// Every point must lie weakly below the reference; anything else throws.
/// Supports two and three dimensions.
double hypervolume(const std::vector<std::vector<std::int64_t>>& points,
                   const std::vector<std::int64_t>& reference);

/// Insert a candidate image into a nondominated archive: drops it if some
/// archived point weakly dominates it, otherwise evicts what it dominates.
void archive_insert(std::vector<std::vector<std::int64_t>>& archive, const std::vector<std::int64_t>& y);

}  // namespace mobb

#endif  // MOBB_ORACLE_HPP
