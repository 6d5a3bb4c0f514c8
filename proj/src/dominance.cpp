// SPDX-License-Identifier: Apache-2.0
#include "mobb/dominance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mobb {

namespace {

bool weakly_dominates(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > b[k]) return false;
  }
  return true;
}

bool strictly_below(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] >= b[k]) return false;
  }
  return true;
}

}  // namespace

IncumbentList::InsertResult IncumbentList::try_insert(SolutionPoint candidate) {
  InsertResult result;
  for (const auto& existing : points_) {
    if (weakly_dominates(existing.y, candidate.y)) return result;
  }
  result.accepted = true;
  auto evicted = std::stable_partition(points_.begin(), points_.end(), [&](const SolutionPoint& s) {
    return !weakly_dominates(candidate.y, s.y);
  });
  result.removed.assign(std::make_move_iterator(evicted), std::make_move_iterator(points_.end()));
  points_.erase(evicted, points_.end());
  points_.push_back(std::move(candidate));
  return result;
}

LocalUpperBoundSet::LocalUpperBoundSet(std::vector<std::int64_t> initial)
    : p_(initial.size()), bounds_{std::move(initial)} {
  if (p_ < 2) throw std::invalid_argument("local upper bounds: need at least two objectives");
}

void LocalUpperBoundSet::insert(const std::vector<std::int64_t>& point) {
  if (point.size() != p_) throw std::invalid_argument("local upper bounds: dimension mismatch");
  touched_ = true;
  std::vector<std::vector<std::int64_t>> next;
  std::vector<std::vector<std::int64_t>> children;
  for (auto& u : bounds_) {
    if (!strictly_below(point, u)) {
      next.push_back(std::move(u));
      continue;
    }
    for (std::size_t k = 0; k < p_; ++k) {
      std::vector<std::int64_t> child = u;
      child[k] = point[k];
      children.push_back(std::move(child));
    }
  }
  next.insert(next.end(), std::make_move_iterator(children.begin()), std::make_move_iterator(children.end()));

  // Keep only the maximal corners: drop duplicates and anything componentwise
  // below another candidate.
  std::sort(next.begin(), next.end());
  next.erase(std::unique(next.begin(), next.end()), next.end());
  std::vector<bool> keep(next.size(), true);
  for (std::size_t i = 0; i < next.size(); ++i) {
    for (std::size_t j = 0; j < next.size(); ++j) {
      if (i != j && weakly_dominates(next[i], next[j])) {
        keep[i] = false;
        break;
      }
    }
  }
  std::vector<std::vector<std::int64_t>> maximal;
  for (std::size_t i = 0; i < next.size(); ++i)
    if (keep[i]) maximal.push_back(std::move(next[i]));
  bounds_ = std::move(maximal);
}

std::vector<std::int64_t> reference_corner(const MoilpInstance& instance) {
  std::vector<std::int64_t> corner(instance.num_objectives, 0);
  for (int k = 0; k < instance.num_objectives; ++k) {
    std::int64_t worst = 0;
    for (int i = 0; i < instance.num_variables; ++i) {
      worst += std::max(instance.objective[k][i] * instance.lower[i],
                        instance.objective[k][i] * instance.upper[i]);
    }
    corner[k] = worst + 1;
  }
  return corner;
}

bool zone_intersects_bound_set(const std::vector<std::int64_t>& u, const LowerBoundSet& lbs, double eps) {
  for (const auto& facet : lbs.facets) {
    double value = 0.0;
    for (std::size_t k = 0; k < u.size(); ++k)
      value += facet.normal[k] * (static_cast<double>(u[k]) - eps);
    if (value < facet.offset - 1e-9 * (1.0 + std::abs(facet.offset))) return false;
  }
  return true;
}

FathomOutcome fathom_check(const LowerBoundSet& lbs, const IncumbentList& incumbents,
                           const LocalUpperBoundSet& lubs, DominanceTest test, double eps) {
  if (lbs.empty()) return FathomOutcome::Infeasible;

  if (!lbs.truncated && lbs.extreme_points.size() == 1) {
    const ExtremePoint& only = lbs.extreme_points.front();
    bool integral = !only.x.empty();
    for (double v : only.x) {
      if (std::abs(v - std::round(v)) > kIntegralityTol) {
        integral = false;
        break;
      }
    }
    if (integral) {
      for (const auto& incumbent : incumbents.points()) {
        bool equal = true;
        for (std::size_t k = 0; k < only.y.size(); ++k) {
          if (std::abs(only.y[k] - static_cast<double>(incumbent.y[k])) > kVertexDedupTol) {
            equal = false;
            break;
          }
        }
        if (equal) return FathomOutcome::Optimal;
      }
    }
  }

  if (test == DominanceTest::Exact) {
    bool any_open_zone = false;
    for (const auto& u : lubs.bounds()) {
      if (zone_intersects_bound_set(u, lbs, eps)) {
        any_open_zone = true;
        break;
      }
    }
    if (!any_open_zone) return FathomOutcome::Dominated;
  } else {
    if (!lbs.extreme_points.empty() && !incumbents.empty()) {
      bool all_extremes_covered = true;
      for (const auto& e : lbs.extreme_points) {
        bool covered = false;
        for (const auto& incumbent : incumbents.points()) {
          bool leq = true;
          for (std::size_t k = 0; k < e.y.size(); ++k) {
            if (static_cast<double>(incumbent.y[k]) > e.y[k] + kDominanceEps) {
              leq = false;
              break;
            }
          }
          if (leq) {
            covered = true;
            break;
          }
        }
        if (!covered) {
          all_extremes_covered = false;
          break;
        }
      }
      if (all_extremes_covered) return FathomOutcome::Dominated;
    }
  }
  return FathomOutcome::Open;
}

}  // namespace mobb
