// SPDX-License-Identifier: Apache-2.0
#include "mobb/gap_measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mobb {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double facet_value(const Facet& facet, const std::vector<std::int64_t>& u) {
  double v = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) v += facet.normal[k] * static_cast<double>(u[k]);
  return v;
}

template <typename PerBound>
GapScore max_over_relevant(SelectionStrategy tag, const LowerBoundSet& lbs, const LocalUpperBoundSet& lubs,
                           PerBound per_bound) {
  if (lubs.is_initial()) return GapScore{kInf, tag};
  double best = 0.0;
  for (const auto& u : lubs.bounds()) {
    if (!zone_intersects_bound_set(u, lbs)) continue;
    best = std::max(best, per_bound(u));
  }
  return GapScore{best, tag};
}

}  // namespace

double hvg_simplex_volume(const std::vector<std::int64_t>& u, const LowerBoundSet& lbs) {
  const std::size_t p = u.size();
  double volume = 1.0;
  for (std::size_t i = 0; i < p; ++i) {
    double hit = kInf;
    for (const auto& facet : lbs.facets) {
      if (facet.normal[i] <= 1e-12) continue;
      hit = std::min(hit, (facet_value(facet, u) - facet.offset) / facet.normal[i]);
    }
    const double box = static_cast<double>(u[i]) - lbs.ideal[i];
    volume *= std::max(0.0, std::min(hit, box));
  }
  double factorial = 1.0;
  for (std::size_t i = 2; i <= p; ++i) factorial *= static_cast<double>(i);
  return volume / factorial;
}

double hvb_box_volume(const std::vector<std::int64_t>& u, const LowerBoundSet& lbs) {
  double volume = 1.0;
  for (std::size_t i = 0; i < u.size(); ++i)
    volume *= std::max(0.0, static_cast<double>(u[i]) - lbs.ideal[i]);
  return volume;
}

double woe_min_gap(const std::vector<std::int64_t>& u, const LowerBoundSet& lbs) {
  double gap = kInf;
  for (const auto& facet : lbs.facets) gap = std::min(gap, facet_value(facet, u) - facet.offset);
  if (gap == kInf) return 0.0;
  return std::max(0.0, gap);
}

GapScore score_hvg(const LowerBoundSet& lbs, const LocalUpperBoundSet& lubs) {
  return max_over_relevant(SelectionStrategy::HypervolumeGap, lbs, lubs,
                           [&](const std::vector<std::int64_t>& u) { return hvg_simplex_volume(u, lbs); });
}

GapScore score_hvb(const LowerBoundSet& lbs, const LocalUpperBoundSet& lubs) {
  return max_over_relevant(SelectionStrategy::HypervolumeBox, lbs, lubs,
                           [&](const std::vector<std::int64_t>& u) { return hvb_box_volume(u, lbs); });
}

GapScore score_woe(const LowerBoundSet& lbs, const LocalUpperBoundSet& lubs) {
  return max_over_relevant(SelectionStrategy::WidthOfEnclosure, lbs, lubs,
                           [&](const std::vector<std::int64_t>& u) { return woe_min_gap(u, lbs); });
}

GapScore score_hd(const LowerBoundSet& lbs, const IncumbentList& incumbents) {
  if (incumbents.empty() || lbs.extreme_points.empty())
    return GapScore{kInf, SelectionStrategy::Hausdorff};
  std::vector<std::vector<double>> lower;
  lower.reserve(lbs.extreme_points.size());
  for (const auto& e : lbs.extreme_points) lower.push_back(e.y);
  std::vector<std::vector<double>> upper;
  upper.reserve(incumbents.size());
  for (const auto& s : incumbents.points()) {
    std::vector<double> y(s.y.size());
    for (std::size_t k = 0; k < s.y.size(); ++k) y[k] = static_cast<double>(s.y[k]);
    upper.push_back(std::move(y));
  }
  auto directed = [](const std::vector<std::vector<double>>& from,
                     const std::vector<std::vector<double>>& to) {
    double worst = 0.0;
    for (const auto& a : from) {
      double nearest = kInf;
      for (const auto& b : to) {
        double dist2 = 0.0;
        for (std::size_t k = 0; k < a.size(); ++k) {
          const double d = a[k] - b[k];
          dist2 += d * d;
        }
        nearest = std::min(nearest, dist2);
      }
      worst = std::max(worst, nearest);
    }
    return worst;
  };
  return GapScore{std::sqrt(std::max(directed(lower, upper), directed(upper, lower))),
                  SelectionStrategy::Hausdorff};
}

GapScore score_node(SelectionStrategy strategy, const LowerBoundSet& lbs, const IncumbentList& incumbents,
                    const LocalUpperBoundSet& lubs) {
  switch (strategy) {
    case SelectionStrategy::HypervolumeGap:
      return score_hvg(lbs, lubs);
    case SelectionStrategy::HypervolumeBox:
      return score_hvb(lbs, lubs);
    case SelectionStrategy::Hausdorff:
      return score_hd(lbs, incumbents);
    case SelectionStrategy::WidthOfEnclosure:
      return score_woe(lbs, lubs);
    case SelectionStrategy::DepthFirst:
    case SelectionStrategy::BreadthFirst:
      break;
  }
  return GapScore{0.0, strategy};
}

}  // namespace mobb
