// SPDX-License-Identifier: Apache-2.0
#include "mobb/branching.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "mobb/tolerances.hpp"

namespace mobb {

namespace {

double fractionality(double v) {
  const double f = v - std::floor(v);
  return std::min(f, 1.0 - f);
}

std::vector<int> order_by_key(const std::vector<double>& key) {
  std::vector<int> order(key.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return key[a] < key[b]; });
  return order;
}

}  // namespace

BranchingRule::BranchingRule(BranchingRuleKind kind, const MoilpInstance& instance) : kind_(kind) {
  const int n = instance.num_variables;
  const int p = instance.num_objectives;

  std::vector<std::vector<double>> ratio(n, std::vector<double>(p));
  std::vector<double> ratio_sum(n);
  for (int i = 0; i < n; ++i) {
    const double w = static_cast<double>(instance.variable_weights[i]);
    for (int k = 0; k < p; ++k) {
      ratio[i][k] = w > 0.0 ? static_cast<double>(instance.display_costs[k][i]) / w
                            : std::numeric_limits<double>::infinity();
    }
    ratio_sum[i] = std::accumulate(ratio[i].begin(), ratio[i].end(), 0.0);
  }
  ratio_order_ = order_by_key(ratio_sum);

  if (kind_ == BranchingRuleKind::RatioDominance) {
    // A ratio vector is "better" in the instance's original sense: larger
    // for maximization (profit ratios), smaller for minimization.
    std::vector<double> dominated_count(n, 0.0);
    for (int i = 0; i < n; ++i) {
      for (int other = 0; other < n; ++other) {
        if (other == i || ratio[other] == ratio[i]) continue;
        bool dominates = true;
        for (int k = 0; k < p; ++k) {
          const bool at_least_as_good =
              instance.display_maximize ? ratio[other][k] >= ratio[i][k] : ratio[other][k] <= ratio[i][k];
          if (!at_least_as_good) {
            dominates = false;
            break;
          }
        }
        if (dominates) dominated_count[i] += 1.0;
      }
    }
    dominance_order_ = order_by_key(dominated_count);
  }
}

std::optional<int> BranchingRule::choose_variable(const LowerBoundSet& lbs, const Subproblem& sub) const {
  const int n = static_cast<int>(sub.lower.size());
  auto unfixed = [&](int i) { return sub.lower[i] < sub.upper[i]; };
  bool any_unfixed = false;
  for (int i = 0; i < n && !any_unfixed; ++i) any_unfixed = unfixed(i);
  if (!any_unfixed) throw std::invalid_argument("branching: no unfixed variable");

  switch (kind_) {
    case BranchingRuleKind::MostOftenFractional: {
      int best = -1;
      int best_count = 0;
      for (int i = 0; i < n; ++i) {
        if (!unfixed(i)) continue;
        int count = 0;
        for (const auto& e : lbs.extreme_points) {
          if (fractionality(e.x[i]) > kIntegralityTol) ++count;
        }
        if (count > best_count) {
          best_count = count;
          best = i;
        }
      }
      if (best < 0) return std::nullopt;
      return best;
    }
    case BranchingRuleKind::HowFractional: {
      int best = -1;
      double best_sum = 0.0;
      for (int i = 0; i < n; ++i) {
        if (!unfixed(i)) continue;
        double sum = 0.0;
        for (const auto& e : lbs.extreme_points) {
          const double f = fractionality(e.x[i]);
          if (f > kIntegralityTol) sum += f;
        }
        if (sum > best_sum) {
          best_sum = sum;
          best = i;
        }
      }
      if (best < 0) return std::nullopt;
      return best;
    }
    case BranchingRuleKind::SumOfRatios: {
      for (int i : ratio_order_) {
        if (unfixed(i)) return i;
      }
      break;
    }
    case BranchingRuleKind::RatioDominance: {
      for (int i : dominance_order_) {
        if (unfixed(i)) return i;
      }
      break;
    }
  }
  return std::nullopt;
}

int BranchingRule::choose_with_fallback(const LowerBoundSet& lbs, const Subproblem& sub) const {
  if (auto chosen = choose_variable(lbs, sub)) return *chosen;
  for (int i : ratio_order_) {
    if (sub.lower[i] < sub.upper[i]) return i;
  }
  throw std::invalid_argument("branching: no unfixed variable");
}

double branching_split_value(const LowerBoundSet& lbs, const Subproblem& sub, int k) {
  double best_value = 0.5 * (static_cast<double>(sub.lower[k]) + static_cast<double>(sub.upper[k]));
  double best_frac = -1.0;
  for (const auto& e : lbs.extreme_points) {
    if (e.x.empty()) continue;
    const double f = fractionality(e.x[k]);
    if (f > best_frac) {
      best_frac = f;
      best_value = e.x[k];
    }
  }
  return best_value;
}

std::pair<Subproblem, Subproblem> branch(const Subproblem& sub, int k, double split_value) {
  if (sub.lower[k] >= sub.upper[k]) throw std::invalid_argument("branching: variable is already fixed");
  std::int64_t split = static_cast<std::int64_t>(std::floor(split_value));
  split = std::clamp(split, sub.lower[k], sub.upper[k] - 1);

  Subproblem low;
  low.lower = sub.lower;
  low.upper = sub.upper;
  low.upper[k] = split;
  low.depth = sub.depth + 1;

  Subproblem high;
  high.lower = sub.lower;
  high.upper = sub.upper;
  high.lower[k] = split + 1;
  high.depth = sub.depth + 1;
  return {std::move(low), std::move(high)};
}

}  // namespace mobb
