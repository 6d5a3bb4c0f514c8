// SPDX-License-Identifier: Apache-2.0
#ifndef MOBB_BRANCHING_HPP
#define MOBB_BRANCHING_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mobb/lbs.hpp"
#include "mobb/model.hpp"

namespace mobb {

enum class BranchingRuleKind { MostOftenFractional, HowFractional, SumOfRatios, RatioDominance };

/// Variable selection under the four rules. The fractionality rules (MOF,
/// HF) look at the extreme preimages of the node's bound set; the ratio
/// rules (SR, DOM) are static: their rankings are computed once from the
/// instance's original-sense costs and weights.
class BranchingRule {
 public:
  BranchingRule(BranchingRuleKind kind, const MoilpInstance& instance);

  [[nodiscard]] BranchingRuleKind kind() const { return kind_; }

  /// Chosen variable among the subproblem's unfixed ones; nullopt when MOF or
  /// HF find nothing fractional. Ties break to the lowest index.
  [[nodiscard]] std::optional<int> choose_variable(const LowerBoundSet& lbs, const Subproblem& sub) const;

  /// choose_variable, falling back to the static sum-of-ratios ranking when
  /// the fractionality rules come up empty.
  [[nodiscard]] int choose_with_fallback(const LowerBoundSet& lbs, const Subproblem& sub) const;

  /// The static ranking used by SR (and as the MOF/HF fallback).
  [[nodiscard]] const std::vector<int>& ratio_order() const { return ratio_order_; }

 private:
  BranchingRuleKind kind_;
  std::vector<int> ratio_order_;      // ascending sum of ratios
  std::vector<int> dominance_order_;  // ascending dominated-count (DOM only)
};

/// Value of x_k to split on: taken from the extreme preimage whose x_k is
/// closest to half-integral, or the bound midpoint when no preimage exists.
double branching_split_value(const LowerBoundSet& lbs, const Subproblem& sub, int k);

/// Binary split of `sub` on variable k at `split_value`: the low child caps
/// x_k at floor(split), the high child raises its lower bound one above;
/// both one level deeper. Queue bookkeeping (ids, scores, inherited bound
/// set) stays with the caller.
std::pair<Subproblem, Subproblem> branch(const Subproblem& sub, int k, double split_value);

}  // namespace mobb

#endif  // MOBB_BRANCHING_HPP
