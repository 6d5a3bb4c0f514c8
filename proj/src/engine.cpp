// SPDX-License-Identifier: Apache-2.0
#include "mobb/engine.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <limits>
#include <memory>
#include <stdexcept>
#include <unordered_set>

#include "mobb/lbs.hpp"
#include "mobb/simplex.hpp"

namespace mobb {

namespace {

bool is_scored(SelectionStrategy strategy) {
  return strategy != SelectionStrategy::DepthFirst && strategy != SelectionStrategy::BreadthFirst;
}

}  // namespace

void NodeQueue::push(Subproblem node) {
  switch (strategy_) {
    case SelectionStrategy::DepthFirst:
      lifo_.push_back(std::move(node));
      return;
    case SelectionStrategy::BreadthFirst:
      fifo_.push_back(std::move(node));
      return;
    default:
      scored_.push(Entry{node.score, next_seq_++, std::move(node)});
  }
}

std::optional<Subproblem> NodeQueue::pop() {
  switch (strategy_) {
    case SelectionStrategy::DepthFirst: {
      if (lifo_.empty()) return std::nullopt;
      Subproblem node = std::move(lifo_.back());
      lifo_.pop_back();
      return node;
    }
    case SelectionStrategy::BreadthFirst: {
      if (fifo_.empty()) return std::nullopt;
      Subproblem node = std::move(fifo_.front());
      fifo_.pop_front();
      return node;
    }
    default: {
      if (scored_.empty()) return std::nullopt;
      Subproblem node = std::move(const_cast<Entry&>(scored_.top()).node);
      scored_.pop();
      return node;
    }
  }
}

std::size_t NodeQueue::size() const {
  switch (strategy_) {
    case SelectionStrategy::DepthFirst:
      return lifo_.size();
    case SelectionStrategy::BreadthFirst:
      return fifo_.size();
    default:
      return scored_.size();
  }
}

std::optional<double> NodeQueue::top_score() const {
  if (!is_scored(strategy_) || scored_.empty()) return std::nullopt;
  return scored_.top().score;
}

SearchResult solve(const MoilpInstance& instance, const SearchConfig& config) {
  if (instance.num_objectives != 2 && instance.num_objectives != 3)
    throw std::invalid_argument("solve: instance must have two or three objectives");
  if (!(config.time_limit_seconds > 0.0)) throw std::invalid_argument("solve: time limit must be positive");

  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };

  SimplexSolver solver;
  const BranchingRule rule(config.rule, instance);
  IncumbentList incumbents;
  LocalUpperBoundSet lubs(reference_corner(instance));
  NodeQueue queue(config.selection);

  std::uint64_t next_node_id = 0;
  Subproblem root = root_subproblem(instance);
  root.node_id = next_node_id++;
  root.score = std::numeric_limits<double>::infinity();
  queue.push(std::move(root));

  SearchResult result;
  result.nodes_created = 1;
  result.status = SearchStatus::Complete;

  // At most one stale-score refresh per node per pop cycle, so a full cycle
  // of reinsertions cannot loop forever.
  std::unordered_set<std::uint64_t> rescored;

  while (!queue.empty()) {
    if (elapsed() >= config.time_limit_seconds) {
      result.status = SearchStatus::TimeLimit;
      break;
    }
    if (config.node_limit && result.nodes_processed >= *config.node_limit) {
      result.status = SearchStatus::NodeLimit;
      break;
    }

    Subproblem node = *queue.pop();
    if (config.rescore_on_pop && is_scored(config.selection) && node.parent_bound &&
        !rescored.count(node.node_id)) {
      rescored.insert(node.node_id);
      node.score = score_node(config.selection, *node.parent_bound, incumbents, lubs).value;
      const auto front = queue.top_score();
      if (front && node.score < *front) {
        queue.push(std::move(node));
        continue;
      }
    }
    rescored.clear();

    LowerBoundSet computed = compute_lower_bound_set(solver, instance, node);
    auto lbs = std::make_shared<const LowerBoundSet>(std::move(computed));
    ++result.nodes_processed;

    if (!lbs->empty()) {
      for (auto& candidate : integer_feasible_extremes(instance, *lbs)) {
        std::vector<std::int64_t> image = candidate.y;
        if (incumbents.try_insert(std::move(candidate)).accepted) lubs.insert(image);
      }
    }

    const FathomOutcome outcome = fathom_check(*lbs, incumbents, lubs, config.dominance_test);
    if (config.observer) {
      config.observer(NodeObservation{instance, node, *lbs, incumbents, lubs, outcome,
                                      result.nodes_processed});
    }

    switch (outcome) {
      case FathomOutcome::Infeasible:
        ++result.fathomed_infeasible;
        continue;
      case FathomOutcome::Optimal:
        ++result.fathomed_optimal;
        continue;
      case FathomOutcome::Dominated:
        ++result.fathomed_dominated;
        continue;
      case FathomOutcome::Open:
        break;
    }

    const int k = rule.choose_with_fallback(*lbs, node);
    auto [low, high] = branch(node, k, branching_split_value(*lbs, node, k));
    const double child_score =
        is_scored(config.selection) ? score_node(config.selection, *lbs, incumbents, lubs).value : 0.0;
    low.node_id = next_node_id++;
    low.score = child_score;
    low.parent_bound = lbs;
    high.node_id = next_node_id++;
    high.score = child_score;
    high.parent_bound = lbs;
    queue.push(std::move(low));
    queue.push(std::move(high));
    result.nodes_created += 2;
    ++result.branched;
  }

  result.wall_time_seconds = elapsed();
  result.nondominated_set = incumbents.points();
  std::sort(result.nondominated_set.begin(), result.nondominated_set.end(),
            [](const SolutionPoint& a, const SolutionPoint& b) { return a.y < b.y; });
  return result;
}

SelectionStrategy parse_selection(const std::string& name) {
  if (name == "df") return SelectionStrategy::DepthFirst;
  if (name == "bf") return SelectionStrategy::BreadthFirst;
  if (name == "hvg") return SelectionStrategy::HypervolumeGap;
  if (name == "hvb") return SelectionStrategy::HypervolumeBox;
  if (name == "hd") return SelectionStrategy::Hausdorff;
  if (name == "woe") return SelectionStrategy::WidthOfEnclosure;
  throw std::invalid_argument("unknown selection strategy: " + name);
}

BranchingRuleKind parse_rule(const std::string& name) {
  if (name == "mof") return BranchingRuleKind::MostOftenFractional;
  if (name == "hf") return BranchingRuleKind::HowFractional;
  if (name == "sr") return BranchingRuleKind::SumOfRatios;
  if (name == "dom") return BranchingRuleKind::RatioDominance;
  throw std::invalid_argument("unknown branching rule: " + name);
}

std::string selection_name(SelectionStrategy strategy) {
  switch (strategy) {
    case SelectionStrategy::DepthFirst:
      return "df";
    case SelectionStrategy::BreadthFirst:
      return "bf";
    case SelectionStrategy::HypervolumeGap:
      return "hvg";
    case SelectionStrategy::HypervolumeBox:
      return "hvb";
    case SelectionStrategy::Hausdorff:
      return "hd";
    case SelectionStrategy::WidthOfEnclosure:
      return "woe";
  }
  return "df";
}

std::string rule_name(BranchingRuleKind rule) {
  switch (rule) {
    case BranchingRuleKind::MostOftenFractional:
      return "mof";
    case BranchingRuleKind::HowFractional:
      return "hf";
    case BranchingRuleKind::SumOfRatios:
      return "sr";
    case BranchingRuleKind::RatioDominance:
      return "dom";
  }
  return "mof";
}

std::string combo_label(SelectionStrategy strategy, BranchingRuleKind rule) {
  std::string label = selection_name(strategy) + "-" + rule_name(rule);
  for (char& c : label) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return label;
}

std::string status_name(SearchStatus status) {
  switch (status) {
    case SearchStatus::Complete:
      return "Complete";
    case SearchStatus::TimeLimit:
      return "TimeLimit";
    case SearchStatus::NodeLimit:
      return "NodeLimit";
  }
  return "Complete";
}

}  // namespace mobb
