// SPDX-License-Identifier: Apache-2.0
#ifndef MOBB_ENGINE_HPP
#define MOBB_ENGINE_HPP

#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "mobb/branching.hpp"
#include "mobb/dominance.hpp"
#include "mobb/gap_measures.hpp"
#include "mobb/model.hpp"

namespace mobb {

/// Snapshot handed to the observer after each processed node; everything is
/// borrowed and only valid during the call.
struct NodeObservation {
  const MoilpInstance& instance;
  const Subproblem& node;
  const LowerBoundSet& lbs;
  const IncumbentList& incumbents;
  const LocalUpperBoundSet& lubs;
  FathomOutcome outcome;
  std::uint64_t nodes_processed;
};

using NodeObserver = std::function<void(const NodeObservation&)>;

struct SearchConfig {
  SelectionStrategy selection = SelectionStrategy::DepthFirst;
  BranchingRuleKind rule = BranchingRuleKind::MostOftenFractional;
  double time_limit_seconds = 3600.0;
  std::optional<std::uint64_t> node_limit;
  DominanceTest dominance_test = DominanceTest::Exact;
  std::uint64_t rng_seed = 0;
  /// Re-evaluate a node's stale score once when it reaches the front of a
  /// best-first queue, reinserting it if it no longer belongs there.
  bool rescore_on_pop = false;
  NodeObserver observer;
};

enum class SearchStatus { Complete, TimeLimit, NodeLimit };

struct SearchResult {
  std::vector<SolutionPoint> nondominated_set;  // sorted by minimization image
  SearchStatus status = SearchStatus::Complete;
  std::uint64_t nodes_created = 0;
  std::uint64_t nodes_processed = 0;
  double wall_time_seconds = 0.0;
  std::uint64_t fathomed_infeasible = 0;
  std::uint64_t fathomed_optimal = 0;
  std::uint64_t fathomed_dominated = 0;
  std::uint64_t branched = 0;
};

/// Node container with the selection discipline fixed at construction:
/// LIFO for depth-first, FIFO for breadth-first, otherwise a max-priority
/// queue on the score with FIFO tie-breaking.
class NodeQueue {
 public:
  explicit NodeQueue(SelectionStrategy strategy) : strategy_(strategy) {}

  void push(Subproblem node);
  std::optional<Subproblem> pop();
  [[nodiscard]] std::size_t size() const;
  [[nodiscard]] bool empty() const { return size() == 0; }
  /// Score at the front of a best-first queue; nullopt when empty or when
  /// the discipline is not score-based.
  [[nodiscard]] std::optional<double> top_score() const;

 private:
  struct Entry {
    double score;
    std::uint64_t seq;
    Subproblem node;
  };
  struct EarlierFirstOnTies {
    bool operator()(const Entry& a, const Entry& b) const {
      if (a.score != b.score) return a.score < b.score;
      return a.seq > b.seq;
    }
  };

  SelectionStrategy strategy_;
  std::vector<Subproblem> lifo_;
  std::deque<Subproblem> fifo_;
  std::priority_queue<Entry, std::vector<Entry>, EarlierFirstOnTies> scored_;
  std::uint64_t next_seq_ = 0;
};

/// Exact multi-objective branch and bound. Complete runs return the minimal
/// complete set: all nondominated images with one preimage each.
SearchResult solve(const MoilpInstance& instance, const SearchConfig& config);

SelectionStrategy parse_selection(const std::string& name);
BranchingRuleKind parse_rule(const std::string& name);
std::string selection_name(SelectionStrategy strategy);
std::string rule_name(BranchingRuleKind rule);
/// Combination label in the reporting style, e.g. "HVG-HF".
std::string combo_label(SelectionStrategy strategy, BranchingRuleKind rule);
std::string status_name(SearchStatus status);

}  // namespace mobb

#endif  // MOBB_ENGINE_HPP
