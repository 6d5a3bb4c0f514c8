// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Each check is independent of the library's own claims —
// fronts are compared against exhaustive rational enumeration, bound sets
// against grid and vertex oracles, and reports against re-parsed output.

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mobb/bench.hpp"
#include "mobb/branching.hpp"
#include "mobb/dominance.hpp"
#include "mobb/engine.hpp"
#include "mobb/gap_measures.hpp"
#include "mobb/instances.hpp"
#include "mobb/lbs.hpp"
#include "mobb/model.hpp"
#include "mobb/oracle.hpp"
#include "mobb/simplex.hpp"
#include "support/test_support.hpp"

namespace {

using mobb::BranchingRuleKind;
using mobb::IncumbentList;
using mobb::LocalUpperBoundSet;
using mobb::LowerBoundSet;
using mobb::MoilpInstance;
using mobb::SearchConfig;
using mobb::SearchResult;
using mobb::SearchStatus;
using mobb::SelectionStrategy;
using mobb::SolutionPoint;
using mobb::Subproblem;

const std::vector<SelectionStrategy> kSelections{
    SelectionStrategy::DepthFirst,     SelectionStrategy::BreadthFirst,
    SelectionStrategy::HypervolumeGap, SelectionStrategy::HypervolumeBox,
    SelectionStrategy::Hausdorff,      SelectionStrategy::WidthOfEnclosure};
const std::vector<BranchingRuleKind> kRules{
    BranchingRuleKind::MostOftenFractional, BranchingRuleKind::HowFractional,
    BranchingRuleKind::SumOfRatios, BranchingRuleKind::RatioDominance};

double seconds_since(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<std::vector<std::int64_t>> front_images(const SearchResult& result) {
  std::vector<std::vector<std::int64_t>> images;
  images.reserve(result.nondominated_set.size());
  for (const auto& sol : result.nondominated_set) images.push_back(sol.y);
  return images;
}

/// The twenty runtime-generated benchmark instances: ten knapsacks and ten
/// assignment instances, all three-objective with twelve binary variables.
std::vector<MoilpInstance> benchmark_suite() {
  std::vector<MoilpInstance> suite;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    suite.push_back(mobb::generate(mobb::knapsack_spec(3, 12, seed)));
  }
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    suite.push_back(mobb::generate(mobb::gap_spec(3, 3, 4, seed)));
  }
  return suite;
}

bool images_match(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (std::abs(a[k] - b[k]) > tol) return false;
  }
  return true;
}

bool contains_image(const std::vector<mobb::ExtremePoint>& points, const std::vector<double>& y,
                    double tol) {
  for (const auto& ep : points) {
    if (images_match(ep.y, y, tol)) return true;
  }
  return false;
}

struct Criterion {
  std::string label;
  bool passed = false;
  std::string detail;
};

// ---------------------------------------------------------------------------
// Criteria 1 and 2: oracle exactness and cross-combination invariance.
// ---------------------------------------------------------------------------

struct ExactnessOutcome {
  Criterion exactness;
  Criterion invariance;
};

ExactnessOutcome check_exactness_and_invariance() {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<MoilpInstance> suite = benchmark_suite();

  std::uint64_t runs = 0;
  std::uint64_t exact = 0;
  std::uint64_t invariant_instances = 0;
  for (const MoilpInstance& instance : suite) {
    const auto truth = mobb::brute_force_front(instance).images;
    std::optional<std::vector<std::vector<std::int64_t>>> first_front;
    bool instance_invariant = true;
    for (const SelectionStrategy selection : kSelections) {
      for (const BranchingRuleKind rule : kRules) {
        SearchConfig config;
        config.selection = selection;
        config.rule = rule;
        const SearchResult result = mobb::solve(instance, config);
        ++runs;
        const auto front = front_images(result);
        if (result.status == SearchStatus::Complete && front == truth) ++exact;
        if (!first_front) {
          first_front = front;
        } else if (front != *first_front) {
          instance_invariant = false;
        }
      }
    }
    if (instance_invariant) ++invariant_instances;
  }

  const double elapsed = seconds_since(start);
  ExactnessOutcome outcome;
  {
    std::ostringstream detail;
    detail << exact << "/" << runs << " runs matched the enumeration oracle on " << suite.size()
           << " instances in " << elapsed << "s (budget 300s)";
    outcome.exactness.label = "every selection/branching combination reproduces the oracle front";
    outcome.exactness.passed = exact == runs && elapsed < 300.0;
    outcome.exactness.detail = detail.str();
  }
  {
    std::ostringstream detail;
    detail << invariant_instances << "/" << suite.size()
           << " instances returned one identical front across all " << kSelections.size() * kRules.size()
           << " combinations";
    outcome.invariance.label = "the nondominated set is invariant across combinations";
    outcome.invariance.passed = invariant_instances == suite.size();
    outcome.invariance.detail = detail.str();
  }
  return outcome;
}

// ---------------------------------------------------------------------------
// Criterion 3: every published bound set is a true lower bound for its node.
// ---------------------------------------------------------------------------

Criterion check_lower_bound_validity() {
  std::uint64_t nodes = 0;
  std::uint64_t images_checked = 0;
  std::uint64_t violations = 0;
  std::uint64_t infeasible_mismatches = 0;

  for (const MoilpInstance& instance : benchmark_suite()) {
    SearchConfig config;
    config.selection = SelectionStrategy::HypervolumeGap;
    config.rule = BranchingRuleKind::HowFractional;
    config.observer = [&](const mobb::NodeObservation& obs) {
      ++nodes;
      const auto feasible = mobb::enumerate_feasible_images(obs.instance, obs.node);
      if (obs.lbs.infeasible) {
        if (!feasible.empty()) ++infeasible_mismatches;
        return;
      }
      for (const auto& y : feasible) {
        ++images_checked;
        for (const auto& facet : obs.lbs.facets) {
          double dot = 0.0;
          for (int k = 0; k < obs.instance.num_objectives; ++k) {
            dot += facet.normal[k] * static_cast<double>(y[k]);
          }
          if (dot < facet.offset - 1e-6) {
            ++violations;
            break;
          }
        }
      }
    };
    const SearchResult result = mobb::solve(instance, config);
    if (result.status != SearchStatus::Complete) ++violations;
  }

  Criterion criterion;
  criterion.label = "every node's bound set is valid for the node's feasible images";
  criterion.passed = violations == 0 && infeasible_mismatches == 0 && nodes > 0;
  std::ostringstream detail;
  detail << images_checked << " feasible images checked across " << nodes << " nodes; "
         << violations << " facet violations, " << infeasible_mismatches
         << " wrong infeasibility claims";
  criterion.detail = detail.str();
  return criterion;
}

// ---------------------------------------------------------------------------
// Criterion 4: local upper bounds characterize the search region on a grid.
// ---------------------------------------------------------------------------

Criterion check_local_upper_bounds() {
  std::mt19937_64 rng(424242);
  std::uint64_t mismatches = 0;
  std::uint64_t points_checked = 0;

  for (int sequence = 0; sequence < 200; ++sequence) {
    const int p = 2 + sequence % 2;
    IncumbentList incumbents;
    LocalUpperBoundSet lubs(std::vector<std::int64_t>(p, 13));
    const int inserts = 1 + static_cast<int>(rng() % 8);
    for (int i = 0; i < inserts; ++i) {
      std::vector<std::int64_t> y(p);
      for (auto& v : y) v = static_cast<std::int64_t>(rng() % 13);
      SolutionPoint sol;
      sol.y = y;
      sol.display_y = y;
      if (incumbents.try_insert(sol).accepted) lubs.insert(y);
    }
    std::vector<std::vector<std::int64_t>> incumbent_images;
    for (const auto& sol : incumbents.points()) incumbent_images.push_back(sol.y);

    std::vector<std::int64_t> g(p, 0);
    while (true) {
      ++points_checked;
      const bool in_region = mobb::test::strictly_below_some(g, lubs.bounds());
      const bool dominated = mobb::test::weakly_dominated_by_any(g, incumbent_images);
      if (in_region != !dominated) ++mismatches;
      int k = p - 1;
      ++g[k];
      while (k >= 0 && g[k] > 12) {
        g[k] = 0;
        --k;
        if (k >= 0) ++g[k];
      }
      if (k < 0) break;
    }
  }

  Criterion criterion;
  criterion.label = "local upper bounds exactly delimit the search region";
  criterion.passed = mismatches == 0;
  std::ostringstream detail;
  detail << points_checked << " grid points against 200 random incumbent sequences; " << mismatches
         << " mismatches";
  criterion.detail = detail.str();
  return criterion;
}

// ---------------------------------------------------------------------------
// Criterion 5: both biobjective bound-set algorithms find the same extremes.
// ---------------------------------------------------------------------------

Criterion check_biobjective_equivalence() {
  std::mt19937_64 rng(31337);
  mobb::SimplexSolver solver;
  int compared = 0;
  int mismatched = 0;

  for (int trial = 0; trial < 100; ++trial) {
    const int n = 6 + static_cast<int>(rng() % 5);
    std::vector<std::int64_t> weights(n);
    std::vector<std::vector<std::int64_t>> profits(2, std::vector<std::int64_t>(n));
    std::int64_t total = 0;
    for (int i = 0; i < n; ++i) {
      weights[i] = 1 + static_cast<std::int64_t>(rng() % 12);
      total += weights[i];
      for (int k = 0; k < 2; ++k) profits[k][i] = 1 + static_cast<std::int64_t>(rng() % 15);
    }
    const MoilpInstance instance = mobb::test::tiny_knapsack(weights, (total + 1) / 2, profits);
    Subproblem sub = mobb::root_subproblem(instance);
    for (int i = 0; i < n; ++i) {
      const std::uint64_t roll = rng() % 4;
      if (roll == 0) sub.upper[i] = 0;
      if (roll == 1) sub.lower[i] = 1;
    }

    const LowerBoundSet a = mobb::dichotomic_bound_set(solver, instance, sub);
    const LowerBoundSet b = mobb::outer_approximation_bound_set(solver, instance, sub);
    if (a.infeasible != b.infeasible) {
      ++mismatched;
      continue;
    }
    if (a.infeasible) continue;
    ++compared;
    bool same = a.extreme_points.size() == b.extreme_points.size();
    for (const auto& ep : a.extreme_points) {
      same = same && contains_image(b.extreme_points, ep.y, 1e-6);
    }
    for (const auto& ep : b.extreme_points) {
      same = same && contains_image(a.extreme_points, ep.y, 1e-6);
    }
    if (!same) ++mismatched;
  }

  Criterion criterion;
  criterion.label = "dichotomic search and outer approximation agree on biobjective extremes";
  criterion.passed = mismatched == 0 && compared >= 50;
  std::ostringstream detail;
  detail << compared << " feasible subproblems compared, " << mismatched << " mismatches";
  criterion.detail = detail.str();
  return criterion;
}

// ---------------------------------------------------------------------------
// Criterion 6: the simplex solver matches exhaustive vertex enumeration.
// ---------------------------------------------------------------------------

Criterion check_lp_exactness() {
  std::mt19937_64 rng(20240518);
  auto draw = [&](std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  mobb::SimplexSolver solver;
  int wrong = 0;
  int optimal = 0;
  int infeasible = 0;

  for (int trial = 0; trial < 500; ++trial) {
    const int n = static_cast<int>(draw(1, 8));
    const int m = static_cast<int>(draw(0, 5));
    mobb::LpProblem lp;
    lp.objective.resize(n);
    for (double& c : lp.objective) c = static_cast<double>(draw(-9, 9));
    lp.lower.resize(n);
    lp.upper.resize(n);
    for (int i = 0; i < n; ++i) {
      const std::int64_t lo = draw(-3, 3);
      lp.lower[i] = static_cast<double>(lo);
      lp.upper[i] = static_cast<double>(lo + draw(0, 4));
    }
    lp.rows.assign(m, std::vector<double>(n));
    lp.rhs.resize(m);
    lp.senses.resize(m);
    for (int r = 0; r < m; ++r) {
      for (double& a : lp.rows[r]) a = static_cast<double>(draw(-4, 4));
      lp.rhs[r] = static_cast<double>(draw(-6, 10));
      lp.senses[r] = draw(0, 3) == 0 ? mobb::RowSense::Equal : mobb::RowSense::LessEqual;
    }

    const mobb::test::VertexOptimum truth = mobb::test::enumerate_lp_optimum(lp);
    const mobb::LpResult got = solver.solve(lp);
    if (!truth.feasible) {
      ++infeasible;
      if (got.status != mobb::LpStatus::Infeasible) ++wrong;
      continue;
    }
    ++optimal;
    if (got.status != mobb::LpStatus::Optimal) {
      ++wrong;
      continue;
    }
    if (std::abs(got.objective_value - truth.value) > 1e-6 * (1.0 + std::abs(truth.value))) ++wrong;
  }

  Criterion criterion;
  criterion.label = "the simplex solver is exact on random bounded LPs";
  criterion.passed = wrong == 0 && optimal > 100 && infeasible > 20;
  std::ostringstream detail;
  detail << optimal << " optimal and " << infeasible << " infeasible instances out of 500; " << wrong
         << " disagreements with vertex enumeration";
  criterion.detail = detail.str();
  return criterion;
}

// ---------------------------------------------------------------------------
// Criterion 7: gap measures behave sanely on every scored node.
// ---------------------------------------------------------------------------

Criterion check_gap_sanity() {
  std::uint64_t nodes = 0;
  std::uint64_t bound_terms = 0;
  std::uint64_t failures = 0;

  const auto sets_equal = [](const LowerBoundSet& lbs, const IncumbentList& incumbents,
                             double tol) {
    for (const auto& ep : lbs.extreme_points) {
      bool hit = false;
      for (const auto& sol : incumbents.points()) {
        double dist = 0.0;
        for (std::size_t k = 0; k < ep.y.size(); ++k) {
          const double d = ep.y[k] - static_cast<double>(sol.y[k]);
          dist += d * d;
        }
        if (std::sqrt(dist) <= tol) hit = true;
      }
      if (!hit) return false;
    }
    for (const auto& sol : incumbents.points()) {
      bool hit = false;
      for (const auto& ep : lbs.extreme_points) {
        double dist = 0.0;
        for (std::size_t k = 0; k < ep.y.size(); ++k) {
          const double d = ep.y[k] - static_cast<double>(sol.y[k]);
          dist += d * d;
        }
        if (std::sqrt(dist) <= tol) hit = true;
      }
      if (!hit) return false;
    }
    return true;
  };

  const std::vector<MoilpInstance> suite = benchmark_suite();
  for (std::size_t index = 0; index < suite.size(); index += 3) {
    const MoilpInstance& instance = suite[index];
    for (const SelectionStrategy selection :
         {SelectionStrategy::HypervolumeGap, SelectionStrategy::HypervolumeBox,
          SelectionStrategy::Hausdorff, SelectionStrategy::WidthOfEnclosure}) {
      SearchConfig config;
      config.selection = selection;
      config.observer = [&](const mobb::NodeObservation& obs) {
        if (obs.lbs.infeasible) return;
        ++nodes;

        const mobb::GapScore score =
            mobb::score_node(selection, obs.lbs, obs.incumbents, obs.lubs);
        if (obs.incumbents.empty()) {
          if (score.value != std::numeric_limits<double>::infinity()) ++failures;
          return;
        }
        if (!(score.value >= 0.0)) ++failures;

        for (const auto& u : obs.lubs.bounds()) {
          if (!mobb::zone_intersects_bound_set(u, obs.lbs)) continue;
          ++bound_terms;
          const double simplex = mobb::hvg_simplex_volume(u, obs.lbs);
          const double box = mobb::hvb_box_volume(u, obs.lbs);
          const double width = mobb::woe_min_gap(u, obs.lbs);
          if (simplex < 0.0 || box < 0.0 || width < 0.0) ++failures;
          if (simplex > box + 1e-9 * (1.0 + box)) ++failures;
        }

        const double hausdorff = mobb::score_hd(obs.lbs, obs.incumbents).value;
        if (hausdorff < 0.0) ++failures;
        if (hausdorff <= 1e-9 && !sets_equal(obs.lbs, obs.incumbents, 1e-6)) ++failures;
        if (sets_equal(obs.lbs, obs.incumbents, 1e-9) && hausdorff > 1e-6) ++failures;
      };
      const SearchResult result = mobb::solve(instance, config);
      if (result.status != SearchStatus::Complete) ++failures;
    }
  }

  Criterion criterion;
  criterion.label = "gap measures are nonnegative, ordered, and infinite only before incumbents";
  criterion.passed = failures == 0 && nodes > 0 && bound_terms > 0;
  std::ostringstream detail;
  detail << bound_terms << " per-bound terms over " << nodes << " scored nodes; " << failures
         << " violations";
  criterion.detail = detail.str();
  return criterion;
}

// ---------------------------------------------------------------------------
// Criterion 8: adaptive selection beats the baseline on the harder suite.
// ---------------------------------------------------------------------------

Criterion check_node_count_trend() {
  const auto start = std::chrono::steady_clock::now();
  double adaptive_sum = 0.0;
  double baseline_sum = 0.0;
  int adaptive_wins = 0;
  const int count = 10;

  for (std::uint64_t seed = 1; seed <= count; ++seed) {
    const MoilpInstance instance = mobb::generate(mobb::knapsack_spec(3, 20, seed));

    SearchConfig adaptive;
    adaptive.selection = SelectionStrategy::HypervolumeGap;
    adaptive.rule = BranchingRuleKind::HowFractional;
    const SearchResult a = mobb::solve(instance, adaptive);

    SearchConfig baseline;
    baseline.selection = SelectionStrategy::BreadthFirst;
    baseline.rule = BranchingRuleKind::SumOfRatios;
    const SearchResult b = mobb::solve(instance, baseline);

    if (a.status != SearchStatus::Complete || b.status != SearchStatus::Complete) {
      Criterion criterion;
      criterion.label = "hypervolume-guided search expands fewer nodes than the baseline";
      criterion.passed = false;
      criterion.detail = "a trend run did not complete";
      return criterion;
    }
    adaptive_sum += static_cast<double>(a.nodes_created);
    baseline_sum += static_cast<double>(b.nodes_created);
    if (a.nodes_created < b.nodes_created) ++adaptive_wins;
  }

  const double elapsed = seconds_since(start);
  const double adaptive_mean = adaptive_sum / count;
  const double baseline_mean = baseline_sum / count;

  Criterion criterion;
  criterion.label = "hypervolume-guided search expands fewer nodes than the baseline";
  criterion.passed =
      adaptive_mean < baseline_mean && adaptive_wins >= 7 && elapsed < 600.0;
  std::ostringstream detail;
  detail << "HVG-HF mean " << adaptive_mean << " vs BF-SR mean " << baseline_mean << " nodes created; "
         << adaptive_wins << "/" << count << " strict wins in " << elapsed << "s (budget 600s)";
  criterion.detail = detail.str();
  return criterion;
}

// ---------------------------------------------------------------------------
// Criterion 9: benchmark batches are deterministic end to end.
// ---------------------------------------------------------------------------

std::string strip_time_column(const std::string& csv) {
  std::string out;
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line)) {
    const auto cut = line.rfind(',');
    out += line.substr(0, cut);
    out += '\n';
  }
  return out;
}

Criterion check_batch_determinism() {
  namespace fs = std::filesystem;
  const fs::path dir =
      fs::temp_directory_path() / ("mobb_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir / "instances");

  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const auto spec = mobb::knapsack_spec(3, 10, seed);
    mobb::save_instance(mobb::generate(spec),
                        (dir / "instances" / mobb::instance_filename(spec)).string());
  }

  mobb::ExperimentPlan plan;
  plan.instance_patterns = {(dir / "instances" / "*.json").string()};
  plan.selections = {SelectionStrategy::HypervolumeGap, SelectionStrategy::DepthFirst};
  plan.rules = {BranchingRuleKind::HowFractional, BranchingRuleKind::SumOfRatios};
  plan.output_dir = (dir / "out").string();

  const auto read_csv = [&] {
    std::ifstream in(dir / "out" / "results.csv", std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  };

  std::ostringstream log;
  const mobb::BenchReport first = mobb::run_bench(plan, log);
  const std::string first_csv = read_csv();
  const mobb::BenchReport second = mobb::run_bench(plan, log);
  const std::string second_csv = read_csv();
  fs::remove_all(dir);

  Criterion criterion;
  criterion.label = "repeated benchmark batches produce identical reports";
  const bool same = strip_time_column(first_csv) == strip_time_column(second_csv);
  criterion.passed = same && first.exit_code == 0 && second.exit_code == 0 &&
                     first.rows.size() == second.rows.size() && !first.rows.empty();
  std::ostringstream detail;
  detail << first.rows.size() << " rows per batch; reports "
         << (same ? "identical" : "DIFFER") << " outside the timing column";
  criterion.detail = detail.str();
  return criterion;
}

void report(const Criterion& criterion, int index, bool& all_passed) {
  all_passed = all_passed && criterion.passed;
  std::cout << (criterion.passed ? "pass" : "FAIL") << " [" << index << "/9] " << criterion.label
            << " — " << criterion.detail << "\n";
}

}  // namespace

int main() {
  std::cout << "acceptance: exact multi-objective branch and bound\n";
  bool all_passed = true;

  const ExactnessOutcome exactness = check_exactness_and_invariance();
  report(exactness.exactness, 1, all_passed);
  report(exactness.invariance, 2, all_passed);
  report(check_lower_bound_validity(), 3, all_passed);
  report(check_local_upper_bounds(), 4, all_passed);
  report(check_biobjective_equivalence(), 5, all_passed);
  report(check_lp_exactness(), 6, all_passed);
  report(check_gap_sanity(), 7, all_passed);
  report(check_node_count_trend(), 8, all_passed);
  report(check_batch_determinism(), 9, all_passed);

  std::cout << (all_passed ? "acceptance: all criteria passed\n"
                           : "acceptance: FAILURES detected\n");
  return all_passed ? 0 : 1;
}
