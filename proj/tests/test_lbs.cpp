// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "mobb/lbs.hpp"
#include "mobb/model.hpp"
#include "mobb/oracle.hpp"
#include "mobb/simplex.hpp"
#include "support/test_support.hpp"

using mobb::compute_lower_bound_set;
using mobb::dichotomic_bound_set;
using mobb::LowerBoundSet;
using mobb::MoilpInstance;
using mobb::outer_approximation_bound_set;
using mobb::RowSense;
using mobb::SimplexSolver;
using mobb::Subproblem;

namespace {

void check_invariants(const LowerBoundSet& lbs) {
  const int p = lbs.dimension();
  for (const auto& facet : lbs.facets) {
    double sum = 0.0;
    for (double v : facet.normal) {
      CHECK(v >= -1e-9);
      sum += v;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
  }
  for (const auto& ep : lbs.extreme_points) {
    bool attains_some = lbs.facets.empty();
    for (const auto& facet : lbs.facets) {
      double dot = 0.0;
      for (int k = 0; k < p; ++k) dot += facet.normal[k] * ep.y[k];
      CHECK(dot >= facet.offset - 1e-6 * (1.0 + std::abs(facet.offset)));
      if (std::abs(dot - facet.offset) <= 1e-6 * (1.0 + std::abs(facet.offset))) attains_some = true;
    }
    CHECK(attains_some);
  }
  // Ideal point is the componentwise minimum of the extremes.
  if (!lbs.extreme_points.empty()) {
    for (int k = 0; k < p; ++k) {
      double low = lbs.extreme_points.front().y[k];
      for (const auto& ep : lbs.extreme_points) low = std::min(low, ep.y[k]);
      CHECK(lbs.ideal[k] == doctest::Approx(low).epsilon(1e-9));
    }
  }
  // Extreme points are pairwise nondominated.
  for (std::size_t a = 0; a < lbs.extreme_points.size(); ++a) {
    for (std::size_t b = 0; b < lbs.extreme_points.size(); ++b) {
      if (a == b) continue;
      bool all_le = true;
      bool some_lt = false;
      for (int k = 0; k < p; ++k) {
        all_le = all_le && lbs.extreme_points[a].y[k] <= lbs.extreme_points[b].y[k] + 1e-9;
        some_lt = some_lt || lbs.extreme_points[a].y[k] < lbs.extreme_points[b].y[k] - 1e-9;
      }
      CHECK_FALSE((all_le && some_lt));
    }
  }
}

void check_validity(const MoilpInstance& instance, const Subproblem& sub, const LowerBoundSet& lbs) {
  const auto images = mobb::enumerate_feasible_images(instance, sub);
  if (lbs.infeasible) {
    CHECK(images.empty());
    return;
  }
  for (const auto& y : images) {
    for (const auto& facet : lbs.facets) {
      double dot = 0.0;
      for (int k = 0; k < instance.num_objectives; ++k) dot += facet.normal[k] * static_cast<double>(y[k]);
      CHECK(dot >= facet.offset - 1e-6 * (1.0 + std::abs(facet.offset)));
    }
  }
}

bool contains_point(const std::vector<mobb::ExtremePoint>& eps, const std::vector<double>& y) {
  for (const auto& ep : eps) {
    bool match = true;
    for (std::size_t k = 0; k < y.size(); ++k) match = match && std::abs(ep.y[k] - y[k]) <= 1e-6;
    if (match) return true;
  }
  return false;
}

MoilpInstance random_knapsack(std::mt19937_64& rng, int p, int n) {
  std::vector<std::int64_t> weights(n);
  std::vector<std::vector<std::int64_t>> profits(p, std::vector<std::int64_t>(n));
  std::int64_t total = 0;
  for (int i = 0; i < n; ++i) {
    weights[i] = 1 + static_cast<std::int64_t>(rng() % 10);
    total += weights[i];
    for (int k = 0; k < p; ++k) profits[k][i] = 1 + static_cast<std::int64_t>(rng() % 12);
  }
  return mobb::test::tiny_knapsack(weights, (total + 1) / 2, profits);
}

}  // namespace

TEST_CASE("dichotomic search recovers the simplex frontier") {
  // min (x1, x2) subject to x1 + x2 >= 1 on the unit box, written as
  // -x1 - x2 <= -1. The frontier is the segment from (1,0) to (0,1).
  const MoilpInstance instance = mobb::test::make_instance(
      {{1, 0}, {0, 1}}, {{-1, -1}}, {-1}, {RowSense::LessEqual}, {0, 0}, {1, 1});
  SimplexSolver solver;
  const LowerBoundSet lbs = dichotomic_bound_set(solver, instance, mobb::root_subproblem(instance));

  REQUIRE_FALSE(lbs.infeasible);
  CHECK_FALSE(lbs.truncated);
  REQUIRE(lbs.extreme_points.size() == 2);
  CHECK(contains_point(lbs.extreme_points, {1.0, 0.0}));
  CHECK(contains_point(lbs.extreme_points, {0.0, 1.0}));

  bool found_diagonal = false;
  for (const auto& facet : lbs.facets) {
    if (std::abs(facet.normal[0] - 0.5) <= 1e-9 && std::abs(facet.normal[1] - 0.5) <= 1e-9 &&
        std::abs(facet.offset - 0.5) <= 1e-9) {
      found_diagonal = true;
    }
  }
  CHECK(found_diagonal);
  check_invariants(lbs);
}

TEST_CASE("a single-point image yields one extreme from both lexicographic probes") {
  // Both objectives equal x1, and x1 is fixed to 1.
  const MoilpInstance instance =
      mobb::test::make_instance({{1}, {1}}, {}, {}, {}, {1}, {1});
  SimplexSolver solver;
  const LowerBoundSet lbs = dichotomic_bound_set(solver, instance, mobb::root_subproblem(instance));
  REQUIRE_FALSE(lbs.infeasible);
  REQUIRE(lbs.extreme_points.size() == 1);
  CHECK(lbs.extreme_points[0].y[0] == doctest::Approx(1.0));
  CHECK(lbs.extreme_points[0].y[1] == doctest::Approx(1.0));
  check_invariants(lbs);
}

TEST_CASE("infeasible relaxations come back empty") {
  const MoilpInstance instance = mobb::test::make_instance(
      {{1, 0}, {0, 1}}, {{0, 0}}, {-1}, {RowSense::LessEqual}, {0, 0}, {1, 1});
  SimplexSolver solver;
  const LowerBoundSet lbs = compute_lower_bound_set(solver, instance, mobb::root_subproblem(instance));
  CHECK(lbs.infeasible);
  CHECK(lbs.empty());
  CHECK(lbs.extreme_points.empty());
}

TEST_CASE("outer approximation finds the three-objective simplex face") {
  // min (x1, x2, x3) with x1 + x2 + x3 >= 1 on the unit cube.
  const MoilpInstance instance = mobb::test::make_instance(
      {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {{-1, -1, -1}}, {-1}, {RowSense::LessEqual},
      {0, 0, 0}, {1, 1, 1});
  SimplexSolver solver;
  const LowerBoundSet lbs =
      outer_approximation_bound_set(solver, instance, mobb::root_subproblem(instance));

  REQUIRE_FALSE(lbs.infeasible);
  CHECK(contains_point(lbs.extreme_points, {1.0, 0.0, 0.0}));
  CHECK(contains_point(lbs.extreme_points, {0.0, 1.0, 0.0}));
  CHECK(contains_point(lbs.extreme_points, {0.0, 0.0, 1.0}));

  bool found_center = false;
  for (const auto& facet : lbs.facets) {
    bool uniform = true;
    for (double v : facet.normal) uniform = uniform && std::abs(v - 1.0 / 3.0) <= 1e-6;
    if (uniform && std::abs(facet.offset - 1.0 / 3.0) <= 1e-6) found_center = true;
  }
  CHECK(found_center);
  check_invariants(lbs);
}

TEST_CASE("bound sets are valid lower bounds on random knapsacks") {
  std::mt19937_64 rng(555);
  SimplexSolver solver;
  for (int trial = 0; trial < 12; ++trial) {
    const int p = 2 + trial % 2;
    const MoilpInstance instance = random_knapsack(rng, p, 7);
    Subproblem sub = mobb::root_subproblem(instance);
    if (trial % 3 == 1) sub.upper[0] = 0;
    if (trial % 3 == 2) sub.lower[1] = 1;
    const LowerBoundSet lbs = compute_lower_bound_set(solver, instance, sub);
    CAPTURE(trial);
    check_invariants(lbs);
    check_validity(instance, sub, lbs);
  }
}

TEST_CASE("dichotomic and outer approximation agree on biobjective extremes") {
  std::mt19937_64 rng(808);
  SimplexSolver solver;
  for (int trial = 0; trial < 10; ++trial) {
    const MoilpInstance instance = random_knapsack(rng, 2, 6);
    const Subproblem root = mobb::root_subproblem(instance);
    const LowerBoundSet a = dichotomic_bound_set(solver, instance, root);
    const LowerBoundSet b = outer_approximation_bound_set(solver, instance, root);
    CAPTURE(trial);
    REQUIRE(a.infeasible == b.infeasible);
    if (a.infeasible) continue;
    CHECK(a.extreme_points.size() == b.extreme_points.size());
    for (const auto& ep : a.extreme_points) CHECK(contains_point(b.extreme_points, ep.y));
    for (const auto& ep : b.extreme_points) CHECK(contains_point(a.extreme_points, ep.y));
  }
}

TEST_CASE("facet vertices solve the facet equality systems") {
  std::vector<mobb::Facet> facets;
  facets.push_back({{0.5, 0.5}, 0.5});
  facets.push_back({{1.0, 0.0}, 0.0});
  facets.push_back({{0.0, 1.0}, 0.0});
  const auto vertices = mobb::facet_vertices(facets, 2);
  REQUIRE_FALSE(vertices.empty());
  for (const auto& v : vertices) {
    for (const auto& facet : facets) {
      CHECK(facet.normal[0] * v[0] + facet.normal[1] * v[1] >= facet.offset - 1e-9);
    }
  }
  bool has_corner = false;
  for (const auto& v : vertices) {
    if (std::abs(v[0] - 1.0) <= 1e-9 && std::abs(v[1]) <= 1e-9) has_corner = true;
  }
  CHECK(has_corner);
}

TEST_CASE("integral extremes become incumbent candidates with exact images") {
  const MoilpInstance instance = mobb::test::tiny_knapsack({2, 2, 1}, 3, {{3, 1, 1}, {1, 3, 1}});
  SimplexSolver solver;
  const LowerBoundSet lbs =
      dichotomic_bound_set(solver, instance, mobb::root_subproblem(instance));
  const auto harvest = mobb::integer_feasible_extremes(instance, lbs);

  for (const auto& sol : harvest) {
    for (const std::int64_t v : sol.x) CHECK((v == 0 || v == 1));
    CHECK(instance.is_feasible(sol.x));
    CHECK(sol.y == instance.image(sol.x));
    CHECK(contains_point(lbs.extreme_points,
                         std::vector<double>(sol.y.begin(), sol.y.end())));
  }
  // The lexicographic endpoints of this knapsack are integral, so the
  // harvest cannot be empty.
  CHECK_FALSE(harvest.empty());
}

TEST_CASE("fractional extremes are not harvested") {
  // The relaxation optimum of this instance sits at x = (1, 0.5).
  const MoilpInstance instance = mobb::test::make_instance(
      {{-2, -3}, {-3, -2}}, {{1, 2}}, {2}, {RowSense::LessEqual}, {0, 0}, {1, 1});
  SimplexSolver solver;
  const LowerBoundSet lbs =
      dichotomic_bound_set(solver, instance, mobb::root_subproblem(instance));
  // Every extreme of this relaxation has the fractional preimage, so
  // nothing can be harvested.
  REQUIRE_FALSE(lbs.extreme_points.empty());
  for (const auto& ep : lbs.extreme_points) {
    CHECK(std::abs(ep.x[1] - 0.5) <= 1e-6);
  }
  CHECK(mobb::integer_feasible_extremes(instance, lbs).empty());

  const auto empty_harvest = mobb::integer_feasible_extremes(instance, LowerBoundSet{});
  CHECK(empty_harvest.empty());
}
