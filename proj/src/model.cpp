// SPDX-License-Identifier: Apache-2.0
#include "mobb/model.hpp"

#include <stdexcept>
#include <string>

namespace mobb {

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

void check_objective_count(int p) {
  require(p == 2 || p == 3, "instance: number of objectives must be 2 or 3, got " + std::to_string(p));
}

}  // namespace

std::vector<std::int64_t> MoilpInstance::image(const std::vector<std::int64_t>& x) const {
  std::vector<std::int64_t> y(num_objectives, 0);
  for (int k = 0; k < num_objectives; ++k) {
    for (int i = 0; i < num_variables; ++i) y[k] += objective[k][i] * x[i];
  }
  return y;
}

std::vector<std::int64_t> MoilpInstance::display_image(const std::vector<std::int64_t>& x) const {
  std::vector<std::int64_t> y = image(x);
  if (display_maximize) {
    for (auto& v : y) v = -v;
  }
  return y;
}

bool MoilpInstance::is_feasible(const std::vector<std::int64_t>& x) const {
  if (static_cast<int>(x.size()) != num_variables) return false;
  for (int i = 0; i < num_variables; ++i) {
    if (x[i] < lower[i] || x[i] > upper[i]) return false;
  }
  for (int r = 0; r < num_constraints(); ++r) {
    Rational lhs;
    for (int i = 0; i < num_variables; ++i) lhs += constraint[r][i] * Rational(x[i]);
    if (senses[r] == RowSense::LessEqual ? lhs > rhs[r] : lhs != rhs[r]) return false;
  }
  return true;
}

MoilpInstance from_knapsack(const KnapsackData& data) {
  check_objective_count(data.p);
  require(data.n >= 1, "knapsack: need at least one item");
  require(data.capacity > 0, "knapsack: capacity must be positive");
  require(static_cast<int>(data.weights.size()) == data.n, "knapsack: weights size mismatch");
  require(static_cast<int>(data.profits.size()) == data.p, "knapsack: profits must have one row per objective");
  for (int k = 0; k < data.p; ++k) {
    require(static_cast<int>(data.profits[k].size()) == data.n,
            "knapsack: profits row " + std::to_string(k) + " size mismatch");
  }
  for (int i = 0; i < data.n; ++i) {
    require(data.weights[i] >= 0, "knapsack: weight " + std::to_string(i) + " is negative");
  }

  MoilpInstance instance;
  instance.num_objectives = data.p;
  instance.num_variables = data.n;
  instance.display_maximize = true;
  instance.family = "knapsack";
  instance.knapsack = data;

  instance.objective.assign(data.p, std::vector<std::int64_t>(data.n));
  for (int k = 0; k < data.p; ++k) {
    for (int i = 0; i < data.n; ++i) instance.objective[k][i] = -data.profits[k][i];
  }
  instance.display_costs = data.profits;
  instance.variable_weights = data.weights;

  instance.constraint.assign(1, std::vector<Rational>(data.n));
  for (int i = 0; i < data.n; ++i) instance.constraint[0][i] = Rational(data.weights[i]);
  instance.rhs = {Rational(data.capacity)};
  instance.senses = {RowSense::LessEqual};

  instance.lower.assign(data.n, 0);
  instance.upper.assign(data.n, 1);
  return instance;
}

MoilpInstance from_gap(const GapData& data) {
  check_objective_count(data.p);
  require(data.machines >= 2, "gap: need at least two machines");
  require(data.jobs >= 2, "gap: need at least two jobs");
  require(static_cast<int>(data.capacities.size()) == data.machines, "gap: capacities size mismatch");
  require(static_cast<int>(data.resources.size()) == data.machines, "gap: resources must have one row per machine");
  for (int i = 0; i < data.machines; ++i) {
    require(static_cast<int>(data.resources[i].size()) == data.jobs,
            "gap: resources row " + std::to_string(i) + " size mismatch");
    require(data.capacities[i] > 0, "gap: capacity " + std::to_string(i) + " must be positive");
  }
  require(static_cast<int>(data.costs.size()) == data.p, "gap: costs must have one matrix per objective");
  for (int k = 0; k < data.p; ++k) {
    require(static_cast<int>(data.costs[k].size()) == data.machines,
            "gap: costs matrix " + std::to_string(k) + " machine count mismatch");
    for (int i = 0; i < data.machines; ++i) {
      require(static_cast<int>(data.costs[k][i].size()) == data.jobs,
              "gap: costs matrix " + std::to_string(k) + " row " + std::to_string(i) + " size mismatch");
    }
  }

  const int n = data.machines * data.jobs;
  // Column order: variable (i, j) -> i * jobs + j.
  auto col = [&](int machine, int job) { return machine * data.jobs + job; };

  MoilpInstance instance;
  instance.num_objectives = data.p;
  instance.num_variables = n;
  instance.display_maximize = false;
  instance.family = "gap";
  instance.gap = data;

  instance.objective.assign(data.p, std::vector<std::int64_t>(n));
  for (int k = 0; k < data.p; ++k) {
    for (int i = 0; i < data.machines; ++i) {
      for (int j = 0; j < data.jobs; ++j) instance.objective[k][col(i, j)] = data.costs[k][i][j];
    }
  }
  instance.display_costs = instance.objective;
  instance.variable_weights.assign(n, 0);
  for (int i = 0; i < data.machines; ++i) {
    for (int j = 0; j < data.jobs; ++j) instance.variable_weights[col(i, j)] = data.resources[i][j];
  }

  // One assignment row per job, then one capacity row per machine.
  instance.constraint.assign(data.jobs + data.machines, std::vector<Rational>(n));
  instance.rhs.assign(data.jobs + data.machines, Rational(0));
  instance.senses.assign(data.jobs + data.machines, RowSense::Equal);
  for (int j = 0; j < data.jobs; ++j) {
    for (int i = 0; i < data.machines; ++i) instance.constraint[j][col(i, j)] = Rational(1);
    instance.rhs[j] = Rational(1);
  }
  for (int i = 0; i < data.machines; ++i) {
    const int row = data.jobs + i;
    for (int j = 0; j < data.jobs; ++j) instance.constraint[row][col(i, j)] = Rational(data.resources[i][j]);
    instance.rhs[row] = Rational(data.capacities[i]);
    instance.senses[row] = RowSense::LessEqual;
  }

  instance.lower.assign(n, 0);
  instance.upper.assign(n, 1);
  return instance;
}

Subproblem root_subproblem(const MoilpInstance& instance) {
  Subproblem root;
  root.lower = instance.lower;
  root.upper = instance.upper;
  return root;
}

}  // namespace mobb
