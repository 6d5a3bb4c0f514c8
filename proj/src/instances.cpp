// SPDX-License-Identifier: Apache-2.0
#include "mobb/instances.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace mobb {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& message) {
  throw std::invalid_argument("instance schema: " + message);
}

const json& require_field(const json& object, const char* name) {
  const auto it = object.find(name);
  if (it == object.end()) schema_error(std::string("missing field \"") + name + '"');
  return *it;
}

std::int64_t as_integer(const json& value, const std::string& where) {
  if (!value.is_number_integer()) schema_error('"' + where + "\" must be an integer");
  return value.get<std::int64_t>();
}

std::vector<std::int64_t> as_integer_row(const json& value, std::size_t expected,
                                         const std::string& where) {
  if (!value.is_array() || value.size() != expected)
    schema_error('"' + where + "\" must be an array of " + std::to_string(expected) + " integers");
  std::vector<std::int64_t> row;
  row.reserve(expected);
  for (std::size_t i = 0; i < value.size(); ++i)
    row.push_back(as_integer(value[i], where + '[' + std::to_string(i) + ']'));
  return row;
}

std::vector<std::vector<std::int64_t>> as_integer_matrix(const json& value, std::size_t rows,
                                                         std::size_t cols, const std::string& where) {
  if (!value.is_array() || value.size() != rows)
    schema_error('"' + where + "\" must be an array of " + std::to_string(rows) + " rows");
  std::vector<std::vector<std::int64_t>> matrix;
  matrix.reserve(rows);
  for (std::size_t r = 0; r < rows; ++r)
    matrix.push_back(as_integer_row(value[r], cols, where + '[' + std::to_string(r) + ']'));
  return matrix;
}

int require_objective_count(const json& object) {
  const std::int64_t p = as_integer(require_field(object, "p"), "p");
  if (p != 2 && p != 3) schema_error("\"p\" must be 2 or 3");
  return static_cast<int>(p);
}

std::int64_t require_positive(const json& object, const char* name) {
  const std::int64_t v = as_integer(require_field(object, name), name);
  if (v <= 0) schema_error(std::string("\"") + name + "\" must be positive");
  if (v > 100000) schema_error(std::string("\"") + name + "\" is implausibly large");
  return v;
}

MoilpInstance parse_knapsack(const json& doc) {
  KnapsackData data;
  data.p = require_objective_count(doc);
  data.n = static_cast<int>(require_positive(doc, "n"));
  data.capacity = as_integer(require_field(doc, "capacity"), "capacity");
  data.weights = as_integer_row(require_field(doc, "weights"), data.n, "weights");
  data.profits = as_integer_matrix(require_field(doc, "profits"), data.p, data.n, "profits");
  return from_knapsack(data);
}

MoilpInstance parse_gap(const json& doc) {
  GapData data;
  data.p = require_objective_count(doc);
  data.machines = static_cast<int>(require_positive(doc, "machines"));
  data.jobs = static_cast<int>(require_positive(doc, "jobs"));
  const auto m = static_cast<std::size_t>(data.machines);
  const auto j = static_cast<std::size_t>(data.jobs);
  data.capacities = as_integer_row(require_field(doc, "capacities"), m, "capacities");
  data.resources = as_integer_matrix(require_field(doc, "resources"), m, j, "resources");
  const json& costs = require_field(doc, "costs");
  if (!costs.is_array() || costs.size() != static_cast<std::size_t>(data.p))
    schema_error("\"costs\" must be an array of " + std::to_string(data.p) + " matrices");
  for (std::size_t k = 0; k < costs.size(); ++k)
    data.costs.push_back(as_integer_matrix(costs[k], m, j, "costs[" + std::to_string(k) + ']'));
  return from_gap(data);
}

/// Uniform integer in [lo, hi] drawn with modulo reduction so instance bytes
/// do not depend on any standard-library distribution implementation.
std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

MoilpInstance generate_knapsack(const GeneratorSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  KnapsackData data;
  data.p = spec.num_objectives;
  data.n = spec.num_items;
  data.weights.reserve(data.n);
  std::int64_t total_weight = 0;
  for (int i = 0; i < data.n; ++i) {
    data.weights.push_back(draw(rng, spec.value_lo, spec.value_hi));
    total_weight += data.weights.back();
  }
  data.profits.assign(data.p, {});
  for (int k = 0; k < data.p; ++k) {
    data.profits[k].reserve(data.n);
    for (int i = 0; i < data.n; ++i) data.profits[k].push_back(draw(rng, spec.value_lo, spec.value_hi));
  }
  data.capacity = static_cast<std::int64_t>(
      std::ceil(spec.tightness * static_cast<double>(total_weight)));
  return from_knapsack(data);
}

MoilpInstance generate_gap(const GeneratorSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  GapData data;
  data.p = spec.num_objectives;
  data.machines = spec.machines;
  data.jobs = spec.jobs;
  data.resources.assign(data.machines, {});
  for (int i = 0; i < data.machines; ++i) {
    data.resources[i].reserve(data.jobs);
    for (int j = 0; j < data.jobs; ++j)
      data.resources[i].push_back(draw(rng, spec.value_lo, spec.value_hi));
  }
  data.costs.assign(data.p, std::vector<std::vector<std::int64_t>>(data.machines));
  for (int k = 0; k < data.p; ++k)
    for (int i = 0; i < data.machines; ++i) {
      data.costs[k][i].reserve(data.jobs);
      for (int j = 0; j < data.jobs; ++j)
        data.costs[k][i].push_back(draw(rng, spec.value_lo, spec.value_hi));
    }
  data.capacities.reserve(data.machines);
  for (int i = 0; i < data.machines; ++i) {
    std::int64_t row_sum = 0;
    for (int j = 0; j < data.jobs; ++j) row_sum += data.resources[i][j];
    data.capacities.push_back(static_cast<std::int64_t>(std::ceil(
        spec.tightness * static_cast<double>(row_sum) / static_cast<double>(data.machines))));
  }
  return from_gap(data);
}

void validate_spec(const GeneratorSpec& spec) {
  if (spec.num_objectives != 2 && spec.num_objectives != 3)
    throw std::invalid_argument("generate: objective count must be 2 or 3");
  if (spec.value_lo > spec.value_hi || spec.value_lo < 0)
    throw std::invalid_argument("generate: value range must be non-empty and non-negative");
  if (!(spec.tightness > 0.0)) throw std::invalid_argument("generate: tightness must be positive");
  if (spec.family == "knapsack") {
    if (spec.num_items <= 0) throw std::invalid_argument("generate: knapsack needs a positive item count");
  } else if (spec.family == "gap") {
    if (spec.machines < 2 || spec.jobs < 2)
      throw std::invalid_argument("generate: gap needs at least 2 machines and 2 jobs");
  } else {
    throw std::invalid_argument("generate: unknown family \"" + spec.family + '"');
  }
}

}  // namespace

GeneratorSpec knapsack_spec(int num_objectives, int num_items, std::uint64_t seed) {
  GeneratorSpec spec;
  spec.family = "knapsack";
  spec.num_objectives = num_objectives;
  spec.num_items = num_items;
  spec.seed = seed;
  spec.value_lo = 1;
  spec.value_hi = 100;
  spec.tightness = 0.5;
  return spec;
}

GeneratorSpec gap_spec(int num_objectives, int machines, int jobs, std::uint64_t seed) {
  GeneratorSpec spec;
  spec.family = "gap";
  spec.num_objectives = num_objectives;
  spec.machines = machines;
  spec.jobs = jobs;
  spec.seed = seed;
  spec.value_lo = 1;
  spec.value_hi = 20;
  spec.tightness = 0.8;
  return spec;
}

MoilpInstance generate(const GeneratorSpec& spec) {
  validate_spec(spec);
  return spec.family == "knapsack" ? generate_knapsack(spec) : generate_gap(spec);
}

std::string instance_filename(const GeneratorSpec& spec) {
  validate_spec(spec);
  const int n = spec.family == "knapsack" ? spec.num_items : spec.machines * spec.jobs;
  std::ostringstream name;
  name << 'p' << spec.num_objectives << "_n" << n << "_s" << spec.seed << ".json";
  return name.str();
}

MoilpInstance instance_from_text(const std::string& text) {
  const json doc = json::parse(text);
  if (!doc.is_object()) schema_error("top level must be an object");
  const json& type = require_field(doc, "type");
  if (!type.is_string()) schema_error("\"type\" must be a string");
  const auto family = type.get<std::string>();
  if (family == "knapsack") return parse_knapsack(doc);
  if (family == "gap") return parse_gap(doc);
  schema_error("unknown \"type\": " + family);
}

MoilpInstance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return instance_from_text(buffer.str());
}

std::string instance_to_text(const MoilpInstance& instance) {
  json doc;
  if (instance.knapsack) {
    const KnapsackData& k = *instance.knapsack;
    doc = json{{"type", "knapsack"}, {"p", k.p},           {"n", k.n},
               {"capacity", k.capacity},  {"weights", k.weights}, {"profits", k.profits}};
  } else if (instance.gap) {
    const GapData& g = *instance.gap;
    doc = json{{"type", "gap"},           {"p", g.p},
               {"machines", g.machines},  {"jobs", g.jobs},
               {"capacities", g.capacities}, {"resources", g.resources},
               {"costs", g.costs}};
  } else {
    throw std::invalid_argument("save: only canonical knapsack or gap instances can be serialized");
  }
  return doc.dump(2) + "\n";
}

void save_instance(const MoilpInstance& instance, const std::string& path) {
  const std::string text = instance_to_text(instance);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write instance file: " + path);
  out << text;
  if (!out) throw std::runtime_error("failed writing instance file: " + path);
}

}  // namespace mobb
