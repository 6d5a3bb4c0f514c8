// SPDX-License-Identifier: Apache-2.0
#ifndef MOBB_INSTANCES_HPP
#define MOBB_INSTANCES_HPP

#include <cstdint>
#include <string>

#include "mobb/model.hpp"

namespace mobb {

/// Recipe for one seeded random instance. Ranges are inclusive and the
/// tightness factor scales the capacity formula of the family.
struct GeneratorSpec {
  std::string family;  // "knapsack" or "gap"
  int num_objectives = 2;
  int num_items = 0;  // knapsack only
  int machines = 0;   // gap only
  int jobs = 0;       // gap only
  std::uint64_t seed = 0;
  std::int64_t value_lo = 1;
  std::int64_t value_hi = 1;
  double tightness = 0.0;
};

/// Knapsack spec with the documented defaults: weights and profits uniform
/// in [1,100], capacity = ceil(0.5 * total weight).
GeneratorSpec knapsack_spec(int num_objectives, int num_items, std::uint64_t seed);

/// GAP spec with the documented defaults: resources and costs uniform in
/// [1,20], capacity_i = ceil(0.8 * row resource sum / machines).
GeneratorSpec gap_spec(int num_objectives, int machines, int jobs, std::uint64_t seed);

/// Draws the instance for `spec`. Deterministic: the same spec always
/// produces the same instance, bit for bit.
MoilpInstance generate(const GeneratorSpec& spec);

/// Canonical file name, e.g. "p3_n30_s7.json" (GAP uses n = machines*jobs).
std::string instance_filename(const GeneratorSpec& spec);

/// Parses one canonical JSON instance document. Schema violations throw
/// std::invalid_argument naming the offending field; malformed JSON throws
/// a parse error carrying the byte position.
MoilpInstance instance_from_text(const std::string& text);

MoilpInstance load_instance(const std::string& path);

/// Serializes the canonical JSON document (save/load round-trips on the
/// JSON value). Only instances built from knapsack or GAP data can be saved.
std::string instance_to_text(const MoilpInstance& instance);

void save_instance(const MoilpInstance& instance, const std::string& path);

}  // namespace mobb

#endif  // MOBB_INSTANCES_HPP
